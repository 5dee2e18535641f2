#pragma once

// Representation rings R(H) of the finite subgroup types occurring in Bianchi
// groups, with restriction and induction matrices between them.  Character
// values live in Z[zeta3]; no larger cyclotomic ring is needed for these six
// group types.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bianchik/exact_linalg.hpp"

namespace bianchik {

enum class GroupType { Trivial, C2, C3, V4, S3, A4 };

const char* to_string(GroupType g);
GroupType group_type_from_string(const std::string& s);

std::size_t group_order(GroupType g);
// Number of irreducible characters = rank of R(H).
std::size_t irreducible_count(GroupType g);

// a + b*zeta3 with zeta3^2 = -1 - zeta3.
struct CyclotomicInt {
    Int a, b;

    CyclotomicInt() : a(0), b(0) {}
    CyclotomicInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
    CyclotomicInt(long long a_) : a(a_), b(0) {}

    CyclotomicInt conj() const { return CyclotomicInt(a - b, -b); }
    bool is_rational() const { return b == 0; }
    bool operator==(const CyclotomicInt&) const = default;
};

CyclotomicInt operator+(const CyclotomicInt& x, const CyclotomicInt& y);
CyclotomicInt operator-(const CyclotomicInt& x, const CyclotomicInt& y);
CyclotomicInt operator*(const CyclotomicInt& x, const CyclotomicInt& y);

// Rows are irreducibles, columns are conjugacy classes; class 0 is the
// identity class.  Irreducible order is fixed per group (trivial character
// first, then by dimension and by character values along the class list) so
// that all matrix bases are deterministic.
struct CharacterTable {
    GroupType group;
    std::vector<std::size_t> class_sizes;
    std::vector<std::size_t> class_orders;  // element orders per class
    std::vector<std::vector<CyclotomicInt>> chars;

    std::size_t order() const;
    std::size_t num_classes() const { return class_sizes.size(); }
    std::size_t num_irreducibles() const { return chars.size(); }
    // chi_i(identity), always a plain integer.
    Int dimension(std::size_t i) const { return chars[i][0].a; }
};

CharacterTable character_table(GroupType g);

// Group homomorphism sub -> sup described by its conjugacy-class map.
// Induction and restriction only depend on this data.
struct EmbeddingSpec {
    GroupType sub;
    GroupType sup;
    std::vector<std::size_t> class_map;  // sub class index -> sup class index
};

// Induction R(sub) -> R(sup): rows indexed by irr(sup), columns by irr(sub).
struct InductionMatrix {
    IntMatrix matrix;
};

// Non-throwing validation; empty report means valid.
std::vector<std::string> validate_embedding(const EmbeddingSpec& e);

// Entry (i, j) = multiplicity of the i-th irr(sub) in (j-th irr(sup)) o class_map.
// Throws InvalidEmbedding if the spec is invalid or the pullbacks fail to
// decompose with nonnegative integer multiplicities.
IntMatrix restriction_matrix(const EmbeddingSpec& e);

// Transpose of restriction (Frobenius reciprocity).
InductionMatrix induction_matrix(const EmbeddingSpec& e);

// Registry of named canonical embeddings ("C2-in-S3", "C2-in-V4-x", ...).
// These names are part of the complex-document format.
const std::map<std::string, EmbeddingSpec>& canonical_embeddings();
const EmbeddingSpec& canonical_embedding(const std::string& name);

}  // namespace bianchik
