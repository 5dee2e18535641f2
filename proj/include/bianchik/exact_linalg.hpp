#pragma once

// Exact integer linear algebra: Smith normal form, elementary divisors, and
// homology of integer chain complexes.  All arithmetic is arbitrary precision;
// intermediate entries of a Smith reduction can exceed any fixed word size
// even when the input entries are +-1.

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bianchik/errors.hpp"

namespace bianchik {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major.  Empty shapes (0 x n, n x 0) are legal and
// act as zero maps between free modules.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> entries;  // rows * cols, row-major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
    IntMatrix(std::size_t r, std::size_t c, std::vector<Int> e);
    // Row-wise construction from machine integers, for literals in fixtures and tests.
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows_in);
    static IntMatrix identity(std::size_t n);

    Int& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    IntMatrix transposed() const;
    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// U * M * V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SnfResult {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
};

// Finitely generated abelian group in canonical form: free rank plus invariant
// factors (each >= 2, each dividing the next).  Equality of values is
// isomorphism of groups.
struct FgAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    static FgAbelianGroup free_of_rank(std::size_t r) { return FgAbelianGroup{r, {}}; }
    static FgAbelianGroup zero() { return FgAbelianGroup{}; }

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }

    // Canonical direct sum (invariant factors of the two lists are merged).
    FgAbelianGroup direct_sum(const FgAbelianGroup& other) const;

    bool operator==(const FgAbelianGroup&) const = default;
};

// Total order compatible with the canonical rendering; used to sort candidate lists.
bool group_less(const FgAbelianGroup& a, const FgAbelianGroup& b);

SnfResult snf(const IntMatrix& m);

// Nonzero diagonal of snf(m).D, in divisibility order.
std::vector<Int> elementary_divisors(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Z^rows / im(M).
FgAbelianGroup cokernel(const IntMatrix& m);

// ker(d_out) / im(d_in) for consecutive differentials d_out . d_in = 0.
// Throws CompositionNonzero if the pair is not a chain complex.
FgAbelianGroup homology(const IntMatrix& d_out, const IntMatrix& d_in);

// Bareiss fraction-free determinant; requires a square matrix.
Int determinant(const IntMatrix& m);

std::string to_string(const FgAbelianGroup& g);

}  // namespace bianchik
