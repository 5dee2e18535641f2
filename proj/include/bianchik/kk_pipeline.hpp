#pragma once

// Runs the degenerate spectral sequence of a 2-dimensional pruned complex and
// the exact-sequence arithmetic that assembles equivariant K-homology from it.
// The sequence lives in columns 0..2 with vanishing odd rows (K1 of a finite
// group ring is zero), so E^2 = E^infinity and no higher differential is ever
// constructed.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bianchik/exact_linalg.hpp"
#include "bianchik/gamma_cw.hpp"

namespace bianchik {

// E^2 = E^infinity columns in the even rows.
struct SpectralPage {
    FgAbelianGroup H0, H1, H2;
    bool operator==(const SpectralPage&) const = default;
};

// Throws CompositionNonzero when d1 * d2 != 0.
SpectralPage e2_page(const IntMatrix& d1, const IntMatrix& d2);

// 0 -> sub -> ? -> quot -> 0 with sub torsion-free (the only case arising:
// the degree-2 edge term of a 2-complex is a kernel of free modules).
struct ExtensionProblem {
    FgAbelianGroup sub;
    FgAbelianGroup quot;
};

// Complete, duplicate-free, canonically sorted list of isomorphism classes of
// middle groups.  Every class in Ext(quot, sub) is realized as an integer
// presentation matrix and reduced by Smith normal form.
// Throws UnsupportedExtension if sub has torsion.
std::vector<FgAbelianGroup> solve_extension(const ExtensionProblem& p);

enum class SplitPolicy { PaperSplit, Enumerate };

const char* to_string(SplitPolicy p);

struct KResult {
    std::vector<FgAbelianGroup> k0_candidates;
    std::vector<FgAbelianGroup> k1_candidates;
    bool pinned = false;
};

// K of the pruned complex: K1 is the degree-1 edge term, K0 is an extension
// of the degree-0 term by the (free) degree-2 term.  Under PaperSplit the
// split extension is selected; under Enumerate all classes are returned.
KResult k_of_pruned(const SpectralPage& page, SplitPolicy policy);

// K of the ambient half-space: K0 is unchanged and K1 gains a free Z summand.
// The connecting map of the underlying six-term sequence vanishes and the
// quotient is free, so the splitting is forced, not a policy.
KResult k_of_halfspace(const KResult& k_pruned);

// Topological K-homology of a disjoint union of k 2-tori: Z^{2k} in both
// degrees.  Throws InvalidClassNumber for k = 0.
std::pair<FgAbelianGroup, FgAbelianGroup> boundary_corners(std::size_t k);

// Cyclic exact hexagon n0 -> n1 -> ... -> n5 -> n0 with exactly two opposite
// unknown nodes.  rank_hints pins ranks of individual arrows (arrow i goes
// from node i to node i+1 mod 6).
struct SixTermProblem {
    std::array<std::optional<FgAbelianGroup>, 6> nodes;
    std::map<std::size_t, std::size_t> rank_hints;
};

struct SixTermCandidate {
    FgAbelianGroup first;   // unknown at the lower node index
    FgAbelianGroup second;  // unknown at the opposite node
    std::array<std::size_t, 6> arrow_ranks;
    // False when the minimal-torsion convention (rather than exactness alone)
    // fixed a subgroup image, or when a policy chose among extension classes.
    bool torsion_pinned = true;
    std::string note;
};

struct SixTermResult {
    std::vector<SixTermCandidate> candidates;  // duplicate-free, sorted
    bool pinned = false;
};

// Enumerates arrow-rank assignments consistent with exactness of free ranks
// around the hexagon (restricted by hints), then solves the induced short
// exact sequence at each unknown node.  The nodes immediately preceding each
// unknown must be torsion-free (they are the boundary-torus corners in the
// intended use); throws std::invalid_argument otherwise.
// Throws InconsistentHints when no rank assignment survives.
SixTermResult solve_six_term(const SixTermProblem& p, SplitPolicy policy);

struct PipelineConfig {
    SplitPolicy policy = SplitPolicy::PaperSplit;
    std::optional<std::map<std::size_t, std::size_t>> six_term_hints;
};

struct PipelineReport {
    std::optional<std::uint64_t> m;
    std::size_t class_number_k = 1;
    SplitPolicy policy = SplitPolicy::PaperSplit;
    bool hints_used = false;

    std::vector<Int> d1_divisors;
    std::vector<Int> d2_divisors;
    std::array<std::size_t, 3> chain_ranks{};  // ranks of C0, C1, C2

    SpectralPage page;
    bool euler_ok = false;
    long long euler_cells = 0;
    long long euler_homology = 0;

    KResult k_pruned;
    std::vector<FgAbelianGroup> k0_pruned_all;  // full enumeration, for the report
    KResult k_halfspace;

    FgAbelianGroup corner_k0, corner_k1;
    SixTermResult six_term;
    std::vector<std::string> notes;
};

// Matrix-level entry point: differentials plus the class number.
PipelineReport run_pipeline(const IntMatrix& d1, const IntMatrix& d2, std::size_t class_number_k,
                            const PipelineConfig& config);

// Complex-level entry point: validates, assembles and delegates.
PipelineReport run_pipeline(const PrunedComplex& complex, const PipelineConfig& config);

}  // namespace bianchik
