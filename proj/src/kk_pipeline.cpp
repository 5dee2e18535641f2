#include "bianchik/kk_pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bianchik {

const char* to_string(SplitPolicy p) {
    return p == SplitPolicy::PaperSplit ? "paper-split" : "enumerate";
}

SpectralPage e2_page(const IntMatrix& d1, const IntMatrix& d2) {
    if (d1.cols != d2.rows)
        throw std::invalid_argument("e2_page: d1.cols != d2.rows");
    if (!(d1 * d2).is_zero())
        throw CompositionNonzero("e2_page: d1 * d2 != 0");
    SpectralPage page;
    page.H0 = cokernel(d1);
    page.H1 = homology(d1, d2);
    // Degree-2 term is the kernel of d2 inside a free module, hence free.
    page.H2 = FgAbelianGroup::free_of_rank(d2.cols - rank(d2));
    return page;
}

std::vector<FgAbelianGroup> solve_extension(const ExtensionProblem& p) {
    if (!p.sub.is_free())
        throw UnsupportedExtension("solve_extension: subgroup must be torsion-free");
    const std::size_t s = p.sub.free_rank;
    const std::size_t k = p.quot.torsion.size();

    // Ext(quot, sub) = (+) (Z/t_i)^s; every class is a choice of lift targets
    // x_i in Z^s mod t_i for the torsion relations t_i g_i = x_i.
    Int classes = 1;
    for (const Int& t : p.quot.torsion)
        for (std::size_t j = 0; j < s; ++j) classes *= t;
    if (classes > 200000)
        throw std::runtime_error("solve_extension: extension group too large to enumerate");

    std::set<FgAbelianGroup, bool (*)(const FgAbelianGroup&, const FgAbelianGroup&)> seen(
        group_less);
    std::vector<Int> digits(k * s, 0);  // digit (i*s + j) ranges over [0, t_i)
    for (;;) {
        IntMatrix pres(k + s, k);
        for (std::size_t i = 0; i < k; ++i) {
            pres.at(i, i) = p.quot.torsion[i];
            for (std::size_t j = 0; j < s; ++j) pres.at(k + j, i) = -digits[i * s + j];
        }
        FgAbelianGroup middle = cokernel(pres);
        middle.free_rank += p.quot.free_rank;
        seen.insert(middle);

        // odometer
        std::size_t pos = 0;
        while (pos < digits.size()) {
            digits[pos] += 1;
            if (digits[pos] < p.quot.torsion[pos / s]) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == digits.size()) break;
    }
    return std::vector<FgAbelianGroup>(seen.begin(), seen.end());
}

KResult k_of_pruned(const SpectralPage& page, SplitPolicy policy) {
    if (!page.H2.is_free())
        throw UnsupportedExtension("k_of_pruned: degree-2 term must be free");
    KResult out;
    out.k1_candidates = {page.H1};
    const ExtensionProblem problem{page.H2, page.H0};
    if (policy == SplitPolicy::PaperSplit) {
        out.k0_candidates = {page.H2.direct_sum(page.H0)};
        out.pinned = true;
    } else {
        out.k0_candidates = solve_extension(problem);
        out.pinned = out.k0_candidates.size() == 1;
    }
    return out;
}

KResult k_of_halfspace(const KResult& k_pruned) {
    KResult out;
    out.k0_candidates = k_pruned.k0_candidates;
    for (const FgAbelianGroup& g : k_pruned.k1_candidates)
        out.k1_candidates.push_back(g.direct_sum(FgAbelianGroup::free_of_rank(1)));
    out.pinned = k_pruned.pinned;
    return out;
}

std::pair<FgAbelianGroup, FgAbelianGroup> boundary_corners(std::size_t k) {
    if (k == 0) throw InvalidClassNumber("boundary_corners: class number must be >= 1");
    return {FgAbelianGroup::free_of_rank(2 * k), FgAbelianGroup::free_of_rank(2 * k)};
}

namespace {

struct UnknownSolve {
    std::vector<FgAbelianGroup> candidates;
    bool torsion_pinned = true;
    std::string note;
};

// Solve 0 -> im(a_{u-1}) -> n_u -> ker(a_{u+1}) -> 0 for the unknown node u,
// given the arrow ranks.  The predecessor node is torsion-free (validated by
// the caller), so the subgroup image is Z^rho up to finite ambiguity; the
// minimal-torsion convention takes it to be exactly Z^rho and is flagged
// unless exactness forces it (zero image entering the predecessor).
UnknownSolve solve_unknown(const std::array<const FgAbelianGroup*, 6>& known,
                           const std::array<std::size_t, 6>& rho, std::size_t u,
                           SplitPolicy policy) {
    const std::size_t prev_arrow = (u + 5) % 6;
    const std::size_t prev_prev_arrow = (u + 4) % 6;
    const std::size_t next = (u + 1) % 6;

    UnknownSolve out;
    const bool sub_forced = rho[prev_prev_arrow] == 0;
    if (!sub_forced) {
        out.torsion_pinned = false;
        std::ostringstream os;
        os << "image of arrow " << prev_arrow << " taken torsion-free (minimal-torsion convention)";
        out.note = os.str();
    }
    const FgAbelianGroup sub = FgAbelianGroup::free_of_rank(rho[prev_arrow]);

    // ker(a_{u+1}) has rank r_{next} - rho_{next}; its torsion is all of the
    // torsion of n_{next} because the following node is torsion-free.
    FgAbelianGroup quot;
    quot.free_rank = known[next]->free_rank - rho[next];
    quot.torsion = known[next]->torsion;

    out.candidates = solve_extension(ExtensionProblem{sub, quot});
    if (out.candidates.size() > 1) {
        if (policy == SplitPolicy::PaperSplit) {
            out.candidates = {sub.direct_sum(quot)};
            out.torsion_pinned = false;
            if (!out.note.empty()) out.note += "; ";
            out.note += "extension class chosen by paper-split policy";
        } else {
            out.torsion_pinned = false;
            if (!out.note.empty()) out.note += "; ";
            out.note += "extension class undetermined";
        }
    }
    return out;
}

}  // namespace

SixTermResult solve_six_term(const SixTermProblem& p, SplitPolicy policy) {
    std::vector<std::size_t> unknown;
    for (std::size_t i = 0; i < 6; ++i)
        if (!p.nodes[i]) unknown.push_back(i);
    if (unknown.size() != 2 || (unknown[1] - unknown[0]) != 3)
        throw std::invalid_argument("solve_six_term: exactly two opposite nodes must be unknown");
    const std::size_t u1 = unknown[0];
    const std::size_t u2 = unknown[1];

    std::array<const FgAbelianGroup*, 6> known{};
    for (std::size_t i = 0; i < 6; ++i)
        if (p.nodes[i]) known[i] = &*p.nodes[i];

    // Corners: the node before each unknown doubles as the node after the
    // other unknown's known neighbor; both must be torsion-free for the
    // kernel/image bookkeeping below to be exact.
    for (std::size_t corner : {(u1 + 5) % 6, (u1 + 2) % 6})
        if (!known[corner]->is_free())
            throw std::invalid_argument(
                "solve_six_term: the nodes preceding the unknowns must be torsion-free");

    for (const auto& hint : p.rank_hints)
        if (hint.first >= 6) throw std::invalid_argument("solve_six_term: arrow index out of range");

    const auto r_of = [&](std::size_t i) { return known[i]->free_rank; };

    // Exactness at the four known nodes leaves two free parameters: the rank
    // of the arrow leaving each unknown.
    std::map<std::pair<std::string, std::string>, SixTermCandidate> merged;

    bool any_rank_vector = false;
    const std::size_t a_max = r_of((u1 + 1) % 6);
    const std::size_t b_max = r_of((u2 + 1) % 6);
    for (std::size_t a = 0; a <= a_max; ++a) {
        for (std::size_t b = 0; b <= b_max; ++b) {
            std::array<long long, 6> rho_signed{};
            rho_signed[u1] = static_cast<long long>(a);
            rho_signed[u2] = static_cast<long long>(b);
            rho_signed[(u1 + 1) % 6] =
                static_cast<long long>(r_of((u1 + 1) % 6)) - static_cast<long long>(a);
            rho_signed[(u1 + 2) % 6] = static_cast<long long>(r_of((u1 + 2) % 6)) -
                                       rho_signed[(u1 + 1) % 6];
            rho_signed[(u2 + 1) % 6] =
                static_cast<long long>(r_of((u2 + 1) % 6)) - static_cast<long long>(b);
            rho_signed[(u2 + 2) % 6] = static_cast<long long>(r_of((u2 + 2) % 6)) -
                                       rho_signed[(u2 + 1) % 6];

            bool ok = true;
            for (std::size_t i = 0; i < 6 && ok; ++i) {
                if (rho_signed[i] < 0) ok = false;
            }
            if (!ok) continue;
            // An image rank never exceeds the free rank of a known domain or
            // codomain.
            for (std::size_t i = 0; i < 6 && ok; ++i) {
                if (known[i] && rho_signed[i] > static_cast<long long>(r_of(i))) ok = false;
                const std::size_t cod = (i + 1) % 6;
                if (known[cod] && rho_signed[i] > static_cast<long long>(r_of(cod))) ok = false;
            }
            if (!ok) continue;
            std::array<std::size_t, 6> rho{};
            for (std::size_t i = 0; i < 6; ++i) rho[i] = static_cast<std::size_t>(rho_signed[i]);
            for (const auto& [arrow, r] : p.rank_hints)
                if (rho[arrow] != r) ok = false;
            if (!ok) continue;
            any_rank_vector = true;

            const UnknownSolve s1 = solve_unknown(known, rho, u1, policy);
            const UnknownSolve s2 = solve_unknown(known, rho, u2, policy);
            for (const FgAbelianGroup& g1 : s1.candidates) {
                for (const FgAbelianGroup& g2 : s2.candidates) {
                    SixTermCandidate cand;
                    cand.first = g1;
                    cand.second = g2;
                    cand.arrow_ranks = rho;
                    cand.torsion_pinned = s1.torsion_pinned && s2.torsion_pinned;
                    if (!s1.note.empty()) cand.note = "node " + std::to_string(u1) + ": " + s1.note;
                    if (!s2.note.empty()) {
                        if (!cand.note.empty()) cand.note += "; ";
                        cand.note += "node " + std::to_string(u2) + ": " + s2.note;
                    }
                    auto key = std::make_pair(to_string(g1), to_string(g2));
                    auto it = merged.find(key);
                    if (it == merged.end()) {
                        merged.emplace(key, std::move(cand));
                    } else if (cand.torsion_pinned && !it->second.torsion_pinned) {
                        it->second = std::move(cand);  // prefer the pinned witness
                    }
                }
            }
        }
    }

    if (!any_rank_vector)
        throw InconsistentHints("solve_six_term: no arrow-rank assignment satisfies exactness");

    SixTermResult out;
    for (auto& [key, cand] : merged) out.candidates.push_back(std::move(cand));
    std::sort(out.candidates.begin(), out.candidates.end(),
              [](const SixTermCandidate& x, const SixTermCandidate& y) {
                  if (!(x.first == y.first)) return group_less(x.first, y.first);
                  return group_less(x.second, y.second);
              });
    out.pinned = out.candidates.size() == 1;
    return out;
}

PipelineReport run_pipeline(const IntMatrix& d1, const IntMatrix& d2, std::size_t class_number_k,
                            const PipelineConfig& config) {
    PipelineReport report;
    report.class_number_k = class_number_k;
    report.policy = config.policy;
    report.hints_used = config.six_term_hints.has_value();

    report.d1_divisors = elementary_divisors(d1);
    report.d2_divisors = elementary_divisors(d2);
    report.chain_ranks = {d1.rows, d1.cols, d2.cols};

    report.page = e2_page(d1, d2);
    report.euler_cells = static_cast<long long>(d1.rows) - static_cast<long long>(d1.cols) +
                         static_cast<long long>(d2.cols);
    report.euler_homology = static_cast<long long>(report.page.H0.free_rank) -
                            static_cast<long long>(report.page.H1.free_rank) +
                            static_cast<long long>(report.page.H2.free_rank);
    report.euler_ok = report.euler_cells == report.euler_homology;

    report.k_pruned = k_of_pruned(report.page, config.policy);
    report.k0_pruned_all = k_of_pruned(report.page, SplitPolicy::Enumerate).k0_candidates;
    report.k_halfspace = k_of_halfspace(report.k_pruned);

    auto [c0, c1] = boundary_corners(class_number_k);
    report.corner_k0 = c0;
    report.corner_k1 = c1;

    // One six-term solve per candidate value of K(halfspace); candidates are
    // merged into a single deduplicated list.
    std::map<std::pair<std::string, std::string>, SixTermCandidate> merged;
    for (const FgAbelianGroup& k0h : report.k_halfspace.k0_candidates) {
        for (const FgAbelianGroup& k1h : report.k_halfspace.k1_candidates) {
            SixTermProblem problem;
            problem.nodes[0] = report.corner_k0;
            problem.nodes[2] = k0h;
            problem.nodes[3] = report.corner_k1;
            problem.nodes[5] = k1h;
            if (config.six_term_hints) problem.rank_hints = *config.six_term_hints;
            SixTermResult r = solve_six_term(problem, config.policy);
            for (SixTermCandidate& cand : r.candidates) {
                auto key = std::make_pair(to_string(cand.first), to_string(cand.second));
                auto it = merged.find(key);
                if (it == merged.end())
                    merged.emplace(key, std::move(cand));
                else if (cand.torsion_pinned && !it->second.torsion_pinned)
                    it->second = std::move(cand);
            }
        }
    }
    for (auto& [key, cand] : merged) report.six_term.candidates.push_back(std::move(cand));
    std::sort(report.six_term.candidates.begin(), report.six_term.candidates.end(),
              [](const SixTermCandidate& x, const SixTermCandidate& y) {
                  if (!(x.first == y.first)) return group_less(x.first, y.first);
                  return group_less(x.second, y.second);
              });
    report.six_term.pinned =
        report.six_term.candidates.size() == 1 && report.k_halfspace.pinned;
    return report;
}

PipelineReport run_pipeline(const PrunedComplex& complex, const PipelineConfig& config) {
    auto violations = validate(complex);
    if (!violations.empty())
        throw std::invalid_argument("run_pipeline: invalid complex: " + violations.front());
    const BredonComplex bredon = assemble_bredon(complex);
    PipelineReport report = run_pipeline(bredon.d1, bredon.d2, complex.class_number_k, config);
    // Cross-check the cell-level Euler characteristic against the matrix-level one.
    report.euler_ok =
        report.euler_ok && euler_check(complex, report.page.H0, report.page.H1, report.page.H2);
    return report;
}

}  // namespace bianchik
