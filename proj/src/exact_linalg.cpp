#include "bianchik/exact_linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

namespace bianchik {

IntMatrix::IntMatrix(std::size_t r, std::size_t c, std::vector<Int> e)
    : rows(r), cols(c), entries(std::move(e)) {
    if (entries.size() != rows * cols)
        throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows_in) {
    IntMatrix m;
    m.rows = rows_in.size();
    m.cols = rows_in.empty() ? 0 : rows_in.front().size();
    m.entries.reserve(m.rows * m.cols);
    for (const auto& row : rows_in) {
        if (row.size() != m.cols)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (long long v : row) m.entries.emplace_back(v);
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const Int& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

namespace {

using boost::multiprecision::abs;

// Smith reduction that additionally tracks V^-1 so kernels can be re-expressed
// in the V basis without a separate unimodular solve.
struct SnfWorker {
    IntMatrix d, u, v, v_inv;

    explicit SnfWorker(const IntMatrix& m)
        : d(m),
          u(IntMatrix::identity(m.rows)),
          v(IntMatrix::identity(m.cols)),
          v_inv(IntMatrix::identity(m.cols)) {}

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < d.cols; ++j) std::swap(d.at(a, j), d.at(b, j));
        for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < d.rows; ++i) std::swap(d.at(i, a), d.at(i, b));
        for (std::size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
        for (std::size_t j = 0; j < v_inv.cols; ++j) std::swap(v_inv.at(a, j), v_inv.at(b, j));
    }

    // row a += f * row b
    void add_row(std::size_t a, std::size_t b, const Int& f) {
        if (f == 0) return;
        for (std::size_t j = 0; j < d.cols; ++j) d.at(a, j) += f * d.at(b, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(a, j) += f * u.at(b, j);
    }

    // col a += f * col b;  V^-1 picks up the inverse op as a row operation.
    void add_col(std::size_t a, std::size_t b, const Int& f) {
        if (f == 0) return;
        for (std::size_t i = 0; i < d.rows; ++i) d.at(i, a) += f * d.at(i, b);
        for (std::size_t i = 0; i < v.rows; ++i) v.at(i, a) += f * v.at(i, b);
        for (std::size_t j = 0; j < v_inv.cols; ++j) v_inv.at(b, j) -= f * v_inv.at(a, j);
    }

    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < d.cols; ++j) d.at(a, j) = -d.at(a, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(a, j) = -u.at(a, j);
    }

    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < d.rows; ++i)
            for (std::size_t j = t; j < d.cols; ++j) {
                const Int& e = d.at(i, j);
                if (e == 0) continue;
                Int a = abs(e);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void run() {
        const std::size_t n = std::min(d.rows, d.cols);
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(t, pi, pj)) break;  // remaining block is zero
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                // Clear column t below the pivot, then row t to its right.
                // Nonzero remainders become the new (smaller) pivot.
                bool clean = true;
                for (std::size_t i = t + 1; i < d.rows; ++i) {
                    if (d.at(i, t) == 0) continue;
                    Int q = d.at(i, t) / d.at(t, t);  // truncated: |remainder| < |pivot|
                    add_row(i, t, -q);
                    if (d.at(i, t) != 0) clean = false;
                }
                for (std::size_t j = t + 1; j < d.cols; ++j) {
                    if (d.at(t, j) == 0) continue;
                    Int q = d.at(t, j) / d.at(t, t);
                    add_col(j, t, -q);
                    if (d.at(t, j) != 0) clean = false;
                }
                if (!clean) {
                    if (!find_pivot(t, pi, pj)) break;
                    swap_rows(t, pi);
                    swap_cols(t, pj);
                    continue;
                }
                // Pivot is lone; force the divisibility chain by pulling in any
                // entry the pivot does not divide and reducing again.
                bool divides_all = true;
                for (std::size_t i = t + 1; i < d.rows && divides_all; ++i)
                    for (std::size_t j = t + 1; j < d.cols; ++j)
                        if (d.at(i, j) % d.at(t, t) != 0) {
                            add_row(t, i, 1);
                            divides_all = false;
                            break;
                        }
                if (divides_all) break;
            }
            if (d.at(t, t) < 0) negate_row(t);
        }
    }
};

FgAbelianGroup group_from_divisors(std::size_t ambient_rank, const std::vector<Int>& divisors) {
    FgAbelianGroup g;
    g.free_rank = ambient_rank - divisors.size();
    for (const Int& x : divisors)
        if (x > 1) g.torsion.push_back(x);
    return g;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
    SnfWorker w(m);
    w.run();
    return SnfResult{std::move(w.u), std::move(w.d), std::move(w.v)};
}

std::vector<Int> elementary_divisors(const IntMatrix& m) {
    SnfWorker w(m);
    w.run();
    std::vector<Int> out;
    const std::size_t n = std::min(m.rows, m.cols);
    for (std::size_t i = 0; i < n; ++i)
        if (w.d.at(i, i) != 0) out.push_back(w.d.at(i, i));
    return out;
}

std::size_t rank(const IntMatrix& m) { return elementary_divisors(m).size(); }

FgAbelianGroup cokernel(const IntMatrix& m) {
    return group_from_divisors(m.rows, elementary_divisors(m));
}

FgAbelianGroup homology(const IntMatrix& d_out, const IntMatrix& d_in) {
    if (d_out.cols != d_in.rows)
        throw std::invalid_argument("homology: d_out.cols != d_in.rows");
    if (!(d_out * d_in).is_zero())
        throw CompositionNonzero("homology: d_out * d_in != 0 (not a chain complex)");

    SnfWorker w(d_out);
    w.run();
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(d_out.rows, d_out.cols); ++i)
        if (w.d.at(i, i) != 0) ++r;
    const std::size_t kernel_rank = d_out.cols - r;

    // ker(d_out) is spanned by the last kernel_rank columns of V.  Re-express
    // each column of d_in in that basis via V^-1 and present the quotient.
    IntMatrix presented(kernel_rank, d_in.cols);
    for (std::size_t c = 0; c < d_in.cols; ++c) {
        for (std::size_t i = 0; i < d_out.cols; ++i) {
            Int coord = 0;
            for (std::size_t k = 0; k < d_out.cols; ++k)
                coord += w.v_inv.at(i, k) * d_in.at(k, c);
            if (i < r) {
                // composition zero guarantees image columns lie in the kernel
                assert(coord == 0);
            } else {
                presented.at(i - r, c) = coord;
            }
        }
    }
    FgAbelianGroup h = cokernel(presented);
    assert(h.free_rank == d_out.cols - r - rank(d_in));
    return h;
}

Int determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

FgAbelianGroup FgAbelianGroup::direct_sum(const FgAbelianGroup& other) const {
    std::vector<Int> factors = torsion;
    factors.insert(factors.end(), other.torsion.begin(), other.torsion.end());
    IntMatrix diag(factors.size(), factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) diag.at(i, i) = factors[i];
    FgAbelianGroup merged = cokernel(diag);  // re-canonicalizes the invariant factors
    merged.free_rank = free_rank + other.free_rank;
    return merged;
}

bool group_less(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    if (a.free_rank != b.free_rank) return a.free_rank < b.free_rank;
    if (a.torsion.size() != b.torsion.size()) return a.torsion.size() < b.torsion.size();
    for (std::size_t i = 0; i < a.torsion.size(); ++i)
        if (a.torsion[i] != b.torsion[i]) return a.torsion[i] < b.torsion[i];
    return false;
}

std::string to_string(const FgAbelianGroup& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (g.free_rank == 1) {
        os << "Z";
        first = false;
    } else if (g.free_rank > 1) {
        os << "Z^" << g.free_rank;
        first = false;
    }
    for (const Int& t : g.torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

}  // namespace bianchik
