#include "bianchik/arith.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bianchik {

namespace {

std::int64_t isqrt64(std::int64_t v) {
    if (v < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

Int isqrt_int(const Int& v) {
    if (v <= 0) return 0;
    return boost::multiprecision::sqrt(v);
}

}  // namespace

ImagQuadField ImagQuadField::create(std::uint64_t m) {
    if (m == 0) throw NotSquarefree("m must be positive");
    std::uint64_t rest = m;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        rest /= p;
        if (rest % p == 0) {
            std::ostringstream os;
            os << "m = " << m << " is not squarefree (divisible by " << p << "^2)";
            throw NotSquarefree(os.str());
        }
    }
    ImagQuadField f;
    f.m = m;
    f.disc = (m % 4 == 3) ? -static_cast<std::int64_t>(m) : -4 * static_cast<std::int64_t>(m);
    return f;
}

QuadInt add(const QuadInt& a, const QuadInt& b) { return QuadInt{a.x + b.x, a.y + b.y}; }
QuadInt sub(const QuadInt& a, const QuadInt& b) { return QuadInt{a.x - b.x, a.y - b.y}; }

QuadInt mul(const ImagQuadField& f, const QuadInt& a, const QuadInt& b) {
    const Int m = Int(f.m);
    if (f.half_integers()) {
        // w^2 = w - (1+m)/4
        const Int t = (m + 1) / 4;
        return QuadInt{a.x * b.x - a.y * b.y * t, a.x * b.y + a.y * b.x + a.y * b.y};
    }
    // w^2 = -m
    return QuadInt{a.x * b.x - m * a.y * b.y, a.x * b.y + a.y * b.x};
}

Int norm(const ImagQuadField& f, const QuadInt& a) {
    const Int m = Int(f.m);
    if (f.half_integers()) return a.x * a.x + a.x * a.y + a.y * a.y * ((m + 1) / 4);
    return a.x * a.x + m * a.y * a.y;
}

std::string to_string(const ImagQuadField& f, const QuadInt& a) {
    (void)f;
    std::ostringstream os;
    if (a.y == 0) {
        os << a.x;
    } else {
        if (a.x != 0) os << a.x << (a.y > 0 ? "+" : "");
        if (a.y == 1)
            os << "w";
        else if (a.y == -1)
            os << "-w";
        else
            os << a.y << "*w";
    }
    return os.str();
}

QuadPoint QuadPoint::create(const ImagQuadField& f, QuadInt numerator, QuadInt denominator) {
    if (denominator.is_zero()) throw std::invalid_argument("QuadPoint: zero denominator");
    using boost::multiprecision::abs;
    Int g = 0;
    for (const Int* v : {&numerator.x, &numerator.y, &denominator.x, &denominator.y})
        g = boost::multiprecision::gcd(g, abs(*v));
    if (g > 1) {
        numerator.x /= g;
        numerator.y /= g;
        denominator.x /= g;
        denominator.y /= g;
    }
    return QuadPoint{f, numerator, denominator};
}

namespace {

struct Tokenizer {
    std::string s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
};

// sum := ['+'|'-'] term (('+'|'-') term)*
// term := int | int '*' 'w' | 'w'
QuadInt parse_sum(Tokenizer& t) {
    QuadInt acc{0, 0};
    bool first = true;
    for (;;) {
        t.skip_ws();
        int sign = 1;
        if (t.eat('+')) {
            sign = 1;
        } else if (t.eat('-')) {
            sign = -1;
        } else if (!first) {
            break;
        }
        t.skip_ws();
        Int value = 1;
        bool have_number = false;
        if (t.pos < t.s.size() && std::isdigit(static_cast<unsigned char>(t.s[t.pos]))) {
            std::size_t start = t.pos;
            while (t.pos < t.s.size() && std::isdigit(static_cast<unsigned char>(t.s[t.pos]))) ++t.pos;
            value = Int(t.s.substr(start, t.pos - start));
            have_number = true;
        }
        bool is_w = false;
        if (have_number && t.eat('*')) {
            if (!t.eat('w')) throw std::invalid_argument("quadratic point: expected w after *");
            is_w = true;
        } else if (t.eat('w')) {
            is_w = true;
        } else if (!have_number) {
            throw std::invalid_argument("quadratic point: expected number or w");
        }
        if (is_w)
            acc.y += sign * value;
        else
            acc.x += sign * value;
        first = false;
    }
    return acc;
}

QuadInt parse_part(const std::string& text) {
    Tokenizer t{text};
    QuadInt v;
    if (t.eat('(')) {
        v = parse_sum(t);
        if (!t.eat(')')) throw std::invalid_argument("quadratic point: missing )");
    } else {
        v = parse_sum(t);
    }
    if (!t.done()) throw std::invalid_argument("quadratic point: trailing characters in '" + text + "'");
    return v;
}

}  // namespace

QuadPoint parse_quad_point(const ImagQuadField& f, const std::string& text) {
    // Split at the top-level '/'; each side is a sum, optionally parenthesized.
    int depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == '/' && depth == 0) {
            slash = i;
            break;
        }
    }
    QuadInt num, den{1, 0};
    if (slash == std::string::npos) {
        num = parse_part(text);
    } else {
        num = parse_part(text.substr(0, slash));
        den = parse_part(text.substr(slash + 1));
    }
    return QuadPoint::create(f, num, den);
}

std::uint64_t count_reduced_forms_serial(std::int64_t disc) {
    const std::int64_t neg = -disc;
    const std::int64_t a_max = isqrt64(neg / 3);
    std::uint64_t count = 0;
    for (std::int64_t a = 1; a <= a_max; ++a) {
        for (std::int64_t b = (neg % 2 == 0) ? 0 : 1; b <= a; b += 2) {
            const std::int64_t num = b * b + neg;  // 4ac
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (std::gcd(a, std::gcd(b, c)) != 1) continue;
            // (a, -b, c) is a distinct reduced form unless b = 0, b = a or a = c.
            count += (b == 0 || b == a || a == c) ? 1 : 2;
        }
    }
    return count;
}

std::uint64_t count_reduced_forms(std::int64_t disc) {
    const std::int64_t neg = -disc;
    const std::int64_t a_max = isqrt64(neg / 3);
    std::uint64_t count = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : count) schedule(dynamic, 64)
#endif
    for (std::int64_t a = 1; a <= a_max; ++a) {
        std::uint64_t local = 0;
        for (std::int64_t b = (neg % 2 == 0) ? 0 : 1; b <= a; b += 2) {
            const std::int64_t num = b * b + neg;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (std::gcd(a, std::gcd(b, c)) != 1) continue;
            local += (b == 0 || b == a || a == c) ? 1 : 2;
        }
        count += local;
    }
    return count;
}

std::uint64_t class_number(std::uint64_t m) {
    const ImagQuadField f = ImagQuadField::create(m);
    return count_reduced_forms(f.disc);
}

OrbitCounts orbit_counts(std::uint64_t m) {
    const std::uint64_t h = class_number(m);
    return OrbitCounts{static_cast<std::size_t>(h), static_cast<std::size_t>(h - 1)};
}

bool coprime(const ImagQuadField& f, const QuadInt& c, const QuadInt& d) {
    // Z-lattice spanned by c, wc, d, wd in the basis (1, w); coprime iff the
    // lattice is all of R, i.e. both Smith divisors are 1.
    const QuadInt w{0, 1};
    const QuadInt wc = mul(f, w, c);
    const QuadInt wd = mul(f, w, d);
    IntMatrix m(2, 4);
    m.at(0, 0) = c.x;
    m.at(1, 0) = c.y;
    m.at(0, 1) = wc.x;
    m.at(1, 1) = wc.y;
    m.at(0, 2) = d.x;
    m.at(1, 2) = d.y;
    m.at(0, 3) = wd.x;
    m.at(1, 3) = wd.y;
    const auto div = elementary_divisors(m);
    return div.size() == 2 && div[0] == 1 && div[1] == 1;
}

namespace {

using boost::multiprecision::abs;

// Deterministic candidate order: by norm, then by |x|, |y|, preferring the
// nonnegative representative.  Independent of the search bound, so witnesses
// found at one bound persist at every larger bound.
struct CandidateKey {
    Int n, ax, ay;
    int xneg, yneg;

    bool operator<(const CandidateKey& o) const {
        if (n != o.n) return n < o.n;
        if (ax != o.ax) return ax < o.ax;
        if (ay != o.ay) return ay < o.ay;
        if (xneg != o.xneg) return xneg < o.xneg;
        return yneg < o.yneg;
    }
};

CandidateKey key_of(const ImagQuadField& f, const QuadInt& v) {
    return CandidateKey{norm(f, v), abs(v.x), abs(v.y), v.x < 0 ? 1 : 0, v.y < 0 ? 1 : 0};
}

// All ring elements with norm <= limit, sorted by the candidate key.
std::vector<QuadInt> elements_up_to_norm(const ImagQuadField& f, const Int& limit) {
    std::vector<QuadInt> out;
    if (limit < 0) return out;
    const Int m = Int(f.m);
    if (f.half_integers()) {
        // 4N = (2x + y)^2 + m y^2
        auto floor_div2 = [](const Int& a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); };
        auto ceil_div2 = [](const Int& a) { return a > 0 ? (a + 1) / 2 : -((-a) / 2); };
        const Int ymax = isqrt_int(4 * limit / m);
        for (Int y = -ymax; y <= ymax; ++y) {
            const Int rem = 4 * limit - m * y * y;
            if (rem < 0) continue;
            const Int s = isqrt_int(rem);
            // -s <= 2x + y <= s
            const Int x_lo = ceil_div2(-s - y);
            const Int x_hi = floor_div2(s - y);
            for (Int x = x_lo; x <= x_hi; ++x) out.push_back(QuadInt{x, y});
        }
    } else {
        const Int ymax = isqrt_int(limit / m);
        for (Int y = -ymax; y <= ymax; ++y) {
            const Int rem = limit - m * y * y;
            if (rem < 0) continue;
            const Int xmax = isqrt_int(rem);
            for (Int x = -xmax; x <= xmax; ++x) out.push_back(QuadInt{x, y});
        }
    }
    std::sort(out.begin(), out.end(), [&](const QuadInt& a, const QuadInt& b) {
        return key_of(f, a) < key_of(f, b);
    });
    return out;
}

struct SearchSpace {
    std::vector<QuadInt> cs;  // c != 0, N(c) <= bound
    std::vector<QuadInt> ds;  // N(d) <= bound * (1 + |D|)^2, exactly
};

SearchSpace build_search_space(const QuadPoint& point, std::uint64_t bound) {
    if (bound < 1) throw std::invalid_argument("singular_violation_search: bound must be >= 1");
    const ImagQuadField& f = point.field;
    const Int nl = norm(f, point.numerator);
    const Int nm = norm(f, point.denominator);
    const Int B = Int(bound);

    SearchSpace space;
    for (QuadInt& c : elements_up_to_norm(f, B))
        if (!c.is_zero()) space.cs.push_back(std::move(c));

    // N(d) <= B (1 + |D|)^2 with |D|^2 = nl/nm.  Clearing denominators:
    //   L = nm N(d) - B (nm + nl) <= 2 B sqrt(nl nm)
    // which holds iff L <= 0 or L^2 <= 4 B^2 nl nm.
    const Int nd_upper = (B * (nm + nl) + 2 * B * (isqrt_int(nl * nm) + 1)) / nm + 1;
    const Int rhs = 4 * B * B * nl * nm;
    for (QuadInt& d : elements_up_to_norm(f, nd_upper)) {
        const Int L = nm * norm(f, d) - B * (nm + nl);
        if (L <= 0 || L * L <= rhs) space.ds.push_back(std::move(d));
    }
    return space;
}

bool is_witness(const QuadPoint& point, const Int& nm, const QuadInt& c, const QuadInt& d) {
    const ImagQuadField& f = point.field;
    // |cD - d|^2 < 1  <=>  N(c lambda - d mu) < N(mu)
    const QuadInt lhs = sub(mul(f, c, point.numerator), mul(f, d, point.denominator));
    if (!(norm(f, lhs) < nm)) return false;
    return coprime(f, c, d);
}

}  // namespace

std::optional<SingularWitness> singular_violation_search_serial(const QuadPoint& point,
                                                                std::uint64_t bound) {
    const SearchSpace space = build_search_space(point, bound);
    const Int nm = norm(point.field, point.denominator);
    for (const QuadInt& c : space.cs)
        for (const QuadInt& d : space.ds)
            if (is_witness(point, nm, c, d)) return SingularWitness{c, d};
    return std::nullopt;
}

std::optional<SingularWitness> singular_violation_search(const QuadPoint& point,
                                                         std::uint64_t bound) {
#ifndef _OPENMP
    return singular_violation_search_serial(point, bound);
#else
    const SearchSpace space = build_search_space(point, bound);
    const Int nm = norm(point.field, point.denominator);
    const std::int64_t nc = static_cast<std::int64_t>(space.cs.size());
    std::int64_t best_c = nc;
    std::size_t best_d = 0;

#pragma omp parallel
    {
        std::int64_t local_c = nc;
        std::size_t local_d = 0;
#pragma omp for schedule(dynamic, 8) nowait
        for (std::int64_t i = 0; i < nc; ++i) {
            for (std::size_t j = 0; j < space.ds.size(); ++j) {
                if (is_witness(point, nm, space.cs[i], space.ds[j])) {
                    if (i < local_c) {
                        local_c = i;
                        local_d = j;
                    }
                    break;  // d candidates are ordered; first hit is minimal for this c
                }
            }
        }
#pragma omp critical
        {
            if (local_c < best_c || (local_c == best_c && local_d < best_d)) {
                best_c = local_c;
                best_d = local_d;
            }
        }
    }
    if (best_c == nc) return std::nullopt;
    return SingularWitness{space.cs[best_c], space.ds[best_d]};
#endif
}

}  // namespace bianchik
