#pragma once

// Imaginary-quadratic bookkeeping: class numbers by exact enumeration of
// reduced binary quadratic forms, cusp/singular orbit counts, and a bounded
// search for violations of the singular-point inequality |cD - d| >= 1.
// Everything is exact integer arithmetic; the hot loops ship in an OpenMP
// variant next to a serial reference used for testing and benchmarks.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "bianchik/exact_linalg.hpp"

namespace bianchik {

struct ImagQuadField {
    std::uint64_t m = 1;  // squarefree positive
    std::int64_t disc = -4;

    // Throws NotSquarefree unless m is squarefree and >= 1.
    static ImagQuadField create(std::uint64_t m);

    bool half_integers() const { return m % 4 == 3; }  // ring basis 1, (1+sqrt(-m))/2
};

// x + y * omega_m where omega_m = sqrt(-m), or (1+sqrt(-m))/2 when m = 3 mod 4.
struct QuadInt {
    Int x, y;

    bool is_zero() const { return x == 0 && y == 0; }
    bool operator==(const QuadInt&) const = default;
};

QuadInt add(const QuadInt& a, const QuadInt& b);
QuadInt sub(const QuadInt& a, const QuadInt& b);
QuadInt mul(const ImagQuadField& f, const QuadInt& a, const QuadInt& b);
// |a|^2, a nonnegative integer.
Int norm(const ImagQuadField& f, const QuadInt& a);
std::string to_string(const ImagQuadField& f, const QuadInt& a);

// lambda / mu, mu != 0, reduced by rational common factors of the coordinates.
struct QuadPoint {
    ImagQuadField field;
    QuadInt numerator;
    QuadInt denominator;

    static QuadPoint create(const ImagQuadField& f, QuadInt numerator, QuadInt denominator);
};

// Parses "0", "w", "1+w", "(1+w)/2", "(1-2*w)/(3+w)" etc., with w = omega_m.
QuadPoint parse_quad_point(const ImagQuadField& f, const std::string& text);

std::uint64_t class_number(std::uint64_t m);

struct OrbitCounts {
    std::size_t cusp_orbits = 0;
    std::size_t singular_orbits = 0;
};

// Cusp orbits are counted by the class number; singular orbits exclude the
// orbit of the point at infinity.
OrbitCounts orbit_counts(std::uint64_t m);

// Ideal test: Rc + Rd = R, decided by the index of the Z-lattice spanned by
// c, wc, d, wd inside the ring of integers (Smith normal form of a 2x4 matrix).
bool coprime(const ImagQuadField& f, const QuadInt& c, const QuadInt& d);

struct SingularWitness {
    QuadInt c, d;
    bool operator==(const SingularWitness&) const = default;
};

// Exhaustive search over c != 0 with N(c) <= bound and d with
// N(d) <= bound * (1 + |D|)^2, restricted to coprime pairs, for |cD - d| < 1
// (compared exactly as N(c*lambda - d*mu) < N(mu)).  Returns the
// lexicographically least witness under the key (N(c), x_c, y_c, N(d), x_d, y_d),
// or nothing if none exists up to the bound.  A missing witness is a bounded
// certificate only, never a proof of singularity.
std::optional<SingularWitness> singular_violation_search(const QuadPoint& point,
                                                         std::uint64_t bound);
std::optional<SingularWitness> singular_violation_search_serial(const QuadPoint& point,
                                                                std::uint64_t bound);

// Number of reduced primitive forms (a, b, c) of the given discriminant;
// exposed for the benchmark target.
std::uint64_t count_reduced_forms(std::int64_t disc);
std::uint64_t count_reduced_forms_serial(std::int64_t disc);

}  // namespace bianchik
