#pragma once

#include "motionfact/mode.hpp"
#include "motionfact/rpoly.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace motionfact {

/// Number of distinct real roots of a nonzero polynomial (Sturm's theorem).
int count_real_roots(const RPoly& p);

/// Isolating intervals (lo, hi] for the distinct real roots of a nonzero
/// square-free polynomial, in increasing order.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const RPoly& squarefree);

/// Distinct real roots of p split into exact rational ones and a count of
/// irrational ones. Rational roots are verified exactly (p(r) == 0); the
/// search covers denominators up to 2^64, far beyond anything the norm
/// constructions in scope produce.
struct RealRoots {
    std::vector<Rat> rational;
    int irrational = 0;
};
RealRoots real_roots(const RPoly& p);

/// Marker for a conjugate-complex root pair of a real quadratic.
struct ComplexPair {
    bool operator==(const ComplexPair&) const = default;
};

/// Result of quadratic_roots: two distinct rationals, a double rational
/// root, a complex pair, or (float mode) two double roots.
struct QuadraticRoots {
    std::variant<std::pair<Rat, Rat>, Rat, ComplexPair, std::pair<double, double>> value;

    bool is_complex_pair() const { return std::holds_alternative<ComplexPair>(value); }
    bool is_double_root() const { return std::holds_alternative<Rat>(value); }
};

/// Roots of a degree-2 real polynomial. Exact mode requires the discriminant
/// of a real-rooted quadratic to be a rational square (ExactModeIrrationalRoot
/// otherwise); float mode returns double roots.
QuadraticRoots quadratic_roots(const RPoly& p, const Mode& mode = Mode::exact());

/// Discriminant b^2 - 4ac of a degree-2 polynomial.
Rat quadratic_discriminant(const RPoly& p);

/// For a monic quadratic (t-r)^2, returns r; nullopt when the quadratic is
/// not a perfect square.
std::optional<Rat> squared_linear_root(const RPoly& monic_quadratic);

/// Decomposition of a nonzero, even-degree polynomial that is non-negative
/// on the reals into monic quadratics, each either irreducible over R or a
/// squared linear (t-r)^2. The product of the factors times the (positive)
/// leading coefficient reproduces the input exactly.
///
/// Squared-linear factors are extracted first; the positive-definite rest is
/// split into irreducible quadratics. The result is sorted by coefficient
/// order. Errors: NotNonNegative, ExactModeIrrationalSplit.
std::vector<RPoly> quadratic_factor_decomposition(const RPoly& p, const Mode& mode = Mode::exact());

} // namespace motionfact
