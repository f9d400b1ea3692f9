#pragma once

#include "motionfact/dualquat.hpp"
#include "motionfact/rpoly.hpp"

#include <utility>
#include <vector>

namespace motionfact {

/// Left-polynomial with dual quaternion coefficients: coefficients are
/// written to the left of the commuting indeterminate t, and evaluation
/// substitutes t in the expanded form. No motion certificate attached.
class DQPoly {
public:
    DQPoly() = default;
    explicit DQPoly(std::vector<DualQuaternion> ascending);
    DQPoly(std::initializer_list<DualQuaternion> ascending);

    static DQPoly constant(const DualQuaternion& c);
    /// The factor t - h.
    static DQPoly linear_factor(const DualQuaternion& h);
    static DQPoly from_real(const RPoly& p);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    const DualQuaternion& coeff(int i) const;
    const std::vector<DualQuaternion>& coeffs() const { return coeffs_; }
    DualQuaternion leading() const;
    bool is_monic() const;

    DQPoly operator+(const DQPoly& rhs) const;
    DQPoly operator-(const DQPoly& rhs) const;
    DQPoly operator-() const;
    /// Convolution product under the commuting-t rule.
    DQPoly operator*(const DQPoly& rhs) const;
    DQPoly operator*(const Rat& s) const;
    bool operator==(const DQPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

    /// Coefficient-wise quaternion conjugation.
    DQPoly conj() const;

    /// Value sum c_i h^i (coefficients multiplied from the left).
    DualQuaternion eval_right(const DualQuaternion& h) const;
    DualQuaternion operator()(const Rat& t) const { return eval_right(DualQuaternion::scalar(t)); }

    /// True iff every coefficient is a real scalar.
    bool is_real() const;
    /// The real polynomial this reduces to; requires is_real().
    RPoly to_real() const;

    /// Primal/dual component polynomials.
    DQPoly primal_part() const;
    DQPoly dual_part() const;

    std::string str() const;

private:
    void trim();
    std::vector<DualQuaternion> coeffs_;
};

DQPoly operator*(const RPoly& real, const DQPoly& p);

/// Quaternion polynomial (no dual parts); P in H[t].
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Quaternion> ascending);
    QPoly(std::initializer_list<Quaternion> ascending);

    static QPoly linear_factor(const Quaternion& h);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    const Quaternion& coeff(int i) const;
    const std::vector<Quaternion>& coeffs() const { return coeffs_; }
    bool is_monic() const;
    bool is_real() const;

    QPoly operator*(const QPoly& rhs) const;
    bool operator==(const QPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

    QPoly conj() const;
    /// P conj(P) as a real polynomial.
    RPoly norm_poly() const;

    DQPoly to_dqpoly() const;

private:
    void trim();
    std::vector<Quaternion> coeffs_;
};

/// Motion polynomial: a DQPoly whose norm C conj(C) is a real polynomial.
/// Construction goes through certify(), which verifies the property exactly;
/// raw polynomials without the certificate stay DQPoly.
class MotionPoly {
public:
    /// Verifies C conj(C) in R[t]; throws NotMotionPolynomial otherwise.
    static MotionPoly certify(const DQPoly& c);
    static MotionPoly linear_factor(const DualQuaternion& h);

    const DQPoly& raw() const { return poly_; }
    std::optional<int> degree() const { return poly_.degree(); }
    bool is_monic() const { return poly_.is_monic(); }
    const DualQuaternion& coeff(int i) const { return poly_.coeff(i); }

    MotionPoly operator*(const MotionPoly& rhs) const;
    bool operator==(const MotionPoly& rhs) const { return poly_ == rhs.poly_; }

    /// Coefficient-wise conjugate (also a motion polynomial).
    MotionPoly conj_poly() const;
    /// C conj(C) as an exact real polynomial.
    RPoly norm_poly() const;

    DualQuaternion eval_right(const DualQuaternion& h) const { return poly_.eval_right(h); }
    DualQuaternion operator()(const Rat& t) const { return poly_(t); }

    std::string str() const { return poly_.str(); }

private:
    explicit MotionPoly(DQPoly p) : poly_(std::move(p)) {}
    DQPoly poly_;
};

/// Right division by a real polynomial: C = Q*M + R with deg R < deg M.
/// M must be monic of degree >= 1.
std::pair<DQPoly, DQPoly> right_divide_by_real(const DQPoly& c, const RPoly& m);

/// Quotient Q with C = Q*(t-h); requires eval_right(C, h) = 0 (Lemma-style
/// zero/right-factor correspondence), verified by re-multiplication.
DQPoly quo_right_linear(const DQPoly& c, const DualQuaternion& h);
MotionPoly quo_right_linear(const MotionPoly& c, const DualQuaternion& h);

/// Quotient Q with C = (t-h)*Q, computed by the mirrored coefficient
/// recursion and verified by re-multiplication.
DQPoly quo_left_linear(const DQPoly& c, const DualQuaternion& h);
MotionPoly quo_left_linear(const MotionPoly& c, const DualQuaternion& h);

/// Splits off the maximal real polynomial factor: A = content * primitive.
std::pair<RPoly, DQPoly> real_content(const DQPoly& a);

/// True iff rho*A = sigma*B for some nonzero real polynomials rho, sigma.
bool projective_equal(const DQPoly& a, const DQPoly& b);
bool projective_equal(const MotionPoly& a, const MotionPoly& b);

} // namespace motionfact
