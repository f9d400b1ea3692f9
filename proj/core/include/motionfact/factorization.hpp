#pragma once

#include "motionfact/motionpoly.hpp"
#include "motionfact/realroots.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace motionfact {

/// Monic linear motion polynomial t - h together with the joint kind of h.
struct LinearFactor {
    DualQuaternion h;
    JointKind kind;

    /// Validates that t - h is a motion polynomial (pure dual part and
    /// Study condition) and classifies it.
    static LinearFactor from(const DualQuaternion& h);

    MotionPoly poly() const { return MotionPoly::linear_factor(h); }
    /// Norm quadratic (t-h)(t-conj h) = t^2 - 2 p0 t + |p|^2.
    RPoly norm_quadratic() const;

    bool operator==(const LinearFactor& rhs) const { return h == rhs.h; }
};

/// Value of the factor t - h at a parameter, as a displacement. Throws
/// SingularParameter when the primal part vanishes.
DualQuaternion joint_displacement(const LinearFactor& f, const Rat& t);

/// Ordered list of linear factors with a real projective cofactor. The
/// factory re-multiplies and compares against the source polynomial, so a
/// constructed Factorization always satisfies the product identity.
class Factorization {
public:
    static Factorization verified(std::vector<LinearFactor> factors, RPoly real_cofactor,
                                  const DQPoly& source);

    const std::vector<LinearFactor>& factors() const { return factors_; }
    const RPoly& real_cofactor() const { return cofactor_; }

    /// real_cofactor * prod (t - h_i).
    DQPoly product() const;
    DQPoly factor_product() const;

    /// Joint letters left to right, e.g. "PRR".
    std::string signature() const;

    bool operator==(const Factorization& rhs) const {
        return factors_ == rhs.factors_ && cofactor_ == rhs.cofactor_;
    }

private:
    Factorization(std::vector<LinearFactor> f, RPoly c)
        : factors_(std::move(f)), cofactor_(std::move(c)) {}
    std::vector<LinearFactor> factors_;
    RPoly cofactor_;
};

/// Unique zero h = -(lead)^-1 * (const) of a degree-1 remainder. Throws
/// NonInvertibleLeadingCoefficient when the leading coefficient has a zero
/// primal part, which signals a non-generic case.
DualQuaternion zero_of_linear_remainder(const DQPoly& r);

/// One run of the generic factorization algorithm: consumes the quadratic
/// norm factors in the given order (order[0] first, producing the rightmost
/// linear factor). C must be monic; order must be a permutation of
/// quadratic_factor_decomposition(norm_poly(C)). Throws NonGeneric when the
/// remainder zero-extraction fails at some stage.
Factorization factor_with_order(const MotionPoly& c, const std::vector<RPoly>& order,
                                const Mode& mode = Mode::exact());

struct AllFactorizations {
    std::vector<Factorization> factorizations; // deduplicated
    int permutations_tried = 0;
    int nongeneric_count = 0;
    std::vector<std::string> diagnostics; // one entry per failed permutation
};

/// Runs factor_with_order over all (multiset-distinct) permutations of the
/// norm factors, deduplicates identical factor sequences, and reports
/// per-permutation failures instead of throwing.
AllFactorizations all_factorizations(const MotionPoly& c, const Mode& mode = Mode::exact());

/// Both factorizations (t-h1)(t-h2) = (t-h1')(t-h2') of a monic quadratic
/// quaternion polynomial P not in R[t]; they coincide when the two norm
/// factors are equal.
std::pair<Factorization, Factorization> qpoly_two_factorizations(const QPoly& p,
                                                                 const Mode& mode = Mode::exact());

/// Shape xi + eps D of a monic quadratic translational motion polynomial
/// (real primal xi of degree 2, pure nonzero D of degree <= 1).
struct TranslationalForm {
    RPoly xi;
    QPoly d;
};

/// Validates and decomposes a translational quadratic; throws
/// MalformedTranslational otherwise.
TranslationalForm translational_form(const MotionPoly& c1);

/// Circular-translation criterion for C1 = xi + eps D with irreducible xi:
/// true iff xi divides D conj(D) (which forces xi == D conj(D) up to scale).
bool circular_translation_criterion(const MotionPoly& c1);

/// Affine-parameterized set of factorizations: factor coefficients are
/// affine functions of the named parameters, and every realization at
/// rational parameter values passes the product identity.
class FactorFamily {
public:
    struct AffineFactor {
        DualQuaternion base;
        std::vector<DualQuaternion> directions; // one per parameter
        JointKind kind;
    };

    FactorFamily(std::vector<std::string> parameters, std::map<std::string, Rat> particular,
                 std::vector<AffineFactor> factors, RPoly real_cofactor, DQPoly source);

    const std::vector<std::string>& parameters() const { return parameters_; }
    const std::map<std::string, Rat>& particular() const { return particular_; }
    const std::vector<AffineFactor>& affine_factors() const { return factors_; }
    const RPoly& real_cofactor() const { return cofactor_; }
    const DQPoly& source() const { return source_; }

    /// Factor values at the given parameter assignment (ordered like
    /// parameters()); the result is product-verified.
    Factorization realize(const std::vector<Rat>& values) const;
    Factorization realize_particular() const;

    /// Parameter values that make factor `index` equal h (affine solve);
    /// nullopt when h is outside the family.
    std::optional<std::vector<Rat>> solve_for_factor(std::size_t index,
                                                     const DualQuaternion& h) const;

private:
    std::vector<std::string> parameters_;
    std::map<std::string, Rat> particular_;
    std::vector<AffineFactor> factors_;
    RPoly cofactor_;
    DQPoly source_;
};

/// All factorizations C1 = (t-h)(t-k) of a circular translation, as a
/// two-parameter affine family. The primal parts are the quaternion
/// conjugate-root pair of xi fixed by D; the parameters split the dual
/// parts. Throws NotCircular when the criterion fails.
FactorFamily circular_translation_family(const MotionPoly& c1);

/// Result of factoring a translational quadratic with reducible xi.
struct TranslationPair {
    Factorization first_order;  // C1 = (t-h)(t-k)
    Factorization second_order; // C1 = (t-k)(t-h)
};
struct NoFactorizationReason {
    std::string reason;
};
using ReducibleTranslationResult = std::variant<TranslationPair, FactorFamily, NoFactorizationReason>;

/// Distinct rational roots: the unique commuting pair of translational
/// factors in both orders. Double root lambda: an infinite family iff
/// D = (t-lambda) d1 (sign fixed by the product identity), otherwise no
/// factorization exists.
ReducibleTranslationResult reducible_translation_factorizations(const MotionPoly& c1,
                                                                const Mode& mode = Mode::exact());

/// Degree-4 factorizations (t-g1)(t-g2)^2(t-g3) of xi*C1 for a
/// non-factorable translational quadratic with irreducible xi: primal parts
/// are quaternion roots of xi arranged palindromically, the doubled middle
/// factor is structural, and the dual parts come from an exact linear solve.
/// Remaining freedom is exposed as a two-parameter affine family.
FactorFamily multiplication_trick(const MotionPoly& c1, const Mode& mode = Mode::exact());

} // namespace motionfact
