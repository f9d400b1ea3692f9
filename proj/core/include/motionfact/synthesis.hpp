#pragma once

#include "motionfact/factorization.hpp"
#include "motionfact/linkage.hpp"

#include <optional>

namespace motionfact {

/// Input data for the straight-line constraint motion C = xi P - eps eta i P.
/// Invariants: 0 <= deg eta < deg xi, 1 <= deg P, deg P + deg xi <= 3,
/// P not real, eta nonzero, P and xi monic.
struct ConstraintInput {
    QPoly p;
    RPoly xi;
    RPoly eta;

    /// Validates the degree chain; throws ConstraintViolation naming the
    /// violated inequality.
    static ConstraintInput validated(QPoly p, RPoly xi, RPoly eta);
};

enum class CaseKind {
    DegP2,
    DegP1XiLinear,
    DegP1XiReducible,
    Darboux,
    VerticalDarboux,
    NonFactorableCubic,
};

const char* case_kind_name(CaseKind kind);

/// The constraint motion C = xi P - eps eta i P as a certified motion
/// polynomial; its norm polynomial is xi^2 P conj(P).
MotionPoly build_constraint_motion(const ConstraintInput& in);

/// Trajectory of the origin: (2 eta(t) / xi(t), 0, 0).
Vec3 origin_trajectory(const ConstraintInput& in, const Rat& t);

/// Case taxonomy: DegP2; for deg P = 1 split by xi (linear / reducible
/// quadratic / irreducible quadratic), the irreducible case splitting into
/// Darboux (xi = P conj P, vector part of h not along i only),
/// VerticalDarboux (h2 = h3 = 0) and NonFactorableCubic (xi != P conj P).
CaseKind classify_case(const ConstraintInput& in);

/// The six labeled factorizations of a DegP2 constraint motion.
struct SixPack {
    Factorization a, a_prime, b, b_prime, c, c_prime;

    std::vector<const Factorization*> all() const { return {&a, &a_prime, &b, &b_prime, &c, &c_prime}; }
    std::vector<std::string> labels() const { return {"A", "A'", "B", "B'", "C", "C'"}; }
};

/// A/A' come from the two quaternion factorizations of P prefixed by the
/// translational factor xi - eps eta i; B/B' and C/C' from the generic
/// algorithm with xi^2 consumed first resp. second. Throws DegenerateP when
/// P's two factorizations coincide.
SixPack degp2_sixpack(const ConstraintInput& in, const Mode& mode = Mode::exact());

/// The four admissible pairings A-B, A-C', B-C', C-C' as linkages; pairings
/// sharing a first or last factor are never formed.
std::vector<Linkage> admissible_pairings(const SixPack& six);

/// Unique admissible right factor of a Darboux motion: k2 = a i + b j + c k
/// with a, b from closed forms and the sign of c fixed by exactly solving
/// the proportionality system for D conj(D) and xi.
struct DarbouxRightFactor {
    Rat a, b, c;
    /// gcd of the 3x3 minors of the system matrix; nonzero for Darboux input
    Rat delta;
    LinearFactor q_last;
    MotionPoly c1; // left cofactor: C = c1 * (t - (h + eps k2))
};

DarbouxRightFactor darboux_right_factor(const ConstraintInput& in);

/// All factorizations of a Darboux motion: the circular-translation family
/// of the left cofactor composed with the fixed right factor.
FactorFamily darboux_family(const ConstraintInput& in);

/// The 7R linkage: one chain is a darboux_family realization, the other the
/// multiplication-trick realization of the left cofactor followed by t - h.
Linkage darboux_7r(const ConstraintInput& in, const Mode& mode = Mode::exact());

/// Recognizes a motion polynomial of the constraint shape xi P - eps eta i P
/// (with the maximal real factor of the primal part as xi). Returns nullopt
/// when C does not have that shape.
std::optional<ConstraintInput> try_parse_constraint_motion(const MotionPoly& c);

} // namespace motionfact
