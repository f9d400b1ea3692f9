#pragma once

#include "motionfact/factorization.hpp"

#include <string>
#include <vector>

namespace motionfact {

/// One joint of an open chain; doubled factors (identical consecutive
/// factors) are stored once with a traversal multiplicity.
struct ChainJoint {
    LinearFactor factor;
    int multiplicity = 1;

    bool operator==(const ChainJoint&) const = default;
};

/// Single-loop linkage built from two open chains whose motion polynomials
/// are projectively equal. The chains never share a first or last factor
/// (no dangling links).
class Linkage {
public:
    /// Builds the linkage; throws NotSameMotion when the two factorizations
    /// are not projectively equal and DanglingLink when they share a first
    /// or last factor.
    static Linkage assemble(const Factorization& f1, const Factorization& f2,
                            std::vector<std::string> annotations = {});

    const std::vector<ChainJoint>& chain_a() const { return chain_a_; }
    const std::vector<ChainJoint>& chain_b() const { return chain_b_; }
    const std::vector<std::string>& annotations() const { return annotations_; }
    void annotate(std::string note) { annotations_.push_back(std::move(note)); }

    /// Total joint count (multiplicities count once per joint).
    int joint_count() const;

    /// Joints in loop order: chain a forward, then chain b reversed.
    std::vector<ChainJoint> loop_joints() const;

    /// Joint letters in loop order, e.g. "PRRPRR".
    std::string signature() const;

    /// Chain motion polynomials (products of the stored factors including
    /// multiplicities).
    DQPoly chain_a_poly() const;
    DQPoly chain_b_poly() const;

    static Linkage from_chains(std::vector<ChainJoint> a, std::vector<ChainJoint> b,
                               std::vector<std::string> annotations);

private:
    Linkage() = default;
    std::vector<ChainJoint> chain_a_, chain_b_;
    std::vector<std::string> annotations_;
};

/// Closure verification: the chain-a value times the conjugated reversed
/// chain-b value must be a real multiple of the identity at every sample,
/// and the closure product polynomial must be real.
struct ClosureSample {
    Rat t;
    bool pass;
    /// Largest absolute value among the seven components that must vanish
    /// (exactly zero in exact mode).
    Rat residual;
};

struct ClosureReport {
    bool symbolic_real = false;
    std::vector<ClosureSample> samples;

    bool all_pass() const;
};

ClosureReport closure_check(const Linkage& l, const std::vector<Rat>& samples);

/// Squared-cosine angle equality at a shared middle axis: the angle between
/// axes (a, b) equals the angle between (b, c).
struct AngleEquality {
    int axis_a, axis_b, axis_c;
    AngleCos2 value;
};

/// Point common to several joint axes.
struct ConcurrencyRecord {
    Vec3 point;
    std::vector<int> joints;
};

/// Rotation-angle data of a revolute joint as a function of the motion
/// parameter: tan^2 of the half angle is dir_norm2 / (t - primal_scalar)^2.
struct HalfAngleData {
    int joint;
    Rat primal_scalar;
    Rat dir_norm2;
};

struct GeometricReport {
    std::vector<std::vector<int>> parallel_classes; // partition of joint indices
    std::vector<ConcurrencyRecord> concurrent_points;
    std::vector<int> through_origin;
    std::vector<AngleEquality> angle_equalities;
    std::string joint_signature;
    std::vector<HalfAngleData> half_angles; // rotational joints only
};

/// Exact geometric relations between the loop joints' axes: parallelism,
/// concurrency (>= 3 axes through one point), origin incidence, consecutive
/// squared-cosine angle equalities, and the joint signature. Joint indices
/// refer to loop order.
GeometricReport geometric_report(const Linkage& l);

/// Sampled trajectory of a point under the motion C(t), t equally spaced in
/// [lo, hi]. Throws PoleAtParameter when C(t) has zero primal part.
std::vector<Vec3> coupler_trajectory(const MotionPoly& motion, const Vec3& point, const Rat& lo,
                                     const Rat& hi, int steps);

/// Exact collinearity of all sampled points.
bool straight_line_test(const std::vector<Vec3>& points);

/// Exact coplanarity of every 4-point subset (homogeneous determinants).
bool planarity_test(const std::vector<Vec3>& points);

} // namespace motionfact
