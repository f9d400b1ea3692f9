#pragma once

#include "motionfact/mode.hpp"
#include "motionfact/quaternion.hpp"
#include "motionfact/rpoly.hpp"

#include <array>
#include <optional>
#include <string>

namespace motionfact {

/// Dual quaternion p + eps q with exact rational components. Multiplication
/// follows eps^2 = 0 with eps commuting with i, j, k.
struct DualQuaternion {
    Quaternion primal, dual;

    DualQuaternion() = default;
    DualQuaternion(Quaternion p, Quaternion q) : primal(std::move(p)), dual(std::move(q)) {}

    static DualQuaternion from_primal(const Quaternion& p) { return {p, Quaternion()}; }
    static DualQuaternion scalar(const Rat& s) { return {Quaternion::scalar(s), Quaternion()}; }
    static DualQuaternion one() { return scalar(1); }

    bool operator==(const DualQuaternion&) const = default;

    DualQuaternion operator+(const DualQuaternion& h) const {
        return {primal + h.primal, dual + h.dual};
    }
    DualQuaternion operator-(const DualQuaternion& h) const {
        return {primal - h.primal, dual - h.dual};
    }
    DualQuaternion operator-() const { return {-primal, -dual}; }
    DualQuaternion operator*(const DualQuaternion& h) const {
        return {primal * h.primal, primal * h.dual + dual * h.primal};
    }
    DualQuaternion operator*(const Rat& s) const { return {primal * s, dual * s}; }

    /// Quaternion conjugation of both parts.
    DualQuaternion conj() const { return {primal.conj(), dual.conj()}; }

    bool is_zero() const { return primal.is_zero() && dual.is_zero(); }
    /// A real scalar (no i/j/k and no dual part).
    bool is_real_scalar() const { return primal.is_real() && dual.is_zero(); }

    /// Inverse exists iff the primal part is nonzero.
    DualQuaternion inverse() const;

    /// Components in the order [w, x, y, z, eps w, eps x, eps y, eps z].
    std::array<Rat, 8> components() const;
    static DualQuaternion from_components(const std::array<Rat, 8>& c);

    std::string str() const;
};

inline DualQuaternion operator*(const Rat& s, const DualQuaternion& h) { return h * s; }

/// Study condition x conj(y) + y conj(x) = 0, i.e. the 4-dimensional dot
/// product of primal and dual part vanishes.
bool study_condition(const DualQuaternion& h);

/// True iff t - h is a motion polynomial: Study condition plus a pure dual
/// part (both are forced by (t-h)(t-conj h) being real).
bool is_motion_linear(const DualQuaternion& h);

/// Point action of a Study dual quaternion: p' read off from
/// (x - eps y)(1 + eps p)(conj(x) + eps conj(y)) divided by x conj(x).
/// With this convention h = 1 - (1/2) eps v translates by +v.
Vec3 act_on_point(const DualQuaternion& h, const Vec3& p);

enum class JointKind { Rotational, Translational };

const char* joint_kind_name(JointKind kind);

/// Translational iff the primal part is real; Rotational otherwise.
/// Expects the Study condition to hold.
JointKind classify_linear(const DualQuaternion& h);

/// Line in Pluecker coordinates: direction d != 0 and moment m with d.m = 0.
struct PlueckerLine {
    Vec3 direction;
    Vec3 moment;

    bool passes_through_origin() const { return moment.is_zero(); }
    bool contains(const Vec3& point) const { return point.cross(direction) == moment; }
};

/// Joint axis geometry: a full Pluecker line for rotational factors, a
/// direction only for translational ones.
struct AxisGeometry {
    Vec3 direction;
    std::optional<Vec3> moment; // nullopt for translational joints

    bool is_line() const { return moment.has_value(); }
    PlueckerLine line() const { return {direction, *moment}; }
};

/// Axis of the motion t -> t - h. For rotational h the moment comes from the
/// exact fixed-point system of the displacement at t = 0; for translational
/// h only the direction (dual vector part) is defined.
AxisGeometry axis_of(const DualQuaternion& h);

/// Quaternion root  (-x1 + w(s1 i + s2 j + s3 k)) / 2  of a monic irreducible
/// quadratic t^2 + x1 t + x0, where w = sqrt(4 x0 - x1^2) and s is an exact
/// unit vector. Exact mode requires w rational.
Quaternion quaternion_root_of_real_quadratic(const RPoly& xi, const Vec3& s,
                                             const Mode& mode = Mode::exact());

/// Squared cosine of the angle between two directions plus the sign of their
/// dot product; keeps all angle comparisons rational.
struct AngleCos2 {
    Rat cos2;
    int dot_sign;

    bool operator==(const AngleCos2&) const = default;
};

AngleCos2 angle_cos_squared(const Vec3& u, const Vec3& v);

} // namespace motionfact
