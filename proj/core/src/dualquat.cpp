#include "motionfact/dualquat.hpp"

#include "motionfact/errors.hpp"
#include "motionfact/realroots.hpp"

#include <cmath>
#include <sstream>

namespace motionfact {

DualQuaternion DualQuaternion::inverse() const {
    if (primal.is_zero()) throw Error("dual quaternion with zero primal part has no inverse");
    const Quaternion pinv = primal.inverse();
    return {pinv, -(pinv * dual * pinv)};
}

std::array<Rat, 8> DualQuaternion::components() const {
    return {primal.w, primal.x, primal.y, primal.z, dual.w, dual.x, dual.y, dual.z};
}

DualQuaternion DualQuaternion::from_components(const std::array<Rat, 8>& c) {
    return {Quaternion(c[0], c[1], c[2], c[3]), Quaternion(c[4], c[5], c[6], c[7])};
}

std::string DualQuaternion::str() const {
    if (dual.is_zero()) return primal.str();
    std::ostringstream os;
    if (!primal.is_zero()) os << primal.str() << " + ";
    os << "eps(" << dual.str() << ")";
    return os.str();
}

bool study_condition(const DualQuaternion& h) { return h.primal.dot(h.dual) == 0; }

bool is_motion_linear(const DualQuaternion& h) {
    return h.dual.w == 0 && study_condition(h);
}

Vec3 act_on_point(const DualQuaternion& h, const Vec3& p) {
    if (h.primal.is_zero()) throw ZeroPrimal("point action undefined for zero primal part");
    if (!study_condition(h)) throw Error("point action requires the Study condition");
    const Quaternion& x = h.primal;
    const Quaternion& y = h.dual;
    const Quaternion pt = Quaternion::from_vec(p);
    const Quaternion d = x * y.conj() - y * x.conj() + x * pt * x.conj();
    const Rat n = x.norm2();
    return {d.x / n, d.y / n, d.z / n};
}

const char* joint_kind_name(JointKind kind) {
    return kind == JointKind::Rotational ? "rotational" : "translational";
}

JointKind classify_linear(const DualQuaternion& h) {
    return h.primal.is_real() ? JointKind::Translational : JointKind::Rotational;
}

namespace {

// Solves the 3x3 rational system M r = b by Gaussian elimination; the system
// may be rank-deficient. Returns a particular solution (free variables set to
// zero) or nullopt when inconsistent.
std::optional<Vec3> solve3(std::array<std::array<Rat, 3>, 3> m, std::array<Rat, 3> b) {
    std::array<int, 3> col_of_row{-1, -1, -1};
    int row = 0;
    for (int col = 0; col < 3 && row < 3; ++col) {
        int pivot = -1;
        for (int r = row; r < 3; ++r) {
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(row)]);
        std::swap(b[static_cast<std::size_t>(pivot)], b[static_cast<std::size_t>(row)]);
        const Rat inv = Rat(1) / m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (int c = 0; c < 3; ++c) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] *= inv;
        b[static_cast<std::size_t>(row)] *= inv;
        for (int r = 0; r < 3; ++r) {
            if (r == row) continue;
            const Rat f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int c = 0; c < 3; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
            b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(row)];
        }
        col_of_row[static_cast<std::size_t>(row)] = col;
        ++row;
    }
    for (int r = row; r < 3; ++r)
        if (b[static_cast<std::size_t>(r)] != 0) return std::nullopt;
    // fully reduced rows: pivot columns carry b, free variables stay zero
    Vec3 sol;
    Rat* comps[3] = {&sol.x, &sol.y, &sol.z};
    for (int r = 0; r < row; ++r)
        *comps[col_of_row[static_cast<std::size_t>(r)]] = b[static_cast<std::size_t>(r)];
    return sol;
}

} // namespace

AxisGeometry axis_of(const DualQuaternion& h) {
    const JointKind kind = classify_linear(h);
    if (kind == JointKind::Translational) {
        const Vec3 dir = h.dual.vec();
        if (dir.is_zero()) throw DegenerateAxis("translational factor with zero dual vector part");
        return {dir, std::nullopt};
    }
    const Vec3 dir = h.primal.vec();
    if (dir.is_zero()) throw DegenerateAxis("rotational factor with real primal part");

    // Fixed points of the displacement at t = 0: with x = -primal, y = -dual,
    // a point r is fixed iff  x R conj(x) - |x|^2 R = y conj(x) - x conj(y).
    const Quaternion x = -h.primal;
    const Quaternion y = -h.dual;
    const Rat n = x.norm2();
    const Quaternion rhs_q = y * x.conj() - x * y.conj();
    std::array<std::array<Rat, 3>, 3> m;
    const Vec3 basis[3] = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    for (int c = 0; c < 3; ++c) {
        const Quaternion img = x * Quaternion::from_vec(basis[c]) * x.conj();
        m[0][static_cast<std::size_t>(c)] = img.x - n * basis[c].x;
        m[1][static_cast<std::size_t>(c)] = img.y - n * basis[c].y;
        m[2][static_cast<std::size_t>(c)] = img.z - n * basis[c].z;
    }
    const auto point = solve3(m, {rhs_q.x, rhs_q.y, rhs_q.z});
    if (!point) throw DegenerateAxis("no fixed point: factor is not a pure rotation");
    return {dir, point->cross(dir)};
}

Quaternion quaternion_root_of_real_quadratic(const RPoly& xi, const Vec3& s, const Mode& mode) {
    if (xi.degree() != 2 || !xi.is_monic())
        throw Error("quaternion root requires a monic quadratic");
    if (quadratic_discriminant(xi) >= 0)
        throw ReducibleInput("quadratic is reducible over the reals");
    if (s.norm2() != 1) throw Error("direction must be an exact unit vector");
    const Rat x1 = xi.coeff(1), x0 = xi.coeff(0);
    const Rat w2 = 4 * x0 - x1 * x1;
    Rat w;
    if (!rat_is_square(w2, &w)) {
        if (mode.is_exact())
            throw ExactModeIrrationalRoot("4*x0 - x1^2 = " + rat_to_string(w2) +
                                          " is not a rational square");
        w = rat_from_double(std::sqrt(rat_to_double(w2)));
    }
    return {-x1 / 2, w * s.x / 2, w * s.y / 2, w * s.z / 2};
}

AngleCos2 angle_cos_squared(const Vec3& u, const Vec3& v) {
    if (u.is_zero() || v.is_zero()) throw ZeroDirection("angle with zero direction");
    const Rat d = u.dot(v);
    return {d * d / (u.norm2() * v.norm2()), sign(d)};
}

} // namespace motionfact
