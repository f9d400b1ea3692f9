#pragma once

#include "motionfact/rational.hpp"

namespace motionfact {

/// Exact rational 3-vector.
struct Vec3 {
    Rat x{0}, y{0}, z{0};

    bool operator==(const Vec3&) const = default;

    Vec3 operator+(const Vec3& v) const { return {x + v.x, y + v.y, z + v.z}; }
    Vec3 operator-(const Vec3& v) const { return {x - v.x, y - v.y, z - v.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(const Rat& s) const { return {x * s, y * s, z * s}; }

    bool is_zero() const { return x == 0 && y == 0 && z == 0; }
    Rat dot(const Vec3& v) const { return x * v.x + y * v.y + z * v.z; }
    Vec3 cross(const Vec3& v) const {
        return {y * v.z - z * v.y, z * v.x - x * v.z, x * v.y - y * v.x};
    }
    Rat norm2() const { return dot(*this); }
};

/// True iff u and v span a line (u x v = 0), with both nonzero.
inline bool parallel(const Vec3& u, const Vec3& v) {
    return !u.is_zero() && !v.is_zero() && u.cross(v).is_zero();
}

} // namespace motionfact
