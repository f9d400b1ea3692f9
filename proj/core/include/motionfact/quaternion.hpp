#pragma once

#include "motionfact/rational.hpp"
#include "motionfact/vec3.hpp"

#include <string>

namespace motionfact {

/// Quaternion w + x i + y j + z k with exact rational components.
struct Quaternion {
    Rat w{0}, x{0}, y{0}, z{0};

    Quaternion() = default;
    Quaternion(Rat w_, Rat x_, Rat y_, Rat z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    static Quaternion scalar(const Rat& s) { return {s, 0, 0, 0}; }
    static Quaternion from_vec(const Vec3& v) { return {0, v.x, v.y, v.z}; }
    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    bool operator==(const Quaternion&) const = default;

    Quaternion operator+(const Quaternion& q) const { return {w + q.w, x + q.x, y + q.y, z + q.z}; }
    Quaternion operator-(const Quaternion& q) const { return {w - q.w, x - q.x, y - q.y, z - q.z}; }
    Quaternion operator-() const { return {-w, -x, -y, -z}; }
    Quaternion operator*(const Quaternion& q) const;
    Quaternion operator*(const Rat& s) const { return {w * s, x * s, y * s, z * s}; }

    Quaternion conj() const { return {w, -x, -y, -z}; }
    /// q * conj(q) = w^2 + x^2 + y^2 + z^2.
    Rat norm2() const { return w * w + x * x + y * y + z * z; }
    /// 4-dimensional dot product; <p,q> = scalar part of (p conj(q) + q conj(p)) / 2.
    Rat dot(const Quaternion& q) const { return w * q.w + x * q.x + y * q.y + z * q.z; }

    bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
    bool is_real() const { return x == 0 && y == 0 && z == 0; }
    bool is_pure() const { return w == 0; }
    Vec3 vec() const { return {x, y, z}; }

    /// Multiplicative inverse; requires a nonzero quaternion.
    Quaternion inverse() const;

    std::string str() const;
};

inline Quaternion operator*(const Rat& s, const Quaternion& q) { return q * s; }

} // namespace motionfact
