#include "motionfact/quaternion.hpp"

#include "motionfact/errors.hpp"

#include <sstream>

namespace motionfact {

Quaternion Quaternion::operator*(const Quaternion& q) const {
    return {
        w * q.w - x * q.x - y * q.y - z * q.z,
        w * q.x + x * q.w + y * q.z - z * q.y,
        w * q.y - x * q.z + y * q.w + z * q.x,
        w * q.z + x * q.y - y * q.x + z * q.w,
    };
}

Quaternion Quaternion::inverse() const {
    const Rat n = norm2();
    if (n == 0) throw Error("inverse of zero quaternion");
    const Rat inv = Rat(1) / n;
    return conj() * inv;
}

std::string Quaternion::str() const {
    static const char* units[] = {"", "i", "j", "k"};
    const Rat* comps[] = {&w, &x, &y, &z};
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n < 4; ++n) {
        const Rat& c = *comps[n];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const Rat a = abs(c);
        if (n == 0 || a != 1) os << rat_to_string(a);
        os << units[n];
        first = false;
    }
    if (first) return "0";
    return os.str();
}

} // namespace motionfact
