#include "motionfact/rational.hpp"

#include "motionfact/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace motionfact {

Rat rat_from_string(std::string_view text) {
    auto bad = [&] { throw ParseError("invalid rational literal: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) -> Int {
        if (s.empty()) bad();
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) bad();
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') bad();
        return Int(std::string(s));
    };
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    const Int num = parse_int(text.substr(0, slash));
    const Int den = parse_int(text.substr(slash + 1));
    if (den <= 0) bad();
    return Rat(num, den);
}

std::string rat_to_string(const Rat& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string rat_to_decimal(const Rat& value, int digits) {
    Int num = numerator(value);
    const Int den = denominator(value);
    std::string sign_str;
    if (num < 0) {
        sign_str = "-";
        num = -num;
    }
    const Int whole = num / den;
    Int rem = num % den;
    std::string frac;
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        frac += char('0' + int(rem / den));
        rem %= den;
    }
    // round half away from zero on the remaining tail
    if (2 * rem >= den && digits > 0) {
        int i = digits - 1;
        while (i >= 0 && frac[i] == '9') frac[i--] = '0';
        if (i >= 0) {
            frac[i]++;
            return sign_str + whole.str() + "." + frac;
        }
        return sign_str + Int(whole + 1).str() + "." + frac;
    }
    if (digits == 0) return sign_str + whole.str();
    return sign_str + whole.str() + "." + frac;
}

int sign(const Rat& value) {
    if (value > 0) return 1;
    if (value < 0) return -1;
    return 0;
}

Rat abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

bool rat_is_square(const Rat& value, Rat* root) {
    if (value < 0) return false;
    const Int num = numerator(value);
    const Int den = denominator(value);
    const Int rn = sqrt(num);
    const Int rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return false;
    if (root) *root = Rat(rn, rd);
    return true;
}

double rat_to_double(const Rat& value) { return value.convert_to<double>(); }

Rat rat_from_double(double value) {
    if (!std::isfinite(value)) throw Error("cannot convert non-finite double to rational");
    if (value == 0.0) return Rat(0);
    int exp = 0;
    const double mant = std::frexp(value, &exp); // value = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings turn the mantissa into an integer
    Int m = Int(std::ldexp(mant, 53));
    exp -= 53;
    Rat r(m);
    if (exp >= 0) {
        r *= Rat(Int(1) << exp);
    } else {
        r /= Rat(Int(1) << -exp);
    }
    return r;
}

Rat reconstruct_rational(const Rat& x, const Int& max_den) {
    // Continued fraction convergents p_k/q_k of x; return the last one with
    // q_k <= max_den (x itself when its denominator is already small enough).
    if (denominator(x) <= max_den) return x;
    Int p2 = 0, q2 = 1; // convergent k-2
    Int p1 = 1, q1 = 0; // convergent k-1
    Int best_num = 0, best_den = 1;
    Int num = numerator(x), den = denominator(x);
    bool neg = false;
    if (num < 0) {
        neg = true;
        num = -num;
    }
    while (den != 0) {
        const Int a = num / den;
        const Int p = a * p1 + p2;
        const Int q = a * q1 + q2;
        if (q > max_den) break;
        best_num = p;
        best_den = q;
        p2 = p1;
        q2 = q1;
        p1 = p;
        q1 = q;
        const Int r = num % den;
        num = den;
        den = r;
    }
    Rat result(best_num, best_den);
    return neg ? Rat(-result) : result;
}

} // namespace motionfact
