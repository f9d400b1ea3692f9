#include "motionfact/realroots.hpp"

#include "motionfact/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace motionfact {

namespace {

// Denominator bound for exact-mode rational reconstruction. Anything the
// norm constructions in scope produce is far below this.
const Int kDenBound = Int(1) << 64;

std::vector<RPoly> sturm_chain(const RPoly& sf) {
    std::vector<RPoly> chain;
    chain.push_back(sf);
    RPoly d = sf.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const RPoly r = RPoly::divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int variations_at(const std::vector<RPoly>& chain, const Rat& x) {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sign(p(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int variations_at_infinity(const std::vector<RPoly>& chain, bool positive) {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = sign(p.leading());
        if (!positive && (*p.degree() % 2 != 0)) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

Rat cauchy_bound(const RPoly& p) {
    Rat m(0);
    const Rat lead = abs(p.leading());
    for (const auto& c : p.coeffs()) {
        const Rat a = abs(c) / lead;
        if (a > m) m = a;
    }
    return m + 1;
}

RPoly squarefree_part(const RPoly& p) {
    const RPoly g = RPoly::gcd(p, p.derivative());
    if (g.is_constant()) return p.monic();
    return RPoly::divmod(p, g).first.monic();
}

} // namespace

int count_real_roots(const RPoly& p) {
    if (p.is_zero()) throw Error("real root count of zero polynomial");
    const RPoly sf = squarefree_part(p);
    if (sf.is_constant()) return 0;
    const auto chain = sturm_chain(sf);
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const RPoly& squarefree) {
    const RPoly& sf = squarefree;
    std::vector<std::pair<Rat, Rat>> out;
    if (sf.is_constant()) return out;
    const auto chain = sturm_chain(sf);
    const Rat bound = cauchy_bound(sf);
    const int deg = *sf.degree();

    struct Span {
        Rat lo, hi;
        int vlo, vhi;
    };
    std::vector<Span> work;
    // endpoints +-bound are non-roots by the Cauchy bound
    work.push_back({-bound, bound, variations_at(chain, -bound), variations_at(chain, bound)});
    while (!work.empty()) {
        Span s = work.back();
        work.pop_back();
        const int n = s.vlo - s.vhi;
        if (n <= 0) continue;
        if (n == 1) {
            out.emplace_back(s.lo, s.hi);
            continue;
        }
        // pick a split point that is not itself a root; among deg+2 distinct
        // candidates at most deg can be roots
        Rat mid = (s.lo + s.hi) / 2;
        for (int k = 1; k <= deg + 2 && sf(mid) == 0; ++k)
            mid = s.lo + (s.hi - s.lo) * Rat(k, deg + 3);
        const int vmid = variations_at(chain, mid);
        work.push_back({s.lo, mid, s.vlo, vmid});
        work.push_back({mid, s.hi, vmid, s.vhi});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

namespace {

// Bisect (lo, hi) with sign(sf(lo)) != sign(sf(hi)) until the width drops
// below 2^-bits or an exact root is hit.
std::optional<Rat> bisect_refine(const RPoly& sf, Rat& lo, Rat& hi, int bits) {
    const Rat target = Rat(1) / Rat(Int(1) << bits);
    int slo = sign(sf(lo));
    while (hi - lo > target) {
        const Rat mid = (lo + hi) / 2;
        const int sm = sign(sf(mid));
        if (sm == 0) return mid;
        if (sm == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::nullopt;
}

// Walks the continued-fraction convergents of approx, exact-testing each
// candidate inside the isolating interval [lo, hi] (a convergent outside the
// interval can hit a different root of sf).
std::optional<Rat> try_rational_root(const RPoly& sf, const Rat& approx, const Int& max_den,
                                     const Rat& lo, const Rat& hi) {
    Int p2 = 0, q2 = 1, p1 = 1, q1 = 0;
    Int num = numerator(approx), den = denominator(approx);
    const bool neg = num < 0;
    if (neg) num = -num;
    while (true) {
        if (den == 0) break;
        const Int a = num / den;
        const Int p = a * p1 + p2;
        const Int q = a * q1 + q2;
        if (q > max_den) break;
        Rat cand(p, q);
        if (neg) cand = -cand;
        if (cand >= lo && cand <= hi && sf(cand) == 0) return cand;
        p2 = p1;
        q2 = q1;
        p1 = p;
        q1 = q;
        const Int r = num % den;
        num = den;
        den = r;
    }
    return std::nullopt;
}

struct IsolatedRoot {
    std::optional<Rat> rational;
    Rat approx; // midpoint of the refined interval
};

std::vector<IsolatedRoot> analyze_roots(const RPoly& sf) {
    std::vector<IsolatedRoot> out;
    for (auto [lo, hi] : isolate_real_roots(sf)) {
        if (lo == hi) {
            out.push_back({lo, lo});
            continue;
        }
        // 140 fractional bits put any denominator <= 2^64 within convergent reach
        if (auto exact = bisect_refine(sf, lo, hi, 140)) {
            out.push_back({*exact, *exact});
            continue;
        }
        const Rat mid = (lo + hi) / 2;
        out.push_back({try_rational_root(sf, mid, kDenBound, lo, hi), mid});
    }
    return out;
}

} // namespace

RealRoots real_roots(const RPoly& p) {
    if (p.is_zero()) throw Error("real roots of zero polynomial");
    RealRoots out;
    const RPoly sf = squarefree_part(p);
    if (sf.is_constant()) return out;
    for (const auto& r : analyze_roots(sf)) {
        if (r.rational) {
            out.rational.push_back(*r.rational);
        } else {
            ++out.irrational;
        }
    }
    return out;
}

Rat quadratic_discriminant(const RPoly& p) {
    if (p.degree() != 2) throw Error("discriminant requires degree 2");
    const Rat a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    return b * b - 4 * a * c;
}

QuadraticRoots quadratic_roots(const RPoly& p, const Mode& mode) {
    if (p.degree() != 2) throw Error("quadratic_roots requires degree 2");
    const Rat a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    const Rat disc = b * b - 4 * a * c;
    if (disc < 0) return {ComplexPair{}};
    if (disc == 0) return {Rat(-b / (2 * a))};
    Rat root;
    if (rat_is_square(disc, &root)) {
        Rat r1 = (-b - root) / (2 * a);
        Rat r2 = (-b + root) / (2 * a);
        if (r2 < r1) std::swap(r1, r2);
        return {std::make_pair(r1, r2)};
    }
    if (mode.is_exact())
        throw ExactModeIrrationalRoot("quadratic discriminant " + rat_to_string(disc) +
                                      " is not a rational square");
    const double ad = rat_to_double(a), bd = rat_to_double(b), dd = std::sqrt(rat_to_double(disc));
    double r1 = (-bd - dd) / (2 * ad);
    double r2 = (-bd + dd) / (2 * ad);
    if (r2 < r1) std::swap(r1, r2);
    return {std::make_pair(r1, r2)};
}

std::optional<Rat> squared_linear_root(const RPoly& monic_quadratic) {
    if (monic_quadratic.degree() != 2 || !monic_quadratic.is_monic()) return std::nullopt;
    if (quadratic_discriminant(monic_quadratic) != 0) return std::nullopt;
    return Rat(-monic_quadratic.coeff(1) / 2);
}

namespace {

using Cplx = std::complex<double>;

std::vector<Cplx> durand_kerner(const std::vector<double>& monic_ascending) {
    const int n = static_cast<int>(monic_ascending.size()) - 1;
    auto eval = [&](Cplx z) {
        Cplx acc(0, 0);
        for (int i = n; i >= 0; --i) acc = acc * z + monic_ascending[static_cast<std::size_t>(i)];
        return acc;
    };
    std::vector<Cplx> z(static_cast<std::size_t>(n));
    const Cplx seed(0.4, 0.9);
    Cplx pw(1, 0);
    for (auto& zi : z) {
        pw *= seed;
        zi = pw;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double move = 0;
        for (int i = 0; i < n; ++i) {
            Cplx denom(1, 0);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            const Cplx delta = eval(z[static_cast<std::size_t>(i)]) / denom;
            z[static_cast<std::size_t>(i)] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-14) break;
    }
    return z;
}

struct RatComplex {
    Rat re, im;
};

RatComplex rc_mul(const RatComplex& a, const RatComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

RatComplex rc_div(const RatComplex& a, const RatComplex& b) {
    const Rat n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

Rat round_to_bits(const Rat& x, int bits) {
    const Int scale = Int(1) << bits;
    Int scaled_num = numerator(x) * scale * 2 + denominator(x) * (x >= 0 ? 1 : -1);
    const Int q = scaled_num / (denominator(x) * 2);
    return Rat(q, scale);
}

// Newton refinement of a complex root in exact rational arithmetic,
// truncated to 240 fractional bits per step to keep coefficient sizes down.
RatComplex newton_refine(const RPoly& u, Cplx seed, int iterations) {
    const RPoly du = u.derivative();
    auto eval = [](const RPoly& p, const RatComplex& z) {
        RatComplex acc{Rat(0), Rat(0)};
        for (int i = *p.degree(); i >= 0; --i) {
            acc = rc_mul(acc, z);
            acc.re += p.coeff(i);
        }
        return acc;
    };
    RatComplex z{rat_from_double(seed.real()), rat_from_double(seed.imag())};
    for (int k = 0; k < iterations; ++k) {
        const RatComplex fz = eval(u, z);
        const RatComplex dfz = eval(du, z);
        if (dfz.re == 0 && dfz.im == 0) break;
        const RatComplex step = rc_div(fz, dfz);
        z.re = round_to_bits(z.re - step.re, 240);
        z.im = round_to_bits(z.im - step.im, 240);
    }
    return z;
}

std::optional<RPoly> reconstruct_quadratic(const Rat& b_approx, const Rat& c_approx,
                                           const RPoly& divides_target, const Int& max_den) {
    const Rat b = reconstruct_rational(b_approx, max_den);
    const Rat c = reconstruct_rational(c_approx, max_den);
    const RPoly cand{c, b, Rat(1)};
    if (rpoly_divides(cand, divides_target)) return cand;
    return std::nullopt;
}

// Splits a monic, square-free, positive-definite polynomial into monic
// quadratic factors. Exact mode verifies rationality of each factor.
std::vector<RPoly> split_positive_definite(const RPoly& u, const Mode& mode) {
    std::vector<RPoly> out;
    if (u.is_constant()) return out;
    if (*u.degree() == 2) {
        out.push_back(u);
        return out;
    }
    std::vector<double> cd;
    for (const auto& c : u.coeffs()) cd.push_back(rat_to_double(c));
    const auto roots = durand_kerner(cd);
    std::vector<Cplx> upper;
    for (const auto& z : roots)
        if (z.imag() > 1e-9) upper.push_back(z);
    std::sort(upper.begin(), upper.end(), [](const Cplx& a, const Cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    if (!mode.is_exact()) {
        for (const auto& z : upper) {
            const Rat b = rat_from_double(-2 * z.real());
            const Rat c = rat_from_double(std::norm(z));
            out.push_back(RPoly{c, b, Rat(1)});
        }
        return out;
    }
    RPoly remaining = u;
    std::vector<Cplx> unresolved;
    for (const auto& z : upper) {
        const auto cand = reconstruct_quadratic(rat_from_double(-2 * z.real()),
                                                rat_from_double(std::norm(z)), remaining,
                                                Int(1) << 32);
        if (cand) {
            out.push_back(*cand);
            remaining = RPoly::divmod(remaining, *cand).first;
        } else {
            unresolved.push_back(z);
        }
    }
    for (const auto& z : unresolved) {
        // double-precision pairing was not enough; refine with exact Newton
        const RatComplex zr = newton_refine(remaining, z, 12);
        const auto cand = reconstruct_quadratic(-2 * zr.re, zr.re * zr.re + zr.im * zr.im,
                                                remaining, kDenBound);
        if (!cand)
            throw ExactModeIrrationalSplit(
                "no rational quadratic factor near the complex root pair at (" +
                std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
        out.push_back(*cand);
        remaining = RPoly::divmod(remaining, *cand).first;
    }
    if (!remaining.is_constant())
        throw ExactModeIrrationalSplit("positive-definite part does not split over the rationals");
    return out;
}

} // namespace

std::vector<RPoly> quadratic_factor_decomposition(const RPoly& p, const Mode& mode) {
    if (p.is_zero()) throw Error("decomposition of zero polynomial");
    const int deg = *p.degree();
    if (deg % 2 != 0 || sign(p.leading()) < 0)
        throw NotNonNegative("polynomial is negative somewhere on the reals");

    std::vector<RPoly> out;
    for (const auto& [s, k] : p.squarefree_decomposition()) {
        if (k % 2 != 0 && count_real_roots(s) > 0)
            throw NotNonNegative("odd-multiplicity real root makes the polynomial negative");
        RPoly rest = s;
        if (k % 2 == 0) {
            if (mode.is_exact()) {
                const RealRoots roots = real_roots(s);
                if (roots.irrational > 0)
                    throw ExactModeIrrationalSplit(
                        "real roots of the square part are not rational");
                for (const Rat& r : roots.rational) {
                    const RPoly lin{-r, Rat(1)};
                    rest = RPoly::divmod(rest, lin).first;
                    const RPoly sq = lin * lin;
                    for (int i = 0; i < k / 2; ++i) out.push_back(sq);
                }
            } else {
                for (const auto& iv : isolate_real_roots(s)) {
                    Rat lo = iv.first, hi = iv.second;
                    Rat root = lo;
                    if (lo != hi) {
                        if (auto exact = bisect_refine(s, lo, hi, 60))
                            root = *exact;
                        else
                            root = (lo + hi) / 2;
                    }
                    const RPoly lin{-root, Rat(1)};
                    const RPoly sq = lin * lin;
                    for (int i = 0; i < k / 2; ++i) out.push_back(sq);
                    rest = RPoly::divmod(rest, lin).first;
                }
            }
        }
        const auto quads = split_positive_definite(rest.monic(), mode);
        for (const auto& q : quads)
            for (int i = 0; i < k; ++i) out.push_back(q);
    }
    std::sort(out.begin(), out.end());

    if (mode.is_exact()) {
        RPoly prod = RPoly::constant(p.leading());
        for (const auto& q : out) prod = prod * q;
        if (prod != p) throw Error("internal: quadratic decomposition failed to verify");
    }
    return out;
}

} // namespace motionfact
