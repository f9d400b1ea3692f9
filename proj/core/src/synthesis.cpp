#include "motionfact/synthesis.hpp"

#include "motionfact/errors.hpp"

#include <algorithm>

namespace motionfact {

namespace {

QPoly qpoly_from_primal(const DQPoly& p) {
    std::vector<Quaternion> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.primal);
    return QPoly(std::move(v));
}

} // namespace

ConstraintInput ConstraintInput::validated(QPoly p, RPoly xi, RPoly eta) {
    if (xi.is_zero() || !xi.is_monic()) throw ConstraintViolation("xi must be monic");
    if (p.is_zero() || !p.is_monic()) throw ConstraintViolation("P must be monic");
    if (eta.is_zero()) throw ConstraintViolation("eta != 0 is required");
    const int deg_xi = *xi.degree();
    const int deg_eta = *eta.degree();
    const int deg_p = *p.degree();
    if (!(deg_eta < deg_xi)) throw ConstraintViolation("deg eta < deg xi is violated");
    if (!(1 <= deg_p)) throw ConstraintViolation("1 <= deg P is violated");
    if (!(deg_p + deg_xi <= 3)) throw ConstraintViolation("deg P + deg xi <= 3 is violated");
    if (p.is_real()) throw ConstraintViolation("P must not be a real polynomial");
    return {std::move(p), std::move(xi), std::move(eta)};
}

const char* case_kind_name(CaseKind kind) {
    switch (kind) {
        case CaseKind::DegP2: return "DegP2";
        case CaseKind::DegP1XiLinear: return "DegP1XiLinear";
        case CaseKind::DegP1XiReducible: return "DegP1XiReducible";
        case CaseKind::Darboux: return "Darboux";
        case CaseKind::VerticalDarboux: return "VerticalDarboux";
        case CaseKind::NonFactorableCubic: return "NonFactorableCubic";
    }
    return "?";
}

MotionPoly build_constraint_motion(const ConstraintInput& in) {
    const DQPoly xi_p = in.xi * in.p.to_dqpoly();
    const DQPoly eta_i_p =
        in.eta * (DQPoly::constant(DualQuaternion::from_primal(Quaternion::i())) * in.p.to_dqpoly());
    const int n = std::max(*xi_p.degree(), eta_i_p.is_zero() ? 0 : *eta_i_p.degree());
    std::vector<DualQuaternion> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        coeffs.push_back(DualQuaternion{xi_p.coeff(i).primal, -eta_i_p.coeff(i).primal});
    return MotionPoly::certify(DQPoly(std::move(coeffs)));
}

Vec3 origin_trajectory(const ConstraintInput& in, const Rat& t) {
    const Rat xi_t = in.xi(t);
    if (xi_t == 0)
        throw PoleAtParameter("xi vanishes at t = " + rat_to_string(t));
    return {2 * in.eta(t) / xi_t, Rat(0), Rat(0)};
}

CaseKind classify_case(const ConstraintInput& in) {
    const int deg_p = *in.p.degree();
    if (deg_p == 2) return CaseKind::DegP2;
    const int deg_xi = *in.xi.degree();
    if (deg_xi == 1) return CaseKind::DegP1XiLinear;
    if (quadratic_discriminant(in.xi) >= 0) return CaseKind::DegP1XiReducible;
    const Quaternion h = -in.p.coeff(0);
    if (in.p.norm_poly() != in.xi) return CaseKind::NonFactorableCubic;
    if (h.y == 0 && h.z == 0) return CaseKind::VerticalDarboux;
    return CaseKind::Darboux;
}

namespace {

DualQuaternion translational_prefix(const ConstraintInput& in) {
    // xi - eps eta i as a monic linear factor t - h_T with
    // h_T = -x0 + eps eta i (deg xi = 1, eta constant)
    return DualQuaternion{Quaternion::scalar(-in.xi.coeff(0)),
                          Quaternion(0, in.eta.coeff(0), 0, 0)};
}

} // namespace

SixPack degp2_sixpack(const ConstraintInput& in, const Mode& mode) {
    if (classify_case(in) != CaseKind::DegP2)
        throw Error("degp2_sixpack requires a DegP2 input");
    const MotionPoly c = build_constraint_motion(in);

    const auto norm_factors = quadratic_factor_decomposition(in.p.norm_poly(), mode);
    const RPoly n_a = norm_factors[0];
    const RPoly n_b = norm_factors[1];
    if (n_a == n_b)
        throw DegenerateP("the two factorizations of P coincide (equal norm factors)");

    const auto [pa, pb] = qpoly_two_factorizations(in.p, mode);
    if (pa == pb) throw DegenerateP("the two factorizations of P coincide");

    const LinearFactor trans = LinearFactor::from(translational_prefix(in));
    auto prefixed = [&](const Factorization& f) {
        std::vector<LinearFactor> factors{trans};
        for (const auto& g : f.factors()) factors.push_back(g);
        return Factorization::verified(std::move(factors), RPoly::constant(Rat(1)), c.raw());
    };

    const RPoly xi2 = in.xi * in.xi;
    SixPack six{
        prefixed(pa),
        prefixed(pb),
        factor_with_order(c, {xi2, n_a, n_b}, mode),
        factor_with_order(c, {xi2, n_b, n_a}, mode),
        factor_with_order(c, {n_a, xi2, n_b}, mode),
        factor_with_order(c, {n_b, xi2, n_a}, mode),
    };
    return six;
}

std::vector<Linkage> admissible_pairings(const SixPack& six) {
    std::vector<Linkage> out;
    out.push_back(Linkage::assemble(six.a, six.b, {"pairing A-B"}));
    out.push_back(Linkage::assemble(six.a, six.c_prime,
                                    {"pairing A-C'",
                                     "pspr-collapse: three consecutive revolute axes are "
                                     "concurrent; replacing the spherical joint by a revolute "
                                     "joint changes the end-effector motion"}));
    out.push_back(Linkage::assemble(six.b, six.c_prime, {"pairing B-C'"}));
    out.push_back(Linkage::assemble(six.c, six.c_prime, {"pairing C-C'"}));
    return out;
}

namespace {

struct AffineDual {
    // D(a, b, c) = base + a da + b db + c dc, all quaternion polynomials
    DQPoly base, da, db, dc;

    DQPoly at(const Rat& a, const Rat& b, const Rat& c) const {
        return base + da * a + db * b + dc * c;
    }
};

// Dual part of C / (t - (h + eps k2)) as an affine function of k2; exact by
// sampling at k2 in {0, i, j, k} since eps-nilpotency makes the quotient
// affine in k2.
AffineDual dual_of_left_cofactor(const MotionPoly& c, const Quaternion& h) {
    auto dual_at = [&](const Quaternion& k2) {
        const DualQuaternion k{h, k2};
        const DQPoly quotient = quo_right_linear(c.raw(), k);
        return quotient.dual_part();
    };
    const DQPoly d0 = dual_at(Quaternion());
    AffineDual out;
    out.base = d0;
    out.da = dual_at(Quaternion::i()) - d0;
    out.db = dual_at(Quaternion::j()) - d0;
    out.dc = dual_at(Quaternion::k()) - d0;
    return out;
}

} // namespace

DarbouxRightFactor darboux_right_factor(const ConstraintInput& in) {
    const CaseKind kind = classify_case(in);
    if (kind == CaseKind::VerticalDarboux)
        throw VerticalInput("the vertical Darboux motion allows no factorizations");
    if (kind != CaseKind::Darboux) throw Error("darboux_right_factor requires a Darboux input");

    const Quaternion h = -in.p.coeff(0);
    const Rat h0 = h.w, h1 = h.x, h2 = h.y, h3 = h.z;
    const Rat y1 = in.eta.coeff(1), y0 = in.eta.coeff(0);
    const Rat denom = 2 * (h2 * h2 + h3 * h3);

    const Rat a = y1 / 2;
    const Rat b = (y0 * h3 + y1 * (h0 * h3 - h1 * h2)) / denom;
    const Rat c_mag = abs(y0 * h2 + y1 * (h0 * h2 + h1 * h3)) / denom;

    const Rat delta = 4 * (h2 * h2 + h3 * h3) *
                      ((h0 * y1 + y0) * (h0 * y1 + y0) + y1 * y1 * (h1 * h1 + h2 * h2 + h3 * h3));
    if (delta == 0) throw Error("internal: Darboux solvability guard Delta vanished");

    const MotionPoly c = build_constraint_motion(in);
    const AffineDual dual = dual_of_left_cofactor(c, h);
    const Rat x1 = in.xi.coeff(1), x0 = in.xi.coeff(0);

    // all four equations of the proportionality system for z = coeffs of
    // D conj(D) against xi, plus the Study orthogonality h1 a + h2 b + h3 c
    auto equations = [&](const Rat& av, const Rat& bv, const Rat& cv) {
        const DQPoly d = dual.at(av, bv, cv);
        const RPoly z = (d * d.conj()).to_real();
        const Rat z0 = z.coeff(0), z1 = z.coeff(1), z2 = z.coeff(2);
        return std::array<Rat, 4>{z0 * x1 - z1 * x0, z0 - z2 * x0, z1 - z2 * x1,
                                  h1 * av + h2 * bv + h3 * cv};
    };
    auto solves = [&](const Rat& cv) {
        const auto eq = equations(a, b, cv);
        return eq[0] == 0 && eq[1] == 0 && eq[2] == 0 && eq[3] == 0;
    };

    std::vector<Rat> candidates{c_mag};
    if (c_mag != 0) candidates.push_back(-c_mag);
    std::optional<Rat> c_value;
    for (const Rat& cv : candidates) {
        if (solves(cv)) {
            if (c_value) throw Error("internal: both signs of c solve the system");
            c_value = cv;
        }
    }
    if (!c_value)
        throw NoSolution("no sign of c satisfies the circularity system");

    const Quaternion k2(0, a, b, *c_value);
    const LinearFactor q_last = LinearFactor::from(DualQuaternion{h, k2});
    const MotionPoly c1 = quo_right_linear(c, q_last.h);
    if (!circular_translation_criterion(c1))
        throw Error("internal: the left cofactor is not a circular translation");
    return {a, b, *c_value, delta, q_last, c1};
}

FactorFamily darboux_family(const ConstraintInput& in) {
    const DarbouxRightFactor rf = darboux_right_factor(in);
    const MotionPoly c = build_constraint_motion(in);
    const FactorFamily circ = circular_translation_family(rf.c1);

    std::vector<FactorFamily::AffineFactor> factors = circ.affine_factors();
    factors.push_back({rf.q_last.h,
                       std::vector<DualQuaternion>(circ.parameters().size(), DualQuaternion{}),
                       rf.q_last.kind});
    return FactorFamily(circ.parameters(), circ.particular(), std::move(factors),
                        RPoly::constant(Rat(1)), c.raw());
}

Linkage darboux_7r(const ConstraintInput& in, const Mode& mode) {
    const MotionPoly c = build_constraint_motion(in);
    const FactorFamily fam = darboux_family(in);
    const Factorization chain1 = fam.realize_particular();

    // the second chain strips the plain right factor t - h; the remaining
    // translational quadratic is not circular, so the trick applies
    const Quaternion h = -in.p.coeff(0);
    const MotionPoly c1_plain = quo_right_linear(c, DualQuaternion::from_primal(h));
    const FactorFamily trick = multiplication_trick(c1_plain, mode);
    const Factorization trick_part = trick.realize_particular();
    std::vector<LinearFactor> chain2_factors = trick_part.factors();
    chain2_factors.push_back(LinearFactor::from(DualQuaternion::from_primal(h)));
    const DQPoly xi_c = in.xi * c.raw();
    const Factorization chain2 =
        Factorization::verified(std::move(chain2_factors), RPoly::constant(Rat(1)), xi_c);

    return Linkage::assemble(chain1, chain2, {"darboux-7r"});
}

std::optional<ConstraintInput> try_parse_constraint_motion(const MotionPoly& c) {
    if (!c.is_monic()) return std::nullopt;
    const DQPoly primal = c.raw().primal_part();
    const DQPoly dual = c.raw().dual_part();
    if (dual.is_zero()) return std::nullopt;
    for (const auto& coeff : primal.coeffs())
        if (!coeff.dual.is_zero()) return std::nullopt;

    const auto [content, prim] = real_content(primal);
    const RPoly xi = content;
    if (xi.is_zero() || *xi.degree() < 1) return std::nullopt;
    const QPoly p = qpoly_from_primal(prim);
    if (p.is_real() || !p.is_monic()) return std::nullopt;

    // dual must be -eta * i * P for a real eta: divide a nonzero component
    const DQPoly ip = DQPoly::constant(DualQuaternion::from_primal(Quaternion::i())) * p.to_dqpoly();
    RPoly eta;
    bool found = false;
    // dual_part() moves the dual coefficients into the primal slot
    for (int comp = 0; comp < 4 && !found; ++comp) {
        std::vector<Rat> ip_c, dual_c;
        for (const auto& q : ip.coeffs()) ip_c.push_back(q.components()[static_cast<std::size_t>(comp)]);
        for (const auto& q : dual.coeffs())
            dual_c.push_back(q.components()[static_cast<std::size_t>(comp)]);
        const RPoly ip_poly{std::vector<Rat>(ip_c)};
        if (ip_poly.is_zero()) continue;
        const auto [q, r] = RPoly::divmod(RPoly(std::move(dual_c)), ip_poly);
        if (!r.is_zero()) return std::nullopt;
        eta = -q;
        found = true;
    }
    if (!found || eta.is_zero()) return std::nullopt;
    // verify the full identity and the constraint chain
    try {
        ConstraintInput in = ConstraintInput::validated(p, xi, eta);
        const MotionPoly rebuilt = build_constraint_motion(in);
        if (!(rebuilt.raw() == c.raw())) return std::nullopt;
        return in;
    } catch (const ConstraintViolation&) {
        return std::nullopt;
    }
}

} // namespace motionfact
