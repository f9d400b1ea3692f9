#include "motionfact/factorization.hpp"

#include "motionfact/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace motionfact {

LinearFactor LinearFactor::from(const DualQuaternion& h) {
    if (!is_motion_linear(h))
        throw Error("t - h is not a motion polynomial for h = " + h.str());
    return {h, classify_linear(h)};
}

RPoly LinearFactor::norm_quadratic() const {
    return RPoly{h.primal.norm2(), -2 * h.primal.w, Rat(1)};
}

DualQuaternion joint_displacement(const LinearFactor& f, const Rat& t) {
    const DualQuaternion value = DualQuaternion::scalar(t) - f.h;
    if (value.primal.is_zero())
        throw SingularParameter("factor value has zero primal part at t = " + rat_to_string(t));
    return value;
}

Factorization Factorization::verified(std::vector<LinearFactor> factors, RPoly real_cofactor,
                                      const DQPoly& source) {
    DQPoly prod = DQPoly::from_real(real_cofactor);
    for (const auto& f : factors) prod = prod * DQPoly::linear_factor(f.h);
    if (!(prod == source))
        throw Error("factorization product does not reproduce the source polynomial");
    return Factorization(std::move(factors), std::move(real_cofactor));
}

DQPoly Factorization::product() const {
    DQPoly prod = DQPoly::from_real(cofactor_);
    for (const auto& f : factors_) prod = prod * DQPoly::linear_factor(f.h);
    return prod;
}

DQPoly Factorization::factor_product() const {
    DQPoly prod = DQPoly::constant(DualQuaternion::one());
    for (const auto& f : factors_) prod = prod * DQPoly::linear_factor(f.h);
    return prod;
}

std::string Factorization::signature() const {
    std::string s;
    for (const auto& f : factors_) s += (f.kind == JointKind::Rotational) ? 'R' : 'P';
    return s;
}

DualQuaternion zero_of_linear_remainder(const DQPoly& r) {
    if (r.degree() != 1) throw Error("remainder zero requires degree 1");
    const DualQuaternion lead = r.coeff(1);
    if (lead.primal.is_zero())
        throw NonInvertibleLeadingCoefficient(
            "leading coefficient " + lead.str() + " of the linear remainder has no inverse");
    return -(lead.inverse() * r.coeff(0));
}

namespace {

std::string order_str(const std::vector<RPoly>& order) {
    std::string s = "[";
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) s += ", ";
        s += order[i].str();
    }
    return s + "]";
}

} // namespace

Factorization factor_with_order(const MotionPoly& c, const std::vector<RPoly>& order,
                                const Mode& mode) {
    if (!c.is_monic()) throw Error("factor_with_order requires a monic motion polynomial");
    {
        auto canonical = quadratic_factor_decomposition(c.norm_poly(), mode);
        auto given = order;
        std::sort(given.begin(), given.end());
        if (canonical != given)
            throw Error("order is not a permutation of the norm factors of C");
    }

    DQPoly current = c.raw();
    std::vector<LinearFactor> factors; // built right to left
    for (const RPoly& m : order) {
        DQPoly remainder = right_divide_by_real(current, m).second;
        if (remainder.degree() != 1)
            throw NonGeneric("remainder by " + m.str() + " has no unique zero (degree " +
                             (remainder.is_zero() ? std::string("-inf")
                                                  : std::to_string(*remainder.degree())) +
                             ")");
        DualQuaternion h;
        try {
            h = zero_of_linear_remainder(remainder);
        } catch (const NonInvertibleLeadingCoefficient& e) {
            throw NonGeneric(std::string("remainder zero-extraction failed: ") + e.what());
        }
        LinearFactor factor{};
        try {
            factor = LinearFactor::from(h);
            current = quo_right_linear(current, h);
        } catch (const Error& e) {
            throw NonGeneric(std::string("extracted zero is not a right factor: ") + e.what());
        }
        if (factor.norm_quadratic() != m)
            throw NonGeneric("extracted factor norm " + factor.norm_quadratic().str() +
                             " does not match " + m.str());
        factors.insert(factors.begin(), factor);
    }
    if (!(current == DQPoly::constant(DualQuaternion::one())))
        throw NonGeneric("factor extraction left a nontrivial cofactor: " + current.str());

    // Theorem-level sanity: squared-linear norm factors yield translations.
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const bool squared = squared_linear_root(factors[i].norm_quadratic()).has_value();
        const bool translational = factors[i].kind == JointKind::Translational;
        if (squared != translational)
            throw Error("internal: joint kind contradicts the norm factor type");
    }
    return Factorization::verified(std::move(factors), RPoly::constant(Rat(1)), c.raw());
}

AllFactorizations all_factorizations(const MotionPoly& c, const Mode& mode) {
    AllFactorizations out;
    std::vector<RPoly> perm = quadratic_factor_decomposition(c.norm_poly(), mode);
    std::sort(perm.begin(), perm.end());
    do {
        ++out.permutations_tried;
        try {
            Factorization f = factor_with_order(c, perm, mode);
            const bool seen = std::any_of(out.factorizations.begin(), out.factorizations.end(),
                                          [&](const Factorization& g) { return g == f; });
            if (!seen) out.factorizations.push_back(std::move(f));
        } catch (const NonGeneric& e) {
            ++out.nongeneric_count;
            out.diagnostics.push_back("order " + order_str(perm) + ": " + e.what());
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::pair<Factorization, Factorization> qpoly_two_factorizations(const QPoly& p, const Mode& mode) {
    if (p.degree() != 2 || !p.is_monic())
        throw Error("qpoly_two_factorizations requires a monic quadratic quaternion polynomial");
    if (p.is_real()) throw Error("P must not be a real polynomial");

    const auto norm_factors = quadratic_factor_decomposition(p.norm_poly(), mode);
    const DQPoly pd = p.to_dqpoly();

    auto factor_for = [&](const RPoly& m) -> Factorization {
        const DQPoly remainder = right_divide_by_real(pd, m).second;
        if (remainder.degree() != 1)
            throw NonGeneric("quaternion remainder by " + m.str() + " is not linear");
        const DualQuaternion h2 = zero_of_linear_remainder(remainder);
        const DQPoly p1 = quo_right_linear(pd, h2);
        const DualQuaternion h1 = -p1.coeff(0);
        return Factorization::verified({LinearFactor::from(h1), LinearFactor::from(h2)},
                                       RPoly::constant(Rat(1)), pd);
    };

    return {factor_for(norm_factors[0]), factor_for(norm_factors[1])};
}

TranslationalForm translational_form(const MotionPoly& c1) {
    if (c1.degree() != 2 || !c1.is_monic())
        throw MalformedTranslational("expected a monic quadratic motion polynomial");
    const DQPoly raw = c1.raw();
    std::vector<Rat> xi_coeffs;
    std::vector<Quaternion> d_coeffs;
    for (int i = 0; i <= 2; ++i) {
        const DualQuaternion& c = raw.coeff(i);
        if (!c.primal.is_real())
            throw MalformedTranslational("primal part is not a real polynomial");
        if (!c.dual.is_pure())
            throw MalformedTranslational("dual part is not pure");
        xi_coeffs.push_back(c.primal.w);
        d_coeffs.push_back(c.dual);
    }
    TranslationalForm form{RPoly(std::move(xi_coeffs)), QPoly(std::move(d_coeffs))};
    if (form.d.is_zero())
        throw MalformedTranslational("zero dual part parameterizes the identity, not a translation");
    if (form.d.degree() > 1)
        throw MalformedTranslational("dual part degree exceeds 1");
    return form;
}

bool circular_translation_criterion(const MotionPoly& c1) {
    const TranslationalForm form = translational_form(c1);
    if (quadratic_discriminant(form.xi) >= 0)
        throw MalformedTranslational("criterion requires irreducible primal part");
    return rpoly_divides(form.xi, form.d.norm_poly());
}

FactorFamily::FactorFamily(std::vector<std::string> parameters, std::map<std::string, Rat> particular,
                           std::vector<AffineFactor> factors, RPoly real_cofactor, DQPoly source)
    : parameters_(std::move(parameters)),
      particular_(std::move(particular)),
      factors_(std::move(factors)),
      cofactor_(std::move(real_cofactor)),
      source_(std::move(source)) {
    for (const auto& f : factors_)
        if (f.directions.size() != parameters_.size())
            throw Error("affine factor has wrong number of parameter directions");
    // the product identity must hold identically in the parameters; spot
    // check the particular point and one offset point
    realize_particular();
    std::vector<Rat> probe(parameters_.size());
    for (std::size_t i = 0; i < probe.size(); ++i) probe[i] = Rat(static_cast<int>(i) + 1, 3);
    realize(probe);
}

Factorization FactorFamily::realize(const std::vector<Rat>& values) const {
    if (values.size() != parameters_.size())
        throw Error("parameter count mismatch in family realization");
    std::vector<LinearFactor> factors;
    factors.reserve(factors_.size());
    for (const auto& af : factors_) {
        DualQuaternion h = af.base;
        for (std::size_t i = 0; i < values.size(); ++i) h = h + af.directions[i] * values[i];
        LinearFactor f = LinearFactor::from(h);
        if (f.kind != af.kind) throw Error("realized joint kind drifted from the family kind");
        factors.push_back(std::move(f));
    }
    return Factorization::verified(std::move(factors), cofactor_, source_);
}

Factorization FactorFamily::realize_particular() const {
    std::vector<Rat> values;
    values.reserve(parameters_.size());
    for (const auto& name : parameters_) values.push_back(particular_.at(name));
    return realize(values);
}

std::optional<std::vector<Rat>> FactorFamily::solve_for_factor(std::size_t index,
                                                               const DualQuaternion& h) const {
    if (index >= factors_.size()) throw Error("factor index out of range");
    const AffineFactor& af = factors_[index];
    const std::size_t n = parameters_.size();

    // eliminate the 8 x n system sum values_j * dir_j = h - base
    std::vector<std::array<Rat, 8>> cols;
    for (const auto& d : af.directions) cols.push_back(d.components());
    const auto hb = h.components();
    const auto bb = af.base.components();
    std::vector<std::vector<Rat>> m(8, std::vector<Rat>(n + 1, Rat(0)));
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[r][c] = cols[c][r];
        m[r][n] = hb[r] - bb[r];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && row < 8; ++col) {
        std::size_t piv = row;
        while (piv < 8 && m[piv][col] == 0) ++piv;
        if (piv == 8) continue;
        std::swap(m[piv], m[row]);
        const Rat inv = Rat(1) / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < 8; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (std::size_t c2 = 0; c2 <= n; ++c2) m[r][c2] -= f * m[row][c2];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < 8; ++r)
        if (m[r][n] != 0) return std::nullopt;
    std::vector<Rat> sol(n, Rat(0));
    for (std::size_t r = 0; r < row; ++r) sol[pivot_col[r]] = m[r][n];

    DualQuaternion probe = af.base;
    for (std::size_t i = 0; i < n; ++i) probe = probe + af.directions[i] * sol[i];
    if (!(probe == h)) return std::nullopt;
    return sol;
}

namespace {

// Two independent rational vectors spanning the plane orthogonal to v,
// scaled to primitive integer vectors with positive leading component.
std::pair<Vec3, Vec3> orthogonal_basis(const Vec3& v) {
    const Vec3 axes[3] = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    auto normalize = [](Vec3 w) {
        // clear denominators and common factors, fix the sign
        Int num_gcd = 0, den_lcm = 1;
        for (const Rat* c : {&w.x, &w.y, &w.z}) {
            den_lcm = lcm(den_lcm, denominator(*c));
        }
        w = w * Rat(den_lcm);
        for (const Rat* c : {&w.x, &w.y, &w.z}) num_gcd = gcd(num_gcd, numerator(*c));
        if (num_gcd != 0) w = w * Rat(Int(1), num_gcd);
        for (const Rat* c : {&w.x, &w.y, &w.z}) {
            if (*c != 0) {
                if (*c < 0) w = -w;
                break;
            }
        }
        return w;
    };
    std::vector<Vec3> found;
    for (const auto& e : axes) {
        const Vec3 w = e - v * (v.dot(e) / v.norm2());
        if (w.is_zero()) continue;
        if (!found.empty() && parallel(found.front(), w)) continue;
        found.push_back(normalize(w));
        if (found.size() == 2) break;
    }
    if (found.size() != 2) throw Error("internal: could not build a basis orthogonal to v");
    return {found[0], found[1]};
}

DualQuaternion eps_vec(const Vec3& v) {
    return DualQuaternion{Quaternion(), Quaternion::from_vec(v)};
}

} // namespace

FactorFamily circular_translation_family(const MotionPoly& c1) {
    const TranslationalForm form = translational_form(c1);
    if (quadratic_discriminant(form.xi) >= 0)
        throw NotCircular("primal part must be irreducible");
    if (!rpoly_divides(form.xi, form.d.norm_poly()))
        throw NotCircular("xi does not divide D conj(D); the motion is not a circular translation");

    // D = -q (t - conj p) with q = h2 + k2; conj p = q^-1 d0 recovers the
    // quaternion root pair of xi that D fixes.
    const Quaternion d1 = form.d.coeff(1);
    const Quaternion d0 = form.d.coeff(0);
    if (d1.is_zero()) throw NotCircular("constant D cannot produce a quadratic norm");
    const Quaternion q = -d1;
    const Quaternion p_conj = q.inverse() * d0;
    const Quaternion p = p_conj.conj();
    if (form.xi.coeff(1) != -(p.w * 2) || form.xi.coeff(0) != p.norm2())
        throw NotCircular("the direction fixed by D is not a root of xi");
    const Vec3 v = p.vec();
    if (v.dot(q.vec()) != 0 || !q.is_pure())
        throw NotCircular("D is not orthogonal to the root direction");

    const auto [u1, u2] = orthogonal_basis(v);
    // h2(a,b) = q - a u1 - b u2, k2(a,b) = a u1 + b u2
    std::vector<FactorFamily::AffineFactor> factors;
    factors.push_back({DualQuaternion{p, q}, {eps_vec(-u1), eps_vec(-u2)}, JointKind::Rotational});
    factors.push_back({DualQuaternion{p.conj(), Quaternion()},
                       {eps_vec(u1), eps_vec(u2)},
                       JointKind::Rotational});
    return FactorFamily({"a", "b"}, {{"a", Rat(0)}, {"b", Rat(0)}}, std::move(factors),
                        RPoly::constant(Rat(1)), c1.raw());
}

ReducibleTranslationResult reducible_translation_factorizations(const MotionPoly& c1,
                                                                const Mode& mode) {
    const TranslationalForm form = translational_form(c1);
    if (quadratic_discriminant(form.xi) < 0)
        throw MalformedTranslational("xi must be reducible over the reals");
    const Quaternion d1 = form.d.coeff(1);
    const Quaternion d0 = form.d.coeff(0);
    const QuadraticRoots roots = quadratic_roots(form.xi, mode);

    if (roots.is_double_root()) {
        const Rat lambda = std::get<Rat>(roots.value);
        if (d1.is_zero() || !(d0 == -(d1 * lambda)))
            return NoFactorizationReason{
                "a double root lambda admits factorizations only when D = (t - lambda) d1"};
        // h2 + k2 = -d1 with a free pure split
        std::vector<FactorFamily::AffineFactor> factors;
        const Quaternion lam = Quaternion::scalar(lambda);
        const Vec3 ex{Rat(1), Rat(0), Rat(0)}, ey{Rat(0), Rat(1), Rat(0)}, ez{Rat(0), Rat(0), Rat(1)};
        factors.push_back({DualQuaternion{lam, -d1},
                           {eps_vec(ex), eps_vec(ey), eps_vec(ez)},
                           JointKind::Translational});
        factors.push_back({DualQuaternion{lam, Quaternion()},
                           {eps_vec(-ex), eps_vec(-ey), eps_vec(-ez)},
                           JointKind::Translational});
        return FactorFamily({"a", "b", "c"}, {{"a", Rat(0)}, {"b", Rat(0)}, {"c", Rat(0)}},
                            std::move(factors), RPoly::constant(Rat(1)), c1.raw());
    }
    if (!std::holds_alternative<std::pair<Rat, Rat>>(roots.value))
        throw ExactModeIrrationalRoot("xi has no rational roots in exact mode");
    const auto [h0, k0] = std::get<std::pair<Rat, Rat>>(roots.value);
    // product identity gives h2 + k2 = -d1 and k0 h2 + h0 k2 = d0
    const Rat denom = k0 - h0;
    const Quaternion h2 = (d0 + d1 * h0) * (Rat(1) / denom);
    const Quaternion k2 = -((d0 + d1 * k0) * (Rat(1) / denom));
    const LinearFactor fh = LinearFactor::from(DualQuaternion{Quaternion::scalar(h0), h2});
    const LinearFactor fk = LinearFactor::from(DualQuaternion{Quaternion::scalar(k0), k2});
    return TranslationPair{
        Factorization::verified({fh, fk}, RPoly::constant(Rat(1)), c1.raw()),
        Factorization::verified({fk, fh}, RPoly::constant(Rat(1)), c1.raw()),
    };
}

FactorFamily multiplication_trick(const MotionPoly& c1, const Mode& mode) {
    const TranslationalForm form = translational_form(c1);
    if (quadratic_discriminant(form.xi) >= 0)
        throw Error("multiplication trick requires irreducible xi");
    if (rpoly_divides(form.xi, form.d.norm_poly()))
        throw Error("C1 is a circular translation; use circular_translation_family");

    const Rat x1 = form.xi.coeff(1), x0 = form.xi.coeff(0);
    const Rat p0 = -x1 / 2;
    const Rat w2 = 4 * x0 - x1 * x1; // (2|v|)^2
    const Vec3 d1 = form.d.coeff(1).vec();
    const Vec3 d0 = form.d.coeff(0).vec();
    const Vec3 r = d0 + d1 * p0;

    // v: |v|^2 = w2/4, v ⟂ d1, v ⟂ r
    const Rat target_norm2 = w2 / 4;
    Vec3 v;
    const Vec3 n = d1.cross(r);
    auto scaled_to_target = [&](const Vec3& dir) -> std::optional<Vec3> {
        Rat scale2 = target_norm2 / dir.norm2();
        Rat scale;
        if (rat_is_square(scale2, &scale)) return dir * scale;
        return std::nullopt;
    };
    if (!n.is_zero()) {
        auto sv = scaled_to_target(n);
        if (!sv) {
            if (mode.is_exact())
                throw ExactModeIrrationalRoot(
                    "the forced axis direction cannot be scaled rationally to |v| = w/2");
            const double s = std::sqrt(rat_to_double(target_norm2 / n.norm2()));
            sv = n * rat_from_double(s);
        }
        v = *sv;
        Vec3 probe = v;
        const Rat* first[3] = {&probe.x, &probe.y, &probe.z};
        for (const Rat* c : first) {
            if (*c != 0) {
                if (*c < 0) v = -v;
                break;
            }
        }
    } else {
        const Vec3 e = d1.is_zero() ? d0 : d1;
        if (e.is_zero()) throw MalformedTranslational("D vanishes identically");
        std::optional<Vec3> best;
        const Vec3 axes[3] = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
        for (const auto& axis : axes) {
            if (e.dot(axis) != 0) continue;
            best = scaled_to_target(axis);
            if (best) break;
        }
        if (!best) {
            for (const auto& axis : axes) {
                const Vec3 f = e.cross(axis);
                if (f.is_zero()) continue;
                best = scaled_to_target(f);
                if (best) break;
            }
        }
        if (!best) {
            if (!mode.is_exact()) {
                const Vec3 f = e.cross(Vec3{Rat(1), Rat(0), Rat(0)}).is_zero()
                                   ? e.cross(Vec3{Rat(0), Rat(1), Rat(0)})
                                   : e.cross(Vec3{Rat(1), Rat(0), Rat(0)});
                const double s = std::sqrt(rat_to_double(target_norm2 / f.norm2()));
                best = f * rat_from_double(s);
            } else {
                throw ExactModeIrrationalRoot(
                    "no rational direction orthogonal to D with |v| = w/2 was found");
            }
        }
        v = *best;
    }

    if (v.dot(d1) != 0 || v.dot(r) != 0) {
        std::ostringstream os;
        os << "the dual-part linear system is inconsistent: v.d1 = " << rat_to_string(v.dot(d1))
           << ", v.(d0 + p0 d1) = " << rat_to_string(v.dot(r));
        throw NoSolution(os.str());
    }

    const Quaternion p = Quaternion::scalar(p0) + Quaternion::from_vec(v);
    const Quaternion vq = Quaternion::from_vec(v);
    const Quaternion delta = Quaternion::from_vec(r) * vq.inverse(); // b - a
    if (!delta.is_pure() || delta.vec().dot(v) != 0)
        throw NoSolution("b - a fell outside the admissible plane");

    // m = 0 at the particular point: a* = -(d1 + delta)/2, b* = a* + delta
    const Quaternion d1q = Quaternion::from_vec(d1);
    const Quaternion a_star = -(d1q + delta) * Rat(1, 2);
    const Quaternion b_star = a_star + delta;

    const auto [u1, u2] = orthogonal_basis(v);
    std::vector<FactorFamily::AffineFactor> factors;
    factors.push_back({DualQuaternion{p, a_star}, {eps_vec(u1), eps_vec(u2)}, JointKind::Rotational});
    const FactorFamily::AffineFactor middle{DualQuaternion{p.conj(), Quaternion()},
                                            {eps_vec(-u1), eps_vec(-u2)},
                                            JointKind::Rotational};
    factors.push_back(middle);
    factors.push_back(middle);
    factors.push_back({DualQuaternion{p, b_star}, {eps_vec(u1), eps_vec(u2)}, JointKind::Rotational});

    const DQPoly source = form.xi * c1.raw();
    try {
        return FactorFamily({"a", "b"}, {{"a", Rat(0)}, {"b", Rat(0)}}, std::move(factors),
                            RPoly::constant(Rat(1)), source);
    } catch (const Error& e) {
        throw NoSolution(std::string("dual-part solve left a residual: ") + e.what());
    }
}

} // namespace motionfact
