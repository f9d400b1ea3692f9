#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motionfact/errors.hpp"
#include "motionfact/synthesis.hpp"
#include "support/generators.hpp"

using namespace motionfact;

namespace {

const Quaternion qi = Quaternion::i();
const Quaternion qj = Quaternion::j();

ConstraintInput darboux_input() {
    return ConstraintInput::validated(
        QPoly::linear_factor(Quaternion(0, Rat(7, 9), Rat(-4, 9), Rat(4, 9))),
        RPoly{Rat(1), Rat(0), Rat(1)}, RPoly{Rat(-3, 4), Rat(5, 2)});
}

ConstraintInput degp2_input() {
    return ConstraintInput::validated(QPoly::linear_factor(qi + qj) * QPoly::linear_factor(qj),
                                      RPoly{Rat(1), Rat(1)}, RPoly{Rat(1)});
}

} // namespace

TEST_CASE("constraint validation") {
    CHECK_THROWS_AS(ConstraintInput::validated(QPoly::linear_factor(qi), RPoly{Rat(1), Rat(0), Rat(1)},
                                               RPoly()),
                    ConstraintViolation); // eta = 0
    CHECK_THROWS_AS(ConstraintInput::validated(QPoly::linear_factor(qi), RPoly{Rat(1), Rat(1)},
                                               RPoly{Rat(0), Rat(1)}),
                    ConstraintViolation); // deg eta >= deg xi
    CHECK_THROWS_AS(
        ConstraintInput::validated(QPoly{Quaternion::scalar(-1), Quaternion::scalar(1)},
                                   RPoly{Rat(1), Rat(0), Rat(1)}, RPoly{Rat(1)}),
        ConstraintViolation); // P real
    CHECK_THROWS_AS(
        ConstraintInput::validated(QPoly::linear_factor(qi) * QPoly::linear_factor(qj),
                                   RPoly{Rat(1), Rat(0), Rat(1)}, RPoly{Rat(1)}),
        ConstraintViolation); // deg P + deg xi > 3
}

TEST_CASE("constraint motion structure") {
    const ConstraintInput in = darboux_input();
    const MotionPoly c = build_constraint_motion(in);
    // primal = xi P and dual = -eta i P coefficientwise
    const DQPoly xi_p = in.xi * in.p.to_dqpoly();
    const DQPoly eta_i_p =
        in.eta * (DQPoly::constant(DualQuaternion::from_primal(qi)) * in.p.to_dqpoly());
    for (int i = 0; i <= 3; ++i) {
        CHECK(c.coeff(i).primal == xi_p.coeff(i).primal);
        CHECK(c.coeff(i).dual == -eta_i_p.coeff(i).primal);
    }
    // norm identity
    CHECK(c.norm_poly() == in.xi * in.xi * in.p.norm_poly());
}

TEST_CASE("origin trajectory formula and cross-check") {
    const ConstraintInput in = darboux_input();
    CHECK(origin_trajectory(in, Rat(0)) == Vec3{Rat(-3, 2), Rat(0), Rat(0)});

    // eta constant c, xi = t+1, at t=1: (c, 0, 0)
    const ConstraintInput lin = ConstraintInput::validated(
        QPoly::linear_factor(qi + qj) * QPoly::linear_factor(qj), RPoly{Rat(1), Rat(1)},
        RPoly{Rat(5, 3)});
    CHECK(origin_trajectory(lin, Rat(1)) == Vec3{Rat(5, 3), Rat(0), Rat(0)});

    // consistency with the point action at 20 random rational parameters
    const MotionPoly c = build_constraint_motion(in);
    testing::Rng rng(41);
    int checked = 0;
    while (checked < 20) {
        const Rat t = rng.rat(9, 5);
        if (in.xi(t) == 0) continue;
        const DualQuaternion g = c(t);
        if (g.primal.is_zero()) continue;
        CHECK(act_on_point(g, Vec3{}) == origin_trajectory(in, t));
        ++checked;
    }
}

TEST_CASE("case classification covers the taxonomy") {
    CHECK(classify_case(darboux_input()) == CaseKind::Darboux);
    CHECK(classify_case(degp2_input()) == CaseKind::DegP2);

    // vertical: xi = t^2+1, P = t - i
    const ConstraintInput vertical = ConstraintInput::validated(
        QPoly::linear_factor(qi), RPoly{Rat(1), Rat(0), Rat(1)}, RPoly{Rat(1)});
    CHECK(classify_case(vertical) == CaseKind::VerticalDarboux);

    // xi = t^2+4 != P conj(P) = t^2+1
    const ConstraintInput nonfact = ConstraintInput::validated(
        QPoly::linear_factor(qi), RPoly{Rat(4), Rat(0), Rat(1)}, RPoly{Rat(1)});
    CHECK(classify_case(nonfact) == CaseKind::NonFactorableCubic);

    // deg xi = 1
    const ConstraintInput xilin = ConstraintInput::validated(
        QPoly::linear_factor(qi), RPoly{Rat(1), Rat(1)}, RPoly{Rat(1)});
    CHECK(classify_case(xilin) == CaseKind::DegP1XiLinear);

    // xi reducible
    const ConstraintInput xired = ConstraintInput::validated(
        QPoly::linear_factor(qi), RPoly{Rat(2), Rat(-3), Rat(1)}, RPoly{Rat(1)});
    CHECK(classify_case(xired) == CaseKind::DegP1XiReducible);
}

TEST_CASE("degp2 sixpack") {
    const ConstraintInput in = degp2_input();
    const MotionPoly c = build_constraint_motion(in);
    const SixPack six = degp2_sixpack(in);

    const auto all = six.all();
    const std::vector<std::string> expected_sig{"PRR", "PRR", "RRP", "RRP", "RPR", "RPR"};
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i]->product() == c.raw());
        CHECK(all[i]->signature() == expected_sig[i]);
    }
    // B's last factor is translational
    CHECK(six.b.factors().back().kind == JointKind::Translational);
    CHECK(six.b_prime.factors().back().kind == JointKind::Translational);
    // A and C share the rightmost factor; A' and C' likewise
    CHECK(six.a.factors().back() == six.c.factors().back());
    CHECK(six.a_prime.factors().back() == six.c_prime.factors().back());
}

TEST_CASE("degenerate P is rejected") {
    // P = (t-i)(t-j) has norm (t^2+1)^2: the two factorizations coincide
    const ConstraintInput in = ConstraintInput::validated(
        QPoly::linear_factor(qi) * QPoly::linear_factor(qj), RPoly{Rat(1), Rat(1)}, RPoly{Rat(1)});
    CHECK_THROWS_AS(degp2_sixpack(in), DegenerateP);
}

TEST_CASE("admissible pairings") {
    const SixPack six = degp2_sixpack(degp2_input());
    const auto linkages = admissible_pairings(six);
    REQUIRE(linkages.size() == 4);
    CHECK(linkages[0].signature() == "PRRPRR");
    CHECK(linkages[1].signature() == "PRRRPR"); // A-C', the PSPR view
    CHECK(linkages[2].signature() == "RRPRPR");
    CHECK(linkages[3].signature() == "RPRRPR");

    // A and A' share their first factor
    CHECK_THROWS_AS(Linkage::assemble(six.a, six.a_prime), DanglingLink);
    // A and C share their last factor
    CHECK_THROWS_AS(Linkage::assemble(six.a, six.c), DanglingLink);
}

TEST_CASE("degp2 geometric consequences") {
    const SixPack six = degp2_sixpack(degp2_input());

    // norm-factor correspondence pairs parallel axes: (h1, r1), (h2, r2)
    const DualQuaternion h1 = six.a.factors()[1].h;
    const DualQuaternion h2 = six.a.factors()[2].h;
    const DualQuaternion h1p = six.a_prime.factors()[1].h;
    const DualQuaternion h2p = six.a_prime.factors()[2].h;
    const DualQuaternion r1 = six.b.factors()[0].h;
    const DualQuaternion r2 = six.b.factors()[1].h;
    const DualQuaternion r1p = six.b_prime.factors()[0].h;
    const DualQuaternion r2p = six.b_prime.factors()[1].h;

    CHECK(parallel(axis_of(h1).direction, axis_of(r1).direction));
    CHECK(parallel(axis_of(h2).direction, axis_of(r2).direction));
    CHECK(parallel(axis_of(h1p).direction, axis_of(r1p).direction));
    CHECK(parallel(axis_of(h2p).direction, axis_of(r2p).direction));

    // the four rotational axes h1, h1', h2, h2' pass through the origin
    for (const auto& h : {h1, h1p, h2, h2p}) {
        const auto ax = axis_of(h);
        REQUIRE(ax.is_line());
        CHECK(ax.line().passes_through_origin());
    }

    // angle equalities of the A-C' pairing: angle(i, r1) = angle(r1, s2)
    const DualQuaternion s2 = six.c.factors()[1].h;
    const DualQuaternion s2p = six.c_prime.factors()[1].h;
    const Vec3 iv{Rat(1), Rat(0), Rat(0)};
    CHECK(angle_cos_squared(iv, axis_of(r1).direction) ==
          angle_cos_squared(axis_of(r1).direction, axis_of(s2).direction));
    CHECK(angle_cos_squared(iv, axis_of(r1p).direction) ==
          angle_cos_squared(axis_of(r1p).direction, axis_of(s2p).direction));

    // Bennett quadruple: (t-r1)(t-r2) conj(t-r2') conj(t-r1') is real
    const DQPoly bennett = DQPoly::linear_factor(r1) * DQPoly::linear_factor(r2) *
                           DQPoly::linear_factor(r2p).conj() * DQPoly::linear_factor(r1p).conj();
    CHECK(bennett.is_real());
}

TEST_CASE("darboux right factor matches the worked example") {
    const ConstraintInput in = darboux_input();
    const DarbouxRightFactor rf = darboux_right_factor(in);
    CHECK(rf.a == Rat(5, 4));
    CHECK(rf.b == Rat(43, 64));
    CHECK(rf.c == Rat(-97, 64));
    CHECK(rf.delta != 0);

    // Q3 as displayed
    const DualQuaternion q3{Quaternion(0, Rat(7, 9), Rat(-4, 9), Rat(4, 9)),
                            Quaternion(0, Rat(5, 4), Rat(43, 64), Rat(-97, 64))};
    CHECK(rf.q_last.h == q3);

    // the displayed +97/64 violates the orthogonality equation
    const Quaternion h(0, Rat(7, 9), Rat(-4, 9), Rat(4, 9));
    const Rat wrong = h.x * rf.a + h.y * rf.b + h.z * Rat(97, 64);
    CHECK(wrong != 0);
    const Rat right = h.x * rf.a + h.y * rf.b + h.z * rf.c;
    CHECK(right == 0);

    // left cofactor is circular
    CHECK(circular_translation_criterion(rf.c1));
}

TEST_CASE("vertical input is rejected") {
    const ConstraintInput vertical = ConstraintInput::validated(
        QPoly::linear_factor(qi), RPoly{Rat(1), Rat(0), Rat(1)}, RPoly{Rat(1)});
    CHECK_THROWS_AS(darboux_right_factor(vertical), VerticalInput);
}

TEST_CASE("darboux family") {
    const ConstraintInput in = darboux_input();
    const MotionPoly c = build_constraint_motion(in);
    const FactorFamily fam = darboux_family(in);

    // the particular realization is the paper's Q1 Q2 Q3
    const Factorization part = fam.realize_particular();
    REQUIRE(part.factors().size() == 3);
    const DualQuaternion q1{Quaternion(0, Rat(7, 9), Rat(4, 9), Rat(-4, 9)),
                            Quaternion(0, Rat(5, 4), Rat(-43, 64), Rat(97, 64))};
    const DualQuaternion q2 = DualQuaternion::from_primal(
        Quaternion(0, Rat(-7, 9), Rat(-4, 9), Rat(4, 9)));
    const DualQuaternion q3{Quaternion(0, Rat(7, 9), Rat(-4, 9), Rat(4, 9)),
                            Quaternion(0, Rat(5, 4), Rat(43, 64), Rat(-97, 64))};
    CHECK(part.factors()[0].h == q1);
    CHECK(part.factors()[1].h == q2);
    CHECK(part.factors()[2].h == q3);
    CHECK(part.product() == c.raw());

    // the right factor is shared across realizations
    testing::Rng rng(43);
    for (int n = 0; n < 10; ++n) {
        const Factorization f = fam.realize({rng.rat(), rng.rat()});
        CHECK(f.factors()[2].h == q3);
        CHECK(f.product() == c.raw());
    }
}

TEST_CASE("darboux 7r") {
    const ConstraintInput in = darboux_input();
    const Linkage l = darboux_7r(in);
    CHECK(l.joint_count() == 7);
    CHECK(l.signature() == "RRRRRRR");
    CHECK(l.chain_b()[1].multiplicity == 2);

    CHECK(projective_equal(l.chain_a_poly(), l.chain_b_poly()));

    // parallel classes {Q1,Q2}, {Q3,Q4}, {Q5,Q6,Q7} in loop order:
    // loop = [Q1, Q2, Q3, Q4, Q5, Q6, Q7]
    const GeometricReport rep = geometric_report(l);
    std::vector<std::vector<int>> expected{{0, 1}, {2, 3}, {4, 5, 6}};
    CHECK(rep.parallel_classes == expected);

    // the paper's observation: all joint angles agree as functions of t
    REQUIRE(rep.half_angles.size() == 7);
    for (const auto& ha : rep.half_angles) {
        CHECK(ha.primal_scalar == rep.half_angles[0].primal_scalar);
        CHECK(ha.dir_norm2 == rep.half_angles[0].dir_norm2);
    }
}

TEST_CASE("darboux planarity: coupler trajectories are planar, not collinear") {
    const ConstraintInput in = darboux_input();
    const MotionPoly c = build_constraint_motion(in);
    testing::Rng rng(44);
    for (int n = 0; n < 3; ++n) {
        const Vec3 point = rng.nonzero_vec3();
        const auto traj = coupler_trajectory(c, point, Rat(-2), Rat(2), 5);
        CHECK(planarity_test(traj));
    }
    // the origin trajectory is collinear by the straight-line property
    const auto origin_traj = coupler_trajectory(c, Vec3{}, Rat(-2), Rat(2), 5);
    CHECK(straight_line_test(origin_traj));
}

TEST_CASE("constraint motion recognition") {
    const ConstraintInput in = darboux_input();
    const MotionPoly c = build_constraint_motion(in);
    const auto parsed = try_parse_constraint_motion(c);
    REQUIRE(parsed.has_value());
    CHECK(parsed->p == in.p);
    CHECK(parsed->xi == in.xi);
    CHECK(parsed->eta == in.eta);
    CHECK(classify_case(*parsed) == CaseKind::Darboux);

    // a plain rotation factor is not of the constraint shape
    const MotionPoly plain = MotionPoly::linear_factor(DualQuaternion::from_primal(qi));
    CHECK_FALSE(try_parse_constraint_motion(plain).has_value());
}
