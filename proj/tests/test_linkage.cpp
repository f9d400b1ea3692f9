#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motionfact/errors.hpp"
#include "motionfact/linkage.hpp"
#include "motionfact/synthesis.hpp"
#include "support/generators.hpp"

using namespace motionfact;

namespace {

const Quaternion qi = Quaternion::i();
const Quaternion qj = Quaternion::j();

ConstraintInput degp2_input() {
    return ConstraintInput::validated(QPoly::linear_factor(qi + qj) * QPoly::linear_factor(qj),
                                      RPoly{Rat(1), Rat(1)}, RPoly{Rat(1)});
}

ConstraintInput darboux_input() {
    return ConstraintInput::validated(
        QPoly::linear_factor(Quaternion(0, Rat(7, 9), Rat(-4, 9), Rat(4, 9))),
        RPoly{Rat(1), Rat(0), Rat(1)}, RPoly{Rat(-3, 4), Rat(5, 2)});
}

std::vector<Rat> rational_samples(int n) {
    std::vector<Rat> out;
    for (int k = 0; k < n; ++k) out.push_back(Rat(2 * k - n + 1, 2));
    return out;
}

} // namespace

TEST_CASE("joint displacement values") {
    const LinearFactor f = LinearFactor::from(DualQuaternion::from_primal(qi));
    CHECK(joint_displacement(f, Rat(0)) == -DualQuaternion::from_primal(qi));
    CHECK(joint_displacement(f, Rat(1)) ==
          DualQuaternion::from_primal(Quaternion(1, -1, 0, 0)));
    // quarter-turn-class value rotates (0,1,0) to (0,0,1)-ish plane: exact act check
    const DualQuaternion g = joint_displacement(f, Rat(1));
    CHECK(act_on_point(g, {Rat(0), Rat(1), Rat(0)}) == Vec3{Rat(0), Rat(0), Rat(-1)});

    const LinearFactor tr =
        LinearFactor::from(DualQuaternion{Quaternion(), Quaternion::i()});
    const DualQuaternion gt = joint_displacement(tr, Rat(1));
    CHECK(gt == DualQuaternion{Quaternion::scalar(1), -Quaternion::i()});
    // Eq.-(1) convention: 1 - eps i translates by (2, 0, 0)
    CHECK(act_on_point(gt, Vec3{}) == Vec3{Rat(2), Rat(0), Rat(0)});

    const LinearFactor sing =
        LinearFactor::from(DualQuaternion{Quaternion::scalar(1), Quaternion::i()});
    CHECK_THROWS_AS(joint_displacement(sing, Rat(1)), SingularParameter);
}

TEST_CASE("assemble rules") {
    const SixPack six = degp2_sixpack(degp2_input());
    const Linkage ab = Linkage::assemble(six.a, six.b);
    CHECK(ab.signature() == "PRRPRR");
    CHECK_THROWS_AS(Linkage::assemble(six.a, six.a_prime), DanglingLink);

    // different motions cannot close a loop
    const MotionPoly other = MotionPoly::linear_factor(DualQuaternion::from_primal(qi));
    const Factorization single = Factorization::verified(
        {LinearFactor::from(DualQuaternion::from_primal(qi))}, RPoly::constant(Rat(1)),
        other.raw());
    CHECK_THROWS_AS(Linkage::assemble(six.a, single), NotSameMotion);
}

TEST_CASE("closure check passes for assembled linkages and flags tampering") {
    const SixPack six = degp2_sixpack(degp2_input());
    const auto linkages = admissible_pairings(six);
    for (const auto& l : linkages) {
        const ClosureReport rep = closure_check(l, rational_samples(20));
        CHECK(rep.symbolic_real);
        CHECK(rep.all_pass());
    }

    // tamper with one factor: nonzero residual flagged
    std::vector<ChainJoint> a, b;
    for (const auto& j : linkages[0].chain_a()) a.push_back(j);
    for (const auto& j : linkages[0].chain_b()) b.push_back(j);
    a[1].factor.h.dual = a[1].factor.h.dual + Quaternion(0, Rat(1, 7), 0, 0);
    bool tamper_detected = false;
    try {
        const Linkage bad = Linkage::from_chains(a, b, {});
        const ClosureReport rep = closure_check(bad, rational_samples(5));
        tamper_detected = !rep.all_pass();
    } catch (const NotSameMotion&) {
        tamper_detected = true; // caught already at assembly
    }
    CHECK(tamper_detected);
}

TEST_CASE("rprp subloop closure from the degp2 pairing analysis") {
    const SixPack six = degp2_sixpack(degp2_input());
    // (xi - eps eta i)(t - h1) conj(t - s2) conj(t - r1) is a real polynomial
    const DualQuaternion ht = six.a.factors()[0].h;
    const DualQuaternion h1 = six.a.factors()[1].h;
    const DualQuaternion s2 = six.c.factors()[1].h;
    const DualQuaternion r1 = six.c.factors()[0].h;
    const DQPoly closure = DQPoly::linear_factor(ht) * DQPoly::linear_factor(h1) *
                           DQPoly::linear_factor(s2).conj() * DQPoly::linear_factor(r1).conj();
    CHECK(closure.is_real());
}

TEST_CASE("geometric report on the degp2 A-B linkage") {
    const SixPack six = degp2_sixpack(degp2_input());
    const Linkage ab = Linkage::assemble(six.a, six.b);
    const GeometricReport rep = geometric_report(ab);
    CHECK(rep.joint_signature == "PRRPRR");
    // loop order: [ht, h1, h2, s1, r2, r1]; pairs (2,6) and (3,5) are
    // parallel (1-based), i.e. indices (1,5) and (2,4)
    auto in_same_class = [&](int a, int b) {
        for (const auto& cls : rep.parallel_classes) {
            const bool has_a = std::find(cls.begin(), cls.end(), a) != cls.end();
            const bool has_b = std::find(cls.begin(), cls.end(), b) != cls.end();
            if (has_a || has_b) return has_a && has_b;
        }
        return false;
    };
    CHECK(in_same_class(1, 5));
    CHECK(in_same_class(2, 4));

    // second and third axes intersect (both through the origin)
    bool found_origin_pair = false;
    for (const auto& rec : rep.concurrent_points) {
        if (rec.point == Vec3{} && rec.joints.size() >= 2) found_origin_pair = true;
    }
    CHECK(found_origin_pair);
}

TEST_CASE("geometric report on the A-C' linkage: origin concurrency and angles") {
    const SixPack six = degp2_sixpack(degp2_input());
    const Linkage ac = Linkage::assemble(six.a, six.c_prime);
    const GeometricReport rep = geometric_report(ac);
    // three consecutive revolute axes (h1, h2, h2') concurrent at the origin:
    // loop order [ht, h1, h2, h2', s2', r1'] -> indices 1,2,3
    bool origin_triple = false;
    for (const auto& rec : rep.concurrent_points) {
        if (rec.point == Vec3{} && rec.joints.size() >= 3) origin_triple = true;
    }
    CHECK(origin_triple);
    CHECK(!rep.angle_equalities.empty());
}

TEST_CASE("geometric report on the C-C' linkage: third and fourth axes intersect") {
    const SixPack six = degp2_sixpack(degp2_input());
    const Linkage cc = Linkage::assemble(six.c, six.c_prime);
    CHECK(cc.signature() == "RPRRPR");
    // loop order [r1, s2, h2, h2', s2', r1']: joints 2 and 3 share a point
    bool found = false;
    for (const auto& rec : geometric_report(cc).concurrent_points) {
        const bool has2 = std::find(rec.joints.begin(), rec.joints.end(), 2) != rec.joints.end();
        const bool has3 = std::find(rec.joints.begin(), rec.joints.end(), 3) != rec.joints.end();
        if (has2 && has3) found = true;
    }
    CHECK(found);
}

TEST_CASE("geometric report relations survive a change of coordinates") {
    testing::Rng rng(51);
    const SixPack six = degp2_sixpack(degp2_input());
    const Linkage ab = Linkage::assemble(six.a, six.b);
    const GeometricReport before = geometric_report(ab);

    const DualQuaternion g = rng.unit_dualquat();
    auto conjugate_chain = [&](const std::vector<ChainJoint>& chain) {
        std::vector<ChainJoint> out;
        for (const auto& j : chain) {
            // factor t - h maps to t - g h g^-1 under the coordinate change
            const DualQuaternion h = g * j.factor.h * g.conj();
            out.push_back({LinearFactor::from(h), j.multiplicity});
        }
        return out;
    };
    const Linkage moved =
        Linkage::from_chains(conjugate_chain(ab.chain_a()), conjugate_chain(ab.chain_b()), {});
    const GeometricReport after = geometric_report(moved);
    CHECK(after.parallel_classes == before.parallel_classes);
    CHECK(after.joint_signature == before.joint_signature);
    CHECK(after.concurrent_points.size() == before.concurrent_points.size());
    CHECK(closure_check(moved, rational_samples(10)).all_pass());
}

TEST_CASE("7r closure and assembly from family realizations") {
    const Linkage l = darboux_7r(darboux_input());
    CHECK(closure_check(l, rational_samples(20)).all_pass());
}

TEST_CASE("trajectory sampling and tests") {
    const ConstraintInput in = darboux_input();
    const MotionPoly c = build_constraint_motion(in);
    const auto traj = coupler_trajectory(c, Vec3{}, Rat(-2), Rat(2), 9);
    CHECK(traj.size() == 9);
    CHECK(straight_line_test(traj));
    for (const auto& p : traj) {
        CHECK(p.y == 0);
        CHECK(p.z == 0);
    }

    const auto off = coupler_trajectory(c, {Rat(0), Rat(1), Rat(0)}, Rat(-2), Rat(2), 5);
    CHECK(planarity_test(off));
    CHECK_FALSE(straight_line_test(off));

    // identity motion: constant trajectory
    const MotionPoly ident = MotionPoly::certify(DQPoly::constant(DualQuaternion::one()));
    const auto fixed = coupler_trajectory(ident, {Rat(1), Rat(2), Rat(3)}, Rat(0), Rat(1), 4);
    CHECK(straight_line_test(fixed));
    for (const auto& p : fixed) CHECK(p == Vec3{Rat(1), Rat(2), Rat(3)});
}

TEST_CASE("straight line property holds for every constraint motion") {
    testing::Rng rng(52);
    for (int n = 0; n < 10; ++n) {
        // random valid DegP2-style input
        const Quaternion a = rng.nonreal_quaternion();
        const Quaternion b = rng.nonreal_quaternion();
        const QPoly p = QPoly::linear_factor(a) * QPoly::linear_factor(b);
        ConstraintInput in =
            ConstraintInput::validated(p, RPoly{rng.rat(), Rat(1)}, RPoly{rng.nonzero_rat()});
        const MotionPoly c = build_constraint_motion(in);
        int checked = 0;
        testing::Rng inner(100 + static_cast<uint32_t>(n));
        while (checked < 20) {
            const Rat t = inner.rat(9, 5);
            if (in.xi(t) == 0) continue;
            const DualQuaternion g = c(t);
            if (g.primal.is_zero()) continue;
            const Vec3 img = act_on_point(g, Vec3{});
            CHECK(img.y == 0);
            CHECK(img.z == 0);
            CHECK(img == origin_trajectory(in, t));
            ++checked;
        }
    }
}
