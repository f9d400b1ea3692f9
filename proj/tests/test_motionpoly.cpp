#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motionfact/errors.hpp"
#include "motionfact/motionpoly.hpp"
#include "support/generators.hpp"

using namespace motionfact;

namespace {

const DualQuaternion I = DualQuaternion::from_primal(Quaternion::i());
const DualQuaternion J = DualQuaternion::from_primal(Quaternion::j());
const DualQuaternion K = DualQuaternion::from_primal(Quaternion::k());

DQPoly lf(const DualQuaternion& h) { return DQPoly::linear_factor(h); }

} // namespace

TEST_CASE("multiplication under the commuting-t rule") {
    // (t-i)(t-j) = t^2 - (i+j)t + k
    const DQPoly prod = lf(I) * lf(J);
    CHECK(prod.coeff(2) == DualQuaternion::one());
    CHECK(prod.coeff(1) == -(I + J));
    CHECK(prod.coeff(0) == K);
    // identity
    CHECK(lf(I) * DQPoly::constant(DualQuaternion::one()) == lf(I));
}

TEST_CASE("norm polynomials") {
    CHECK(MotionPoly::linear_factor(I).norm_poly() == RPoly{Rat(1), Rat(0), Rat(1)});
    // C = t - eps i: norm = t^2
    const DualQuaternion epsi{Quaternion(), Quaternion::i()};
    CHECK(MotionPoly::linear_factor(epsi).norm_poly() == RPoly{Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("certification rejects non-motion polynomials") {
    // t - (i + eps i) violates the Study condition
    CHECK_THROWS_AS(MotionPoly::certify(lf(DualQuaternion{Quaternion::i(), Quaternion::i()})),
                    NotMotionPolynomial);
    // dual part with a scalar component fails too
    CHECK_THROWS_AS(
        MotionPoly::certify(lf(DualQuaternion{Quaternion::i(), Quaternion::scalar(1)})),
        NotMotionPolynomial);
}

TEST_CASE("right evaluation in the expanded form") {
    const DQPoly c = lf(I) * lf(J);
    CHECK(c.eval_right(J).is_zero());
    // C(i) = hk - kh with h=i, k=j: equals 2k
    CHECK(c.eval_right(I) == K * Rat(2));
    CHECK(c.eval_right(DualQuaternion{}) == c.coeff(0));
}

TEST_CASE("right division by a real polynomial") {
    const RPoly m{Rat(1), Rat(0), Rat(1)}; // t^2+1
    const DQPoly c = lf(I) * DQPoly::from_real(m);
    auto [q, r] = right_divide_by_real(c, m);
    CHECK(r.is_zero());
    CHECK(q == lf(I));

    const DQPoly c2 = lf(I) * lf(J); // t^2 - (i+j)t + k
    auto [q2, r2] = right_divide_by_real(c2, m);
    CHECK(q2 == DQPoly::constant(DualQuaternion::one()));
    CHECK(r2.coeff(1) == -(I + J));
    CHECK(r2.coeff(0) == K - DualQuaternion::one());
}

TEST_CASE("linear quotients") {
    const DQPoly c = lf(I) * lf(J);
    CHECK(quo_right_linear(c, J) == lf(I));
    CHECK(quo_left_linear(c, I) == lf(J));
    CHECK_THROWS_AS(quo_right_linear(c, I), NotAFactor); // eval_right(C, i) != 0
}

TEST_CASE("darboux cofactor from the worked example") {
    // C = xi P - eps eta i P with xi = t^2+1, eta = 5/2 t - 3/4,
    // P = t - (7/9 i - 4/9 j + 4/9 k); dividing by t - h leaves
    // C1 = t^2 + 1 - eps i (5/2 t - 3/4)
    const Quaternion h(0, Rat(7, 9), Rat(-4, 9), Rat(4, 9));
    const RPoly xi{Rat(1), Rat(0), Rat(1)};
    const RPoly eta{Rat(-3, 4), Rat(5, 2)};
    const DQPoly p = lf(DualQuaternion::from_primal(h));
    const DQPoly xi_p = xi * p;
    const DQPoly eta_i_p = eta * (DQPoly::constant(I) * p);
    std::vector<DualQuaternion> coeffs;
    for (int i = 0; i <= 3; ++i)
        coeffs.push_back(DualQuaternion{xi_p.coeff(i).primal, -eta_i_p.coeff(i).primal});
    const MotionPoly c = MotionPoly::certify(DQPoly(coeffs));

    CHECK(c.norm_poly() == xi * xi * xi); // (t^2+1)^3 = xi^2 P conj(P)

    const MotionPoly c1 = quo_right_linear(c, DualQuaternion::from_primal(h));
    // expected: t^2 + 1 - eps i (5/2 t - 3/4)
    CHECK(c1.coeff(2) == DualQuaternion::one());
    CHECK(c1.coeff(1) == DualQuaternion{Quaternion(), Quaternion(0, Rat(-5, 2), 0, 0)});
    CHECK(c1.coeff(0) ==
          DualQuaternion{Quaternion::scalar(1), Quaternion(0, Rat(3, 4), 0, 0)});
}

TEST_CASE("property: norm multiplicativity and certificate closure") {
    testing::Rng rng(21);
    for (int n = 0; n < 50; ++n) {
        const MotionPoly a = rng.motion_poly(rng.int_in(1, 2));
        const MotionPoly b = rng.motion_poly(rng.int_in(1, 2));
        const MotionPoly ab = a * b; // certify() inside would throw on failure
        CHECK(ab.norm_poly() == a.norm_poly() * b.norm_poly());
    }
}

TEST_CASE("property: zeros and right factors correspond") {
    testing::Rng rng(22);
    for (int n = 0; n < 60; ++n) {
        const DualQuaternion h = rng.rotation_factor();
        const MotionPoly q = rng.motion_poly(rng.int_in(1, 2));
        const DQPoly c = q.raw() * lf(h);
        // one direction: eval at the right root vanishes
        CHECK(c.eval_right(h).is_zero());
        // other direction: the quotient reconstructs exactly
        const DQPoly back = quo_right_linear(c, h);
        CHECK(back * lf(h) == c);
        CHECK(back == q.raw());
    }
}

TEST_CASE("evaluation of a product is not the product of evaluations") {
    // noncommutativity witness kept as a regression anchor
    const DQPoly c = lf(I) * lf(J);
    const DualQuaternion at_i_product = c.eval_right(I);
    const DualQuaternion factor_values = (I - I) * (I - J);
    CHECK(factor_values.is_zero());
    CHECK_FALSE(at_i_product.is_zero());
}

TEST_CASE("projective equality and real content") {
    const DQPoly c = lf(I) * lf(J);
    CHECK(projective_equal(c, c * Rat(5)));
    CHECK_FALSE(projective_equal(lf(I), lf(J)));

    const RPoly xi{Rat(1), Rat(0), Rat(1)};
    const DQPoly scaled = xi * c;
    CHECK(projective_equal(c, scaled));
    const auto [content, prim] = real_content(scaled);
    CHECK(content == xi);
    CHECK(prim == c);
}
