#include "twistgraph/poly3.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace twistgraph;

namespace {

Polynomial3 reference_exp_k1_n3() {
    Polynomial3 p;
    p.add_term({3, 0, 0}, 1);
    p.add_term({1, 1, 1}, 3);
    p.add_term({0, 3, 0}, 1);
    p.add_term({0, 0, 3}, 1);
    return p;
}

Polynomial3 reference_exp_k1_n4() {
    Polynomial3 p;
    p.add_term({4, 0, 0}, 1);
    p.add_term({2, 0, 2}, 2);
    p.add_term({1, 2, 1}, 4);
    p.add_term({0, 4, 0}, 1);
    p.add_term({0, 0, 4}, 1);
    return p;
}

Polynomial3 random_poly(std::mt19937& rng) {
    Polynomial3 p;
    const int terms = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int i = 0; i < terms; ++i) {
        MonomialExponents e{std::uniform_int_distribution<int>(0, 3)(rng),
                            std::uniform_int_distribution<int>(0, 3)(rng),
                            std::uniform_int_distribution<int>(0, 3)(rng)};
        p.add_term(e, std::uniform_int_distribution<int>(-4, 4)(rng));
    }
    return p;
}

RegionRatios random_ratios(std::mt19937& rng) {
    const int d = std::uniform_int_distribution<int>(2, 12)(rng);
    const int a = std::uniform_int_distribution<int>(0, d)(rng);
    const int b = std::uniform_int_distribution<int>(0, d - a)(rng);
    return RegionRatios(Rational(a, d), Rational(b, d), Rational(d - a - b, d));
}

}  // namespace

TEST_CASE("addition cancels and merges") {
    Polynomial3 cancel = Polynomial3::r1();
    cancel.add_term({1, 0, 0}, -1);
    CHECK(cancel.is_zero());

    Polynomial3 two = Polynomial3::monomial({0, 3, 0}, 1) + Polynomial3::monomial({1, 1, 1}, 3);
    CHECK(two.terms().size() == 2);

    // assembled from its monomials
    Polynomial3 assembled;
    assembled += Polynomial3::monomial({0, 3, 0}, 1);
    assembled += Polynomial3::monomial({1, 1, 1}, 3);
    assembled += Polynomial3::monomial({3, 0, 0}, 1);
    assembled += Polynomial3::monomial({0, 0, 3}, 1);
    CHECK(assembled == reference_exp_k1_n3());
}

TEST_CASE("multiplication") {
    const Polynomial3 cross = Polynomial3::r1() + Polynomial3::rm1();
    const Polynomial3 square = cross * cross;
    Polynomial3 expected;
    expected.add_term({2, 0, 0}, 1);
    expected.add_term({1, 0, 1}, 2);
    expected.add_term({0, 0, 2}, 1);
    CHECK(square == expected);

    CHECK((cross * Polynomial3()).is_zero());

    const Polynomial3 all = Polynomial3::r1() + Polynomial3::r0() + Polynomial3::rm1();
    const Polynomial3 cube = all.pow(3);
    // multinomial expansion oracle
    CHECK(cube.terms().at({1, 1, 1}) == multinomial(3, {1, 1, 1}));
    CHECK(cube.terms().at({1, 1, 1}) == 6);
}

TEST_CASE("evaluation") {
    const Polynomial3 p13 = reference_exp_k1_n3();
    CHECK(p13.eval(Rational(1), Rational(1), Rational(1)) == 6);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const RegionRatios r = random_ratios(rng);
        const int k = std::uniform_int_distribution<int>(1, 5)(rng);
        const Polynomial3 all = Polynomial3::r1() + Polynomial3::r0() + Polynomial3::rm1();
        CHECK(all.pow(static_cast<unsigned>(k)).eval(r) == 1);
    }

    // direct rational substitution oracle for the k=1, n=4 polynomial at
    // r1 = rm1 = 1/4, r0 = 1/2
    const Rational q14(1, 4), q12(1, 2);
    const Rational oracle = rational_pow(q14, 4) + rational_pow(q14, 4) + rational_pow(q12, 4) +
                            Rational(4) * rational_pow(q12, 2) * q14 * q14 +
                            Rational(2) * rational_pow(q14, 2) * rational_pow(q14, 2);
    const RegionRatios r(q14, q12, q14);
    CHECK(reference_exp_k1_n4().eval(r) == oracle);
    CHECK(oracle == Rational(9, 64));

    CHECK(reference_exp_k1_n4().eval_double(0.25, 0.5, 0.25) ==
          doctest::Approx(9.0 / 64.0).epsilon(1e-14));
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const Polynomial3 a = random_poly(rng);
        const Polynomial3 b = random_poly(rng);
        const RegionRatios r = random_ratios(rng);
        CHECK((a + b).eval(r) == a.eval(r) + b.eval(r));
        CHECK((a * b).eval(r) == a.eval(r) * b.eval(r));
    }
}

TEST_CASE("serialization") {
    CHECK(to_json(Polynomial3()) == R"({"terms":[]})");
    CHECK(to_json(Polynomial3::monomial({0, 6, 0}, 1)) ==
          R"({"terms":[{"e1":0,"e0":6,"em1":0,"c":"1"}]})");

    // round-trip, including a coefficient beyond 64 bits
    Polynomial3 p = reference_exp_k1_n4();
    p.add_term({10, 0, 0}, factorial(30));
    CHECK(polynomial_from_json(to_json(p)) == p);

    CHECK_THROWS_AS(polynomial_from_json("not json"), std::runtime_error);
    CHECK_THROWS_AS(polynomial_from_json(R"({"nope":1})"), std::runtime_error);
    CHECK_THROWS_AS(polynomial_from_json(R"({"terms":[{"e1":0,"e0":0,"em1":0,"c":"0"}]})"),
                    std::runtime_error);
    CHECK_THROWS_AS(polynomial_from_json(R"({"terms":[{"e1":-1,"e0":0,"em1":0,"c":"1"}]})"),
                    std::runtime_error);
    CHECK_THROWS_AS(
        polynomial_from_json(
            R"({"terms":[{"e1":1,"e0":0,"em1":0,"c":"1"},{"e1":1,"e0":0,"em1":0,"c":"2"}]})"),
        std::runtime_error);
}

TEST_CASE("text form") {
    CHECK(to_text(Polynomial3()) == "0");
    CHECK(to_text(Polynomial3::monomial({0, 6, 0}, 1)) == "r0^6");
    CHECK(to_text(Polynomial3::constant(5)) == "5");
    CHECK(to_text(reference_exp_k1_n4()) ==
          "r1^4 + 2 r1^2 rm1^2 + 4 r1 r0^2 rm1 + r0^4 + rm1^4");
    Polynomial3 signed_poly = Polynomial3::r1();
    signed_poly.add_term({0, 1, 0}, -2);
    CHECK(to_text(signed_poly) == "r1 - 2 r0");
}

TEST_CASE("structure helpers") {
    const Polynomial3 p = reference_exp_k1_n4();
    CHECK(p.homogeneous_degree() == 4);
    CHECK(!(p + Polynomial3::r1()).homogeneous_degree().has_value());
    CHECK(p.coefficient_sum() == 9);
    CHECK(p.swapped_r1_rm1() == p);

    const Polynomial3 scaled = p * BigInt(6);
    CHECK(scaled.divided_exact(3) == p * BigInt(2));
    CHECK_THROWS_AS(scaled.divided_exact(5), std::domain_error);
    CHECK_THROWS_AS(scaled.divided_exact(0), std::domain_error);
}

TEST_CASE("region ratios validate") {
    CHECK_THROWS_AS(RegionRatios(Rational(1, 2), Rational(1, 2), Rational(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(RegionRatios(Rational(3, 2), Rational(-1, 2), Rational(0)),
                    std::invalid_argument);
    const RegionRatios ok = RegionRatios::thirds();
    CHECK(ok.r1 + ok.r0 + ok.rm1 == 1);
}
