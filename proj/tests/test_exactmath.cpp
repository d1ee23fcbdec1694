#include "twistgraph/exactmath.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

using namespace twistgraph;

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(4) == 24);
    // iterated multiplication oracle
    BigInt oracle = 1;
    for (int i = 1; i <= 20; ++i) oracle *= i;
    CHECK(factorial(20) == oracle);
    CHECK(factorial(20).get_str() == "2432902008176640000");
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 7) == 0);
    CHECK(binomial(40, 20) == factorial(40) / (factorial(20) * factorial(20)));
}

TEST_CASE("multinomial basics") {
    CHECK(multinomial(2, {1, 1, 0}) == 2);
    CHECK(multinomial(2, {2, 0, 0}) == 1);
    // factorial-ratio oracle
    CHECK(multinomial(6, {2, 2, 2}) == factorial(6) / (factorial(2) * factorial(2) * factorial(2)));
    CHECK(multinomial(6, {2, 2, 2}) == 90);
    CHECK_THROWS_AS(multinomial(3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(multinomial(2, {3, -1}), std::invalid_argument);
}

TEST_CASE("multinomial times part factorials gives k!") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = std::uniform_int_distribution<int>(0, 9)(rng);
        std::vector<int> parts;
        int left = k;
        while (left > 0) {
            const int p = std::uniform_int_distribution<int>(0, left)(rng);
            parts.push_back(p);
            left -= p;
        }
        parts.push_back(0);
        BigInt product = multinomial(k, parts);
        for (int p : parts) product *= factorial(static_cast<unsigned long>(p));
        CHECK(product == factorial(static_cast<unsigned long>(k)));
    }
}

TEST_CASE("compositions order and contents") {
    std::vector<std::vector<int>> seen;
    for_each_composition(3, 1, [&](const std::vector<int>& parts) { seen.push_back(parts); });
    CHECK(seen == std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

    seen.clear();
    for_each_composition(2, 2, [&](const std::vector<int>& parts) { seen.push_back(parts); });
    CHECK(seen == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("compositions are exhaustive and unique") {
    for (int n = 1; n <= 5; ++n) {
        for (int sigma = 0; sigma <= 6; ++sigma) {
            std::set<std::vector<int>> unique;
            int count = 0;
            for_each_composition(n, sigma, [&](const std::vector<int>& parts) {
                ++count;
                int sum = 0;
                for (int p : parts) {
                    CHECK(p >= 0);
                    sum += p;
                }
                CHECK(sum == sigma);
                unique.insert(parts);
            });
            CHECK(count == static_cast<int>(unique.size()));
            CHECK(composition_count(n, sigma) == count);
        }
    }
    // 20 tuples for (4, 3)
    CHECK(composition_count(4, 3) == 20);
}

namespace {

// Brute force: all binary n-tuples, cyclic adjacency filter.
int brute_cyclic_nonadjacent(int n, int sigma) {
    int count = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != sigma) continue;
        bool ok = true;
        for (int i = 0; i < n; ++i)
            if ((mask >> i & 1) && (mask >> ((i + 1) % n) & 1)) ok = false;
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("cyclic non-adjacent placements") {
    CHECK(cyclic_nonadjacent_count(4, 2) == 2);
    for (int n = 2; n <= 10; ++n) CHECK(cyclic_nonadjacent_count(n, 0) == 1);
    CHECK(cyclic_nonadjacent_count(6, 2) == brute_cyclic_nonadjacent(6, 2));
    CHECK(cyclic_nonadjacent_count(6, 2) == 9);
    for (int n = 2; n <= 8; ++n)
        for (int sigma = 0; 2 * sigma <= n; ++sigma)
            CHECK(cyclic_nonadjacent_count(n, sigma) == brute_cyclic_nonadjacent(n, sigma));
    CHECK_THROWS_AS(cyclic_nonadjacent_count(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_nonadjacent_count(1, 0), std::invalid_argument);
}

TEST_CASE("exact square roots") {
    CHECK(*sqrt_exact(Rational(4, 9)) == Rational(2, 3));
    CHECK(*sqrt_exact(Rational(0)) == 0);
    CHECK(*sqrt_exact(Rational(49, 16)) == Rational(7, 4));
    CHECK(!sqrt_exact(Rational(2)).has_value());
    CHECK(!sqrt_exact(Rational(-1, 4)).has_value());
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1/3") == Rational(1, 3));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational("2/6") == Rational(1, 3));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("rational powers") {
    CHECK(rational_pow(Rational(2, 3), 0) == 1);
    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(0), 5) == 0);
}
