#include "twistgraph/fock.hpp"

#include "twistgraph/errors.hpp"
#include "twistgraph/graphs.hpp"
#include "twistgraph/qubit.hpp"

#include <doctest.h>

#include <map>
#include <stdexcept>
#include <vector>

using namespace twistgraph;
using namespace twistgraph::fock;

namespace {

// Operator-algebra oracle: expand (sum_x a^dag_x)^k |0> by enumerating the L^k
// ordered sequences of creation operators. A sequence realising occupation
// config contributes prod_x sqrt(n_x!) after normal ordering, so
// amp^2(config) = (count * sqrt(prod n_x!))^2 / (k! L^k).
std::map<SiteConfiguration, Rational> brute_fock_state(int k, int sites) {
    std::map<SiteConfiguration, long> counts;
    SiteConfiguration config(static_cast<std::size_t>(sites), 0);
    auto place = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            ++counts[config];
            return;
        }
        for (int x = 0; x < sites; ++x) {
            ++config[x];
            self(self, depth + 1);
            --config[x];
        }
    };
    place(place, 0);
    std::map<SiteConfiguration, Rational> state;
    const BigInt norm = factorial(static_cast<unsigned long>(k)) *
                        int_pow(BigInt(sites), static_cast<unsigned long>(k));
    for (const auto& [cfg, count] : counts) {
        BigInt numerator = BigInt(count) * count;
        for (int occ : cfg) numerator *= factorial(static_cast<unsigned long>(occ));
        Rational a2(numerator, norm);
        a2.canonicalize();
        state.emplace(cfg, a2);
    }
    return state;
}

}  // namespace

TEST_CASE("lattice state amplitudes") {
    const auto one = build_fock_state(1, RegionLayout{1, 1, 1});
    REQUIRE(one.size() == 3);
    for (const auto& [cfg, a2] : one) CHECK(a2 == Rational(1, 3));

    // brute-force operator expansion oracle, k = 2 on two sites
    const auto two = build_fock_state(2, RegionLayout{2, 0, 0});
    CHECK(two == brute_fock_state(2, 2));
    CHECK(two.at({2, 0}) == Rational(1, 4));
    CHECK(two.at({1, 1}) == Rational(1, 2));

    for (int k = 1; k <= 3; ++k)
        for (int sites = 1; sites <= 4; ++sites) {
            CAPTURE(k);
            CAPTURE(sites);
            CHECK(build_fock_state(k, RegionLayout{sites, 0, 0}) == brute_fock_state(k, sites));
        }

    Rational total(0);
    for (const auto& [cfg, a2] : build_fock_state(3, RegionLayout{2, 3, 1})) total += a2;
    CHECK(total == 1);
}

TEST_CASE("scale guard") {
    CHECK_THROWS_AS(build_fock_state(6, RegionLayout{20, 20, 20}), ScaleError);
    CHECK_THROWS_AS(build_fock_state(1, RegionLayout{0, 0, 0}), std::invalid_argument);
}

TEST_CASE("grouping to the qubit state") {
    const auto thirds = fock_to_qubit(1, RegionLayout{1, 1, 1});
    CHECK(thirds.amp2_of({1, 0, 0}) == Rational(1, 3));
    CHECK(thirds.amp2_of({0, 1, 0}) == Rational(1, 3));
    CHECK(thirds.amp2_of({0, 0, 1}) == Rational(1, 3));

    const auto split = fock_to_qubit(2, RegionLayout{2, 1, 1});
    CHECK(split.amp2_of({1, 1, 0}) == Rational(1, 4));

    const auto pure = fock_to_qubit(2, RegionLayout{4, 0, 0});
    CHECK(pure.amp2.size() == 1);
    CHECK(pure.amp2_of({2, 0, 0}) == 1);

    for (int k = 1; k <= 3; ++k)
        for (int l1 = 0; l1 <= 3; ++l1)
            for (int l0 = 0; l0 <= 2; ++l0)
                for (int lm1 = 0; lm1 <= 2; ++lm1) {
                    const RegionLayout layout{l1, l0, lm1};
                    if (layout.sites() < 1) continue;
                    const auto grouped = fock_to_qubit(k, layout);
                    const auto direct = qubit::build_qubit_state(k, layout.ratios());
                    CAPTURE(k);
                    CAPTURE(l1);
                    CAPTURE(l0);
                    CAPTURE(lm1);
                    CHECK(grouped.amp2 == direct.amp2);
                }
}

TEST_CASE("Wick pairing oracle") {
    CHECK(wick_oracle(1, 3, RegionLayout{1, 1, 1}) == Rational(2, 9));
    for (int sites : {1, 3})
        for (int n = 2; n <= 5; ++n)
            CHECK(wick_oracle(1, n, RegionLayout{sites, 0, 0}) == 1);

    // k = 2, n = 3 on the (2,1,1) split
    Polynomial3 ref;
    ref.add_term({6, 0, 0}, 1);
    ref.add_term({4, 1, 1}, 12);
    ref.add_term({3, 3, 0}, 8);
    ref.add_term({3, 0, 3}, 8);
    ref.add_term({2, 2, 2}, 27);
    ref.add_term({1, 4, 1}, 12);
    ref.add_term({1, 1, 4}, 12);
    ref.add_term({0, 6, 0}, 1);
    ref.add_term({0, 3, 3}, 8);
    ref.add_term({0, 0, 6}, 1);
    const RegionLayout layout{2, 1, 1};
    CHECK(wick_oracle(2, 3, layout) == ref.eval(layout.ratios()));
    CHECK(wick_oracle(2, 3, layout) == Rational(275, 2048));

    CHECK_THROWS_AS(wick_oracle(3, 3, RegionLayout{1, 1, 1}), ScaleError);
}

TEST_CASE("pairing census matches the graph census") {
    for (const auto& [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 2},
                                                               {2, 3}, {2, 4}, {1, 8}}) {
        CAPTURE(k);
        CAPTURE(n);
        CHECK(wick_pairing_census(k, n, RegionLayout{1, 1, 1}) ==
              graphs::partition_function_fast(k, n).coefficient_sum());
    }
}

TEST_CASE("Wick oracle equals the partition function evaluation") {
    const std::vector<RegionLayout> layouts = {{1, 1, 1}, {2, 1, 1}, {3, 2, 1},
                                               {1, 0, 1}, {0, 2, 1}, {4, 0, 0}};
    for (const auto& layout : layouts)
        for (const auto& [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 5},
                                                                   {2, 2}, {2, 3}, {2, 4}}) {
            const BigInt scale = int_pow(factorial(static_cast<unsigned long>(k)),
                                         static_cast<unsigned long>(n));
            Rational expected = graphs::partition_function_fast(k, n).eval(layout.ratios());
            expected /= Rational(scale);
            expected.canonicalize();
            CAPTURE(k);
            CAPTURE(n);
            CHECK(wick_oracle(k, n, layout) == expected);
        }
}

TEST_CASE("region bookkeeping") {
    const RegionLayout layout{2, 3, 1};
    CHECK(layout.sites() == 6);
    CHECK(layout.region_of(0) == 1);
    CHECK(layout.region_of(1) == 1);
    CHECK(layout.region_of(2) == 0);
    CHECK(layout.region_of(4) == 0);
    CHECK(layout.region_of(5) == -1);
    CHECK_THROWS_AS(layout.region_of(6), std::out_of_range);
    const RegionRatios r = layout.ratios();
    CHECK(r.r1 == Rational(1, 3));
    CHECK(r.r0 == Rational(1, 2));
    CHECK(r.rm1 == Rational(1, 6));
}
