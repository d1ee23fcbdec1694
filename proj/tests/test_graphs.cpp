#include "twistgraph/graphs.hpp"

#include "twistgraph/errors.hpp"

#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

using namespace twistgraph;
using namespace twistgraph::graphs;

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

Polynomial3 reference_exp_k2_n3() {
    Polynomial3 p;
    p.add_term({6, 0, 0}, 1);
    p.add_term({4, 1, 1}, 12);
    p.add_term({3, 3, 0}, 8);
    p.add_term({3, 0, 3}, 8);
    p.add_term({2, 2, 2}, 27);
    p.add_term({1, 4, 1}, 12);
    p.add_term({1, 1, 4}, 12);
    p.add_term({0, 6, 0}, 1);
    p.add_term({0, 3, 3}, 8);
    p.add_term({0, 0, 6}, 1);
    return p;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Polynomial3 golden(const std::string& name) {
    return polynomial_from_json(read_file(std::string(TWISTGRAPH_TEST_DATA_DIR) + "/v1/" + name));
}

}  // namespace

TEST_CASE("matching counts") {
    CHECK(count_graphs_raw(1, 3) == 6);
    CHECK(count_graphs_raw(1, 4) == 9);
    CHECK(count_graphs_raw(2, 3) == 720);  // n = 3: every matching qualifies, (kn)! total
    CHECK(count_graphs_raw(1, 2) == 2);
    CHECK(count_graphs_raw(3, 3) == 362880);
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(count_graphs_raw(2, 5), ScaleError);
    CHECK_THROWS_AS(count_graphs_raw(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(partition_function_fast(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(partition_function_fast(0, 3), std::invalid_argument);
}

TEST_CASE("graph invariants") {
    enumerate_graphs_raw(2, 4, [&](const Graph& g) {
        REQUIRE(g.edges.size() == 8);
        int used[4][2] = {};
        for (const auto& e : g.edges) {
            const int expected_copy = ((e.left_copy - 1 + e.shift) % g.n + g.n) % g.n + 1;
            CHECK(e.right_copy == expected_copy);
            ++used[e.right_copy - 1][e.right_particle - 1];
        }
        for (auto& row : used)
            for (int count : row) CHECK(count == 1);
    });
}

TEST_CASE("enumeration is deterministic") {
    std::vector<Graph> first = all_graphs_raw(1, 3);
    std::vector<Graph> second = all_graphs_raw(1, 3);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i].edges == second[i].edges);
}

TEST_CASE("partition function against the worked cases") {
    CHECK(partition_function_raw(1, 3) == reference_exp_k1_n3());
    CHECK(partition_function_raw(1, 4) == reference_exp_k1_n4());
    CHECK(partition_function_raw(2, 3) == reference_exp_k2_n3() * BigInt(8));

    // n = 2 merges the cross classes: p_{1,2} = r0^2 + (r1 + rm1)^2
    Polynomial3 expected12;
    expected12.add_term({2, 0, 0}, 1);
    expected12.add_term({1, 0, 1}, 2);
    expected12.add_term({0, 2, 0}, 1);
    expected12.add_term({0, 0, 2}, 1);
    CHECK(partition_function_raw(1, 2) == expected12);
}

TEST_CASE("golden polynomial files") {
    CHECK(golden("exp_en_k1_n3.json") == reference_exp_k1_n3());
    CHECK(golden("exp_en_k1_n4.json") == reference_exp_k1_n4());
    CHECK(golden("exp_en_k2_n3.json") == reference_exp_k2_n3());
    // serialized canonical form round-trips through the files
    CHECK(polynomial_from_json(to_json(golden("exp_en_k2_n3.json"))) ==
          reference_exp_k2_n3());
}

TEST_CASE("fast route equals raw route") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 2; n <= 6; ++n) {
            if (k * n > kRawEnumerationLimit) continue;
            CAPTURE(k);
            CAPTURE(n);
            CHECK(partition_function_fast(k, n) == partition_function_raw(k, n));
        }
}

TEST_CASE("shift matrices") {
    CHECK(count_shift_matrices(1, 3) == 6);
    CHECK(count_shift_matrices(1, 2) == 2);

    // streamed exactly once, and exactly the matrices realised by matchings
    for (const auto& [k, n] :
         std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {2, 4}, {1, 6}}) {
        std::set<std::vector<int>> streamed;
        enumerate_shift_matrices(k, n, [&](const ShiftMatrix& m) {
            std::vector<int> flat;
            for (int copy = 0; copy < n; ++copy)
                for (int shift : {1, 0, -1}) flat.push_back(m.at(copy, shift));
            CHECK(streamed.insert(flat).second);  // no duplicates
        });
        std::set<std::vector<int>> realised;
        enumerate_graphs_raw(k, n, [&](const Graph& g) {
            const ShiftMatrix m = shift_matrix_of(g);
            std::vector<int> flat;
            for (int copy = 0; copy < n; ++copy)
                for (int shift : {1, 0, -1}) flat.push_back(m.at(copy, shift));
            realised.insert(flat);
        });
        CAPTURE(k);
        CAPTURE(n);
        CHECK(streamed == realised);
    }

    enumerate_shift_matrices(2, 4, [&](const ShiftMatrix& m) {
        for (int copy = 0; copy < m.n(); ++copy) {
            CHECK(m.row_sum(copy) == m.k());
            CHECK(m.incoming_sum(copy) == m.k());
        }
    });

    // identity matching: the all-stay matrix is always feasible
    for (int k = 1; k <= 4; ++k)
        for (int n = 2; n <= 5; ++n) {
            bool found = false;
            enumerate_shift_matrices(k, n, [&](const ShiftMatrix& m) {
                bool all_stay = true;
                for (int copy = 0; copy < n; ++copy)
                    if (m.at(copy, 0) != k) all_stay = false;
                found = found || all_stay;
            });
            CHECK(found);
        }

    // aggregation of a raw graph reproduces its shift counts
    enumerate_graphs_raw(2, 3, [&](const Graph& g) {
        const ShiftMatrix m = shift_matrix_of(g);
        int by_shift[3] = {};
        for (const auto& e : g.edges) ++by_shift[ShiftMatrix::column(e.shift)];
        CHECK(m.shift_total(1) == by_shift[0]);
        CHECK(m.shift_total(0) == by_shift[1]);
        CHECK(m.shift_total(-1) == by_shift[2]);
    });
}

TEST_CASE("per-matrix multiplicity") {
    // Each feasible matrix is realised by exactly (k!)^n prod_m multinomial(k;
    // row m) matchings: the shift split of each copy's left vertices times the
    // bijection onto each right copy's vertices.
    for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}, {1, 5}}) {
        std::map<std::vector<int>, BigInt> realised;
        enumerate_graphs_raw(k, n, [&](const Graph& g) {
            const ShiftMatrix m = shift_matrix_of(g);
            std::vector<int> flat;
            for (int copy = 0; copy < n; ++copy)
                for (int shift : {1, 0, -1}) flat.push_back(m.at(copy, shift));
            realised[flat] += 1;
        });
        const BigInt kfac_n = int_pow(factorial(static_cast<unsigned long>(k)),
                                      static_cast<unsigned long>(n));
        enumerate_shift_matrices(k, n, [&](const ShiftMatrix& m) {
            BigInt expected = kfac_n;
            std::vector<int> flat;
            for (int copy = 0; copy < n; ++copy) {
                expected *= multinomial(k, {m.at(copy, 1), m.at(copy, 0), m.at(copy, -1)});
                for (int shift : {1, 0, -1}) flat.push_back(m.at(copy, shift));
            }
            CAPTURE(k);
            CAPTURE(n);
            CHECK(realised.at(flat) == expected);
        });
    }
}

TEST_CASE("restricted k=1 partition function") {
    CHECK(restricted_partition_k1(0) == Polynomial3::constant(1));
    CHECK(restricted_partition_k1(1) == Polynomial3::r0());

    Polynomial3 expected2;
    expected2.add_term({0, 2, 0}, 1);
    expected2.add_term({1, 0, 1}, 1);
    CHECK(restricted_partition_k1(2) == expected2);

    Polynomial3 expected4;
    expected4.add_term({0, 4, 0}, 1);
    expected4.add_term({1, 2, 1}, 3);
    expected4.add_term({2, 0, 2}, 1);
    CHECK(restricted_partition_k1(4) == expected4);

    for (int n = 0; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(restricted_partition_k1(n) == restricted_partition_k1_closed(n));
    }
}

TEST_CASE("restricted pieces rebuild the full k=1 partition function") {
    for (int n = 2; n <= 9; ++n) {
        Polynomial3 expected = Polynomial3::monomial({n, 0, 0}, 1);
        expected += Polynomial3::monomial({0, 0, n}, 1);
        expected += restricted_partition_k1(n);
        expected += Polynomial3::r1() * Polynomial3::rm1() * restricted_partition_k1(n - 2);
        CAPTURE(n);
        CHECK(partition_function_raw(1, n) == expected);
        CHECK(partition_function_fast(1, n) == expected);
    }
}

TEST_CASE("four-eigenvalue closed form") {
    // n = 3 at equal thirds evaluates to 2/9
    CHECK(partition_k1_closed(3, 1.0 / 3, 1.0 / 3, 1.0 / 3) ==
          doctest::Approx(2.0 / 9).epsilon(1e-14));
    CHECK(partition_k1_closed(5, 1.0, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));

    const RegionRatios r(Rational(1, 5), Rational(2, 5), Rational(2, 5));
    const double via_poly = to_double(partition_function_raw(1, 4).eval(r));
    CHECK(partition_k1_closed(4, 0.2, 0.4, 0.4) == doctest::Approx(via_poly).epsilon(1e-13));
}
