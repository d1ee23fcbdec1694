#include "checks.hpp"

#include "twistgraph/closedform.hpp"
#include "twistgraph/errors.hpp"
#include "twistgraph/exactmath.hpp"
#include "twistgraph/fock.hpp"
#include "twistgraph/graphs.hpp"
#include "twistgraph/poly3.hpp"
#include "twistgraph/qubit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace twistgraph::checks {

namespace {

using closedform::coefficient_A;
using closedform::negativity_polynomial;

std::string str(const Rational& x) { return x.get_str(); }
std::string str(const BigInt& x) { return x.get_str(); }
std::string str(double x) {
    std::ostringstream out;
    out.precision(15);
    out << x;
    return out.str();
}

void push(std::vector<Check>& checks, std::string name, std::string expected,
          std::string actual, bool pass) {
    checks.push_back(Check{std::move(name), std::move(expected), std::move(actual), pass});
}

// Aggregates a batch of same-shaped comparisons into one report entry.
struct Batch {
    int total = 0;
    int good = 0;
    std::string first_failure;

    void add(bool ok, const std::string& detail) {
        ++total;
        if (ok) {
            ++good;
        } else if (first_failure.empty()) {
            first_failure = detail;
        }
    }

    Check as_check(std::string name) const {
        std::ostringstream expected, actual;
        expected << total << "/" << total;
        actual << good << "/" << total;
        if (!first_failure.empty()) actual << " (first failure: " << first_failure << ")";
        return Check{std::move(name), expected.str(), actual.str(), good == total};
    }
};

const std::vector<RegionRatios>& ratio_grid20() {
    static const std::vector<RegionRatios> grid = [] {
        auto q = [](long a, long b) { return Rational(a, b); };
        std::vector<RegionRatios> g;
        g.emplace_back(q(1, 2), q(1, 4), q(1, 4));
        g.emplace_back(q(1, 3), q(1, 3), q(1, 3));
        g.emplace_back(q(1, 6), q(1, 2), q(1, 3));
        g.emplace_back(q(2, 5), q(2, 5), q(1, 5));
        g.emplace_back(q(1, 8), q(3, 8), q(1, 2));
        g.emplace_back(q(5, 12), q(1, 4), q(1, 3));
        g.emplace_back(q(1, 10), q(7, 10), q(1, 5));
        g.emplace_back(q(3, 7), q(2, 7), q(2, 7));
        g.emplace_back(q(1, 9), q(4, 9), q(4, 9));
        g.emplace_back(q(2, 11), q(5, 11), q(4, 11));
        g.emplace_back(q(0, 1), q(1, 2), q(1, 2));
        g.emplace_back(q(1, 2), q(0, 1), q(1, 2));
        g.emplace_back(q(1, 2), q(1, 2), q(0, 1));
        g.emplace_back(q(1, 1), q(0, 1), q(0, 1));
        g.emplace_back(q(0, 1), q(1, 1), q(0, 1));
        g.emplace_back(q(0, 1), q(0, 1), q(1, 1));
        g.emplace_back(q(3, 4), q(1, 8), q(1, 8));
        g.emplace_back(q(1, 5), q(3, 5), q(1, 5));
        g.emplace_back(q(4, 15), q(7, 15), q(4, 15));
        g.emplace_back(q(5, 16), q(3, 8), q(5, 16));
        return g;
    }();
    return grid;
}

std::string ratio_str(const RegionRatios& r) {
    return "(" + str(r.r1) + "," + str(r.r0) + "," + str(r.rm1) + ")";
}

fock::RegionLayout layout_of(const RegionRatios& r) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), r.r1.get_den().get_mpz_t(), r.r0.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.rm1.get_den().get_mpz_t());
    auto block = [&](const Rational& x) {
        return static_cast<int>(mpz_class(x.get_num() * (l / x.get_den())).get_si());
    };
    return fock::RegionLayout{block(r.r1), block(r.r0), block(r.rm1)};
}

RegionRatios random_triple(std::mt19937& rng, int max_den = 24) {
    std::uniform_int_distribution<int> den_dist(2, max_den);
    const int d = den_dist(rng);
    const int a = std::uniform_int_distribution<int>(0, d)(rng);
    const int b = std::uniform_int_distribution<int>(0, d - a)(rng);
    return RegionRatios(Rational(a, d), Rational(b, d), Rational(d - a - b, d));
}

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

void poly_check(std::vector<Check>& checks, const std::string& name,
                const Polynomial3& expected, const Polynomial3& actual) {
    push(checks, name, to_text(expected), to_text(actual), expected == actual);
}

void criterion_reference_polynomials(std::vector<Check>& checks) {
    const Polynomial3 e13 = reference_exp_k1_n3();
    const Polynomial3 e14 = reference_exp_k1_n4();
    const Polynomial3 e23 = reference_exp_k2_n3() * BigInt(8);  // p_{2,3} = (2!)^3 exp[E_3]
    poly_check(checks, "partition_function_raw(1,3)", e13, graphs::partition_function_raw(1, 3));
    poly_check(checks, "partition_function_fast(1,3)", e13, graphs::partition_function_fast(1, 3));
    poly_check(checks, "partition_function_raw(1,4)", e14, graphs::partition_function_raw(1, 4));
    poly_check(checks, "partition_function_fast(1,4)", e14, graphs::partition_function_fast(1, 4));
    poly_check(checks, "partition_function_raw(2,3)", e23, graphs::partition_function_raw(2, 3));
    poly_check(checks, "partition_function_fast(2,3)", e23, graphs::partition_function_fast(2, 3));
}

void criterion_coefficient_regression(std::vector<Check>& checks) {
    for (int n = 2; n <= 12; ++n) {
        Batch batch;
        for (int sigma = 0; 2 * sigma <= n; ++sigma) {
            const BigInt expected = cyclic_nonadjacent_count(n, sigma);
            const BigInt actual = coefficient_A(1, n, 0, sigma);
            batch.add(expected == actual,
                      "sigma=" + std::to_string(sigma) + " expected " + str(expected) +
                          " got " + str(actual));
        }
        checks.push_back(batch.as_check("A(1,n,0,sigma) == n/(n-sigma) C(n-sigma,sigma), n=" +
                                        std::to_string(n)));
    }
    for (int n = 3; n <= 10; ++n) {
        const BigInt expected = BigInt(n) * (8 * n - 15);
        push(checks, "A(2,n,0,2) == n(8n-15), n=" + std::to_string(n), str(expected),
             str(coefficient_A(2, n, 0, 2)), expected == coefficient_A(2, n, 0, 2));
    }
    for (int n = 3; n <= 10; ++n) {
        BigInt expected = BigInt(4) * n * (8 * n * n - 45 * n + 67);
        mpz_divexact_ui(expected.get_mpz_t(), expected.get_mpz_t(), 3);
        const BigInt actual = coefficient_A(2, n, 0, 3);
        push(checks, "A(2,n,0,3) == (4n/3)(8n^2-45n+67), n=" + std::to_string(n), str(expected),
             str(actual), expected == actual);
    }
    // Cross-validation of the n=3 value: the defining sum and the graph route
    // both give 8 (coefficient of r1^3 rm1^3 in p_{2,3} / (2!)^3); the
    // formula's counting argument needs n >= 4.
    {
        const Polynomial3 p23 = graphs::partition_function_raw(2, 3).divided_exact(8);
        const auto it = p23.terms().find(MonomialExponents{3, 0, 3});
        const BigInt graph_value = (it == p23.terms().end()) ? BigInt(0) : it->second;
        push(checks, "A(2,3,0,3) cross-check vs graph route (needs n >= 4 for the formula)",
             str(graph_value), str(coefficient_A(2, 3, 0, 3)),
             graph_value == coefficient_A(2, 3, 0, 3));
    }
    for (int n = 2; n <= 10; n += 2) {
        const BigInt expected = int_pow(BigInt(2), static_cast<unsigned long>(n)) + 2;
        const BigInt actual = coefficient_A(2, n, 0, n);
        push(checks, "A(2,n,0,n) == 2^n+2, even n=" + std::to_string(n), str(expected),
             str(actual), expected == actual);
    }
}

void criterion_route_equivalence(std::vector<Check>& checks) {
    for (int k = 1; k <= 3; ++k) {
        for (int n = 2; n <= 6; ++n) {
            const BigInt kfac_n =
                int_pow(factorial(static_cast<unsigned long>(k)), static_cast<unsigned long>(n));
            const Polynomial3 scaled = negativity_polynomial(k, n) * kfac_n;
            const Polynomial3 fast = graphs::partition_function_fast(k, n);
            push(checks,
                 "(k!)^n negativity_polynomial == partition_function_fast, k=" +
                     std::to_string(k) + " n=" + std::to_string(n),
                 "term-by-term equal", scaled == fast ? "equal" : "differs", scaled == fast);
        }
    }
}

void criterion_four_route_agreement(std::vector<Check>& checks) {
    for (int k = 1; k <= 2; ++k) {
        for (int n = 1; n <= 4; ++n) {
            const Polynomial3 closed = negativity_polynomial(k, n);
            Polynomial3 fast;
            if (n >= 2) fast = graphs::partition_function_fast(k, n);
            const BigInt kfac_n =
                int_pow(factorial(static_cast<unsigned long>(k)), static_cast<unsigned long>(n));
            Batch batch;
            for (const RegionRatios& r : ratio_grid20()) {
                const Rational direct = qubit::negativity_direct_sum(k, n, r);
                bool ok = true;
                std::ostringstream why;
                const Rational closed_value = closed.eval(r);
                if (closed_value != direct) {
                    ok = false;
                    why << "closed " << str(closed_value) << " vs direct " << str(direct);
                }
                if (n >= 2) {
                    Rational fast_value = fast.eval(r);
                    fast_value /= Rational(kfac_n);
                    fast_value.canonicalize();
                    if (fast_value != direct) {
                        ok = false;
                        why << " fast " << str(fast_value) << " vs direct " << str(direct);
                    }
                }
                const double density = qubit::density_matrix_negativity(k, n, r);
                if (std::abs(density - to_double(direct)) > 1e-10) {
                    ok = false;
                    why << " density " << str(density) << " vs direct " << str(to_double(direct));
                }
                if (k * n <= fock::kWickPairingLimit) {
                    const Rational wick = fock::wick_oracle(k, n, layout_of(r));
                    if (wick != direct) {
                        ok = false;
                        why << " wick " << str(wick) << " vs direct " << str(direct);
                    }
                }
                batch.add(ok, ratio_str(r) + ": " + why.str());
            }
            checks.push_back(batch.as_check("four-route agreement, k=" + std::to_string(k) +
                                            " n=" + std::to_string(n) + " (20 ratio triples)"));
        }
    }
}

void criterion_k1_recursion(std::vector<Check>& checks) {
    for (int n = 0; n <= 12; ++n) {
        const Polynomial3 rec = graphs::restricted_partition_k1(n);
        const Polynomial3 closed = graphs::restricted_partition_k1_closed(n);
        push(checks, "restricted recursion == eigenvalue expansion, n=" + std::to_string(n),
             to_text(closed), to_text(rec), rec == closed);
    }
    for (int n = 2; n <= 12; ++n) {
        Polynomial3 expected = Polynomial3::monomial({n, 0, 0}, 1);
        expected += Polynomial3::monomial({0, 0, n}, 1);
        expected += graphs::restricted_partition_k1(n);
        expected += Polynomial3::r1() * Polynomial3::rm1() * graphs::restricted_partition_k1(n - 2);
        const Polynomial3 fast = graphs::partition_function_fast(1, n);
        push(checks,
             "p_{1,n} == r1^n + rm1^n + restricted_n + r1 rm1 restricted_{n-2}, n=" +
                 std::to_string(n),
             "term-by-term equal", fast == expected ? "equal" : "differs", fast == expected);
    }
    std::mt19937 rng(20260810u);
    std::map<int, Polynomial3> polys;
    Batch closed_batch, logneg_batch;
    for (int i = 0; i < 100; ++i) {
        const RegionRatios r = random_triple(rng);
        const int n = 2 + (i % 11);
        auto [it, inserted] = polys.try_emplace(n);
        if (inserted) it->second = negativity_polynomial(1, n);
        const double via_poly = to_double(it->second.eval(r));
        const double via_closed = graphs::partition_k1_closed(
            n, to_double(r.r1), to_double(r.r0), to_double(r.rm1));
        closed_batch.add(std::abs(via_poly - via_closed) <= 1e-12,
                         ratio_str(r) + " n=" + std::to_string(n) + ": poly " + str(via_poly) +
                             " closed " + str(via_closed));
        const auto spectrum = qubit::negativity_spectrum(1, r);
        double abs_sum = 0.0;
        for (double v : spectrum) abs_sum += std::abs(v);
        const double via_log = closedform::log_negativity_k1(to_double(r.r1), to_double(r.r0),
                                                             to_double(r.rm1));
        logneg_batch.add(std::abs(via_log - std::log(abs_sum)) <= 1e-12,
                         ratio_str(r) + ": closed " + str(via_log) + " spectrum " +
                             str(std::log(abs_sum)));
    }
    checks.push_back(closed_batch.as_check(
        "partition_k1_closed matches polynomial evaluation to 1e-12 (100 random triples)"));
    checks.push_back(logneg_batch.as_check(
        "log_negativity_k1 matches log sum|lambda| to 1e-12 (100 random triples)"));
}

void criterion_renyi_chain(std::vector<Check>& checks) {
    const std::vector<Rational> r1_values = {Rational(0),      Rational(1, 7), Rational(1, 3),
                                             Rational(1, 2),   Rational(5, 8), Rational(7, 9),
                                             Rational(1)};
    for (int k = 1; k <= 4; ++k) {
        for (int n = 2; n <= 6; ++n) {
            const Polynomial3 closed = negativity_polynomial(k, n);
            Batch batch;
            for (const Rational& r1 : r1_values) {
                const Rational r0 = Rational(1) - r1;
                const Rational exp_formula = closedform::renyi_exp(k, n, r1, r0);
                const Rational direct = qubit::renyi_direct(k, n, r1, r0);
                const RegionRatios r(r1, r0, Rational(0));
                const Rational via_poly = closed.eval(r);
                const Rational via_neg = qubit::negativity_direct_sum(k, n, r);
                const bool ok =
                    exp_formula == direct && exp_formula == via_poly && exp_formula == via_neg;
                batch.add(ok, "r1=" + str(r1) + ": formula " + str(exp_formula) + " direct " +
                                  str(direct) + " poly " + str(via_poly) + " negativity " +
                                  str(via_neg));
            }
            checks.push_back(batch.as_check("Renyi chain exact equality, k=" + std::to_string(k) +
                                            " n=" + std::to_string(n)));
        }
    }
}

void criterion_twist_and_unitary(std::vector<Check>& checks) {
    const auto& grid = ratio_grid20();
    for (int n = 1; n <= 3; ++n) {
        Batch batch;
        for (int i = 0; i < 10; ++i) {
            const RegionRatios& r = grid[i];
            const Rational twist = qubit::twist_operator_check(1, n, r);
            const Rational direct = qubit::negativity_direct_sum(1, n, r);
            batch.add(twist == direct,
                      ratio_str(r) + ": twist " + str(twist) + " direct " + str(direct));
        }
        checks.push_back(
            batch.as_check("twist operators == direct sum, k=1 n=" + std::to_string(n) +
                           " (10 triples)"));
    }
    Batch unitary;
    const RegionRatios fixed(Rational(1, 2), Rational(1, 4), Rational(1, 4));
    for (unsigned seed = 1; seed <= 10; ++seed) {
        const RegionRatios& r = (seed % 2 == 0) ? RegionRatios::thirds() : fixed;
        unitary.add(qubit::unitary_invariance_check(1, r, seed),
                    "seed=" + std::to_string(seed));
    }
    checks.push_back(unitary.as_check(
        "unitary invariance to 1e-9, k=1, 10 seeded rotations per factor (n=2,3)"));
}

void criterion_lattice_isomorphism(std::vector<Check>& checks) {
    for (int k = 1; k <= 3; ++k) {
        Batch batch;
        for (int sites = 1; sites <= 8; ++sites) {
            for (int l1 = 0; l1 <= sites; ++l1) {
                for (int l0 = 0; l0 + l1 <= sites; ++l0) {
                    const fock::RegionLayout layout{l1, l0, sites - l1 - l0};
                    const auto grouped = fock::fock_to_qubit(k, layout);
                    const auto direct = qubit::build_qubit_state(k, layout.ratios());
                    const bool ok = grouped.k == direct.k && grouped.amp2 == direct.amp2;
                    batch.add(ok, "L=" + std::to_string(sites) + " split=(" + std::to_string(l1) +
                                      "," + std::to_string(l0) + "," +
                                      std::to_string(sites - l1 - l0) + ")");
                }
            }
        }
        checks.push_back(batch.as_check("lattice state groups to the qubit state exactly, k=" +
                                        std::to_string(k) + " (all layouts L<=8)"));
    }
}

void criterion_structural_properties(std::vector<Check>& checks) {
    std::mt19937 rng(987654321u);
    std::map<std::pair<int, int>, Polynomial3> poly_cache;
    auto poly_of = [&](int k, int n) -> const Polynomial3& {
        auto [it, inserted] = poly_cache.try_emplace({k, n});
        if (inserted) it->second = negativity_polynomial(k, n);
        return it->second;
    };

    Batch homogeneity, positivity, symmetry;
    for (int i = 0; i < 50; ++i) {
        const int k = std::uniform_int_distribution<int>(1, 3)(rng);
        const int n = std::uniform_int_distribution<int>(2, 6)(rng);
        const Polynomial3& p = poly_of(k, n);
        const auto degree = p.homogeneous_degree();
        homogeneity.add(degree.has_value() && *degree == k * n,
                        "k=" + std::to_string(k) + " n=" + std::to_string(n));
        bool all_positive = !p.is_zero();
        for (const auto& [e, c] : p.terms())
            if (sgn(c) <= 0) all_positive = false;
        positivity.add(all_positive, "k=" + std::to_string(k) + " n=" + std::to_string(n));
        symmetry.add(p == p.swapped_r1_rm1(),
                     "k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
    checks.push_back(homogeneity.as_check("homogeneity of degree k*n (50 random cases)"));
    checks.push_back(positivity.as_check("coefficient positivity (50 random cases)"));
    checks.push_back(symmetry.as_check("r1 <-> rm1 exchange symmetry (50 random cases)"));

    // The coefficient sum equals the matching count for n >= 3; for n = 2 every
    // cross edge carries the merged weight (r1 + rm1), so the sum counts each
    // matching once per assignment of cross labels, i.e. with weight 2^{N_cross}.
    const std::vector<std::pair<int, int>> countable = {
        {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
    std::map<std::pair<int, int>, BigInt> count_cache;
    Batch counts;
    for (int i = 0; i < 30; ++i) {
        const auto [k, n] = countable[std::uniform_int_distribution<std::size_t>(
            0, countable.size() - 1)(rng)];
        auto [it, inserted] = count_cache.try_emplace({k, n});
        if (inserted) {
            BigInt census = 0;
            graphs::enumerate_graphs_raw(k, n, [&](const graphs::Graph& g) {
                int cross = 0;
                if (n == 2)
                    for (const auto& e : g.edges) cross += (e.shift != 0);
                census += int_pow(BigInt(2), static_cast<unsigned long>(cross));
            });
            it->second = census;
        }
        const BigInt from_poly = graphs::partition_function_fast(k, n).coefficient_sum();
        counts.add(from_poly == it->second, "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                                ": poly " + str(from_poly) + " census " +
                                                str(it->second));
    }
    for (int k = 1; k <= 3; ++k) {
        const BigInt expected = factorial(static_cast<unsigned long>(3 * k));
        const BigInt actual = graphs::partition_function_fast(k, 3).coefficient_sum();
        counts.add(expected == actual, "n=3 k=" + std::to_string(k) + ": expected (3k)! = " +
                                           str(expected) + " got " + str(actual));
    }
    checks.push_back(
        counts.as_check("coefficient sum equals matching census, with (3k)! at n=3 (33 cases)"));

    Batch normalisation;
    for (int i = 0; i < 70; ++i) {
        const int k = std::uniform_int_distribution<int>(1, 5)(rng);
        const RegionRatios r = random_triple(rng);
        const auto state = qubit::build_qubit_state(k, r);
        Rational total(0);
        for (const auto& [t, a2] : state.amp2) total += a2;
        normalisation.add(total == 1, "k=" + std::to_string(k) + " r=" + ratio_str(r) +
                                          ": sum " + str(total));
    }
    checks.push_back(normalisation.as_check("state normalisation sum amp^2 == 1 (70 random cases)"));
}

void criterion_combination_rule(std::vector<Check>& checks) {
    const std::vector<RegionRatios> points = {RegionRatios::thirds(),
                                              RegionRatios(Rational(1, 2), Rational(1, 4),
                                                           Rational(1, 4))};
    Batch single, additive, renyi;
    for (const RegionRatios& r : points) {
        for (int n = 2; n <= 3; ++n) {
            for (int k = 1; k <= 3; ++k) {
                const Rational expected = negativity_polynomial(k, n).eval(r);
                const auto grouped =
                    closedform::multi_group_negativity(closedform::MomentumGroups{{k}}, n, r);
                single.add(grouped.exp_value == expected,
                           "k=" + std::to_string(k) + " n=" + std::to_string(n));
            }
            const Rational e1 = negativity_polynomial(1, n).eval(r);
            for (int q = 2; q <= 4; ++q) {
                const auto grouped = closedform::multi_group_negativity(
                    closedform::MomentumGroups{std::vector<int>(q, 1)}, n, r);
                additive.add(grouped.exp_value == rational_pow(e1, static_cast<unsigned>(q)),
                             "q=" + std::to_string(q) + " n=" + std::to_string(n));
            }
            const Rational mixed_expected =
                negativity_polynomial(2, n).eval(r) * negativity_polynomial(1, n).eval(r);
            const auto mixed =
                closedform::multi_group_negativity(closedform::MomentumGroups{{2, 1}}, n, r);
            additive.add(mixed.exp_value == mixed_expected, "groups=[2,1] n=" + std::to_string(n));
        }
    }
    for (int n = 2; n <= 3; ++n) {
        const Rational r1(1, 3), r0(2, 3);
        const Rational s1 = closedform::renyi_exp(1, n, r1, r0);
        for (int q = 2; q <= 3; ++q) {
            const auto grouped = closedform::multi_group_renyi(
                closedform::MomentumGroups{std::vector<int>(q, 1)}, n, r1, r0);
            renyi.add(grouped.exp_value == rational_pow(s1, static_cast<unsigned>(q)),
                      "q=" + std::to_string(q) + " n=" + std::to_string(n));
        }
        const auto single_group =
            closedform::multi_group_renyi(closedform::MomentumGroups{{3}}, n, r1, r0);
        renyi.add(single_group.exp_value == closedform::renyi_exp(3, n, r1, r0),
                  "k=3 n=" + std::to_string(n));
    }
    checks.push_back(single.as_check("single group reduces to the one-group value (exact)"));
    checks.push_back(additive.as_check("groups combine multiplicatively in exp (exact)"));
    checks.push_back(renyi.as_check("Renyi combination over groups (exact)"));
}

struct CriterionSpec {
    std::string title;
    void (*runner)(std::vector<Check>&);
    double budget_seconds;  // 0 = no stated budget
};

const std::map<int, CriterionSpec>& criterion_table() {
    static const std::map<int, CriterionSpec> table = {
        {1, {"reference polynomial regression (k=1 n=3; k=1 n=4; k=2 n=3)",
             criterion_reference_polynomials, 1.0}},
        {2, {"closed-form coefficient regression", criterion_coefficient_regression, 5.0}},
        {3, {"graph/coefficient route equivalence (k<=3, n=2..6)",
             criterion_route_equivalence, 60.0}},
        {4, {"four-route agreement on the ratio grid (k<=2, n<=4)",
             criterion_four_route_agreement, 120.0}},
        {5, {"k=1 recursion, closed forms and continuation", criterion_k1_recursion, 10.0}},
        {6, {"Renyi chain exact equality (k<=4, n<=6)", criterion_renyi_chain, 10.0}},
        {7, {"twist representation and unitary invariance", criterion_twist_and_unitary, 30.0}},
        {8, {"lattice-to-qubit isomorphism (L<=8, k<=3)", criterion_lattice_isomorphism, 10.0}},
        {9, {"structural properties (>=200 generated cases)",
             criterion_structural_properties, 60.0}},
        {10, {"momentum-group combination rule", criterion_combination_rule, 0.0}},
    };
    return table;
}

}  // namespace

bool CriterionResult::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::size_t CriterionResult::failed_count() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

CriterionResult run_criterion(int id) {
    const auto& table = criterion_table();
    const auto it = table.find(id);
    if (it == table.end()) throw std::invalid_argument("unknown criterion id");
    CriterionResult result;
    result.id = id;
    result.title = it->second.title;
    const auto start = std::chrono::steady_clock::now();
    it->second.runner(result.checks);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (it->second.budget_seconds > 0.0) {
        std::ostringstream expected;
        expected << "< " << it->second.budget_seconds << " s";
        push(result.checks, "runtime budget", expected.str(), str(result.seconds) + " s",
             result.seconds < it->second.budget_seconds);
    }
    return result;
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids) {
    std::vector<CriterionResult> results;
    results.reserve(ids.size());
    for (int id : ids) results.push_back(run_criterion(id));
    return results;
}

std::vector<int> criteria_for_scope(const std::string& scope) {
    if (scope == "paper-values") return {1, 2};
    if (scope == "cross-routes") return {3, 4, 6, 7, 8, 10};
    if (scope == "recursion") return {5};
    if (scope == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    throw std::invalid_argument("unknown scope '" + scope +
                                "' (expected paper-values, cross-routes, recursion or all)");
}

}  // namespace twistgraph::checks
