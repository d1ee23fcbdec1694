#include "twistgraph/graphs.hpp"

#include "twistgraph/errors.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace twistgraph::graphs {

namespace {

void check_graph_args(int k, int n) {
    if (k < 1 || n < 2)
        throw std::invalid_argument("graphs: need k >= 1 and n >= 2");
}

void check_raw_scale(int k, int n) {
    check_graph_args(k, n);
    if (k * n > kRawEnumerationLimit)
        throw ScaleError("raw graph enumeration limited to k*n <= " +
                         std::to_string(kRawEnumerationLimit) + " (got k*n = " +
                         std::to_string(k * n) + ")");
}

// Backtracking over left vertices in (copy, particle) order. For n = 2 only
// the shifts {+1 (cross), 0} exist.
class RawEnumerator {
public:
    RawEnumerator(int k, int n, const std::function<void(const Graph&)>& fn)
        : k_(k), n_(n), fn_(fn), used_(static_cast<std::size_t>(n), std::vector<char>(k, 0)) {
        graph_.k = k;
        graph_.n = n;
        graph_.edges.reserve(static_cast<std::size_t>(k) * n);
    }

    void run() { extend(0); }

private:
    void extend(int index) {
        if (index == k_ * n_) {
            fn_(graph_);
            return;
        }
        const int copy = index / k_;
        const int particle = index % k_;
        const int shift_count = (n_ == 2) ? 2 : 3;
        static constexpr int kShiftOrder[3] = {1, 0, -1};
        for (int s = 0; s < shift_count; ++s) {
            const int shift = kShiftOrder[s];
            const int right_copy = ((copy + shift) % n_ + n_) % n_;
            for (int rp = 0; rp < k_; ++rp) {
                if (used_[right_copy][rp]) continue;
                used_[right_copy][rp] = 1;
                graph_.edges.push_back(Edge{particle + 1, copy + 1, rp + 1, right_copy + 1, shift});
                extend(index + 1);
                graph_.edges.pop_back();
                used_[right_copy][rp] = 0;
            }
        }
    }

    int k_, n_;
    const std::function<void(const Graph&)>& fn_;
    std::vector<std::vector<char>> used_;
    Graph graph_;
};

}  // namespace

ShiftMatrix::ShiftMatrix(int k, int n) : k_(k), n_(n) {
    check_graph_args(k, n);
    rows_.assign(static_cast<std::size_t>(n), {0, 0, 0});
}

int ShiftMatrix::row_sum(int copy) const {
    const auto& row = rows_[copy];
    return row[0] + row[1] + row[2];
}

int ShiftMatrix::incoming_sum(int copy) const {
    const int prev = (copy + n_ - 1) % n_;
    const int next = (copy + 1) % n_;
    return rows_[prev][column(1)] + rows_[copy][column(0)] + rows_[next][column(-1)];
}

int ShiftMatrix::shift_total(int shift) const {
    int total = 0;
    for (const auto& row : rows_) total += row[column(shift)];
    return total;
}

void enumerate_graphs_raw(int k, int n, const std::function<void(const Graph&)>& fn) {
    check_raw_scale(k, n);
    RawEnumerator(k, n, fn).run();
}

std::vector<Graph> all_graphs_raw(int k, int n) {
    std::vector<Graph> out;
    enumerate_graphs_raw(k, n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::uint64_t count_graphs_raw(int k, int n) {
    std::uint64_t count = 0;
    enumerate_graphs_raw(k, n, [&](const Graph&) { ++count; });
    return count;
}

ShiftMatrix shift_matrix_of(const Graph& g) {
    ShiftMatrix m(g.k, g.n);
    for (const Edge& e : g.edges)
        m.set(e.left_copy - 1, e.shift, m.at(e.left_copy - 1, e.shift) + 1);
    return m;
}

Polynomial3 partition_function_raw(int k, int n) {
    check_raw_scale(k, n);
    if (n == 2) {
        // Cross edges carry the combined weight (r1 + rm1).
        std::map<std::pair<int, int>, std::uint64_t> counts;  // (N_cross, N0)
        enumerate_graphs_raw(k, n, [&](const Graph& g) {
            int cross = 0, stay = 0;
            for (const Edge& e : g.edges) (e.shift == 0 ? stay : cross)++;
            ++counts[{cross, stay}];
        });
        Polynomial3 p;
        for (const auto& [key, count] : counts) {
            const auto& [cross, stay] = key;
            for (int j = 0; j <= cross; ++j)
                p.add_term({j, stay, cross - j},
                           BigInt(static_cast<unsigned long>(count)) *
                               binomial(static_cast<unsigned long>(cross),
                                        static_cast<unsigned long>(j)));
        }
        return p;
    }
    std::map<std::array<int, 3>, std::uint64_t> counts;  // (N1, N0, Nm1)
    enumerate_graphs_raw(k, n, [&](const Graph& g) {
        std::array<int, 3> exps{0, 0, 0};
        for (const Edge& e : g.edges) ++exps[ShiftMatrix::column(e.shift)];
        ++counts[exps];
    });
    Polynomial3 p;
    for (const auto& [exps, count] : counts)
        p.add_term({exps[0], exps[1], exps[2]}, BigInt(static_cast<unsigned long>(count)));
    return p;
}

void enumerate_shift_matrices(int k, int n, const std::function<void(const ShiftMatrix&)>& fn) {
    check_graph_args(k, n);
    if (n == 2) {
        // Row sums and incoming sums force the two cross counts to agree.
        for (int cross = k; cross >= 0; --cross) {
            ShiftMatrix m(k, 2);
            for (int copy = 0; copy < 2; ++copy) {
                m.set(copy, 1, cross);
                m.set(copy, 0, k - cross);
            }
            fn(m);
        }
        return;
    }
    ShiftMatrix m(k, n);
    // Rows are placed in copy order. Once rows m-2 and m-1 are fixed, the
    // incoming sum of copy m-1 forces row m's -1 entry.
    auto place = [&](auto&& self, int copy) -> void {
        if (copy == n) {
            if (m.incoming_sum(n - 1) == k && m.incoming_sum(0) == k) fn(m);
            return;
        }
        int forced_minus = -1;
        if (copy >= 2) {
            forced_minus = k - m.at(copy - 2, 1) - m.at(copy - 1, 0);
            if (forced_minus < 0 || forced_minus > k) return;
        }
        const int c_lo = (copy >= 2) ? forced_minus : 0;
        const int c_hi = (copy >= 2) ? forced_minus : k;
        for (int c = c_hi; c >= c_lo; --c) {
            for (int a = k - c; a >= 0; --a) {
                m.set(copy, 1, a);
                m.set(copy, 0, k - c - a);
                m.set(copy, -1, c);
                self(self, copy + 1);
            }
        }
        m.set(copy, 1, 0);
        m.set(copy, 0, 0);
        m.set(copy, -1, 0);
    };
    place(place, 0);
}

std::uint64_t count_shift_matrices(int k, int n) {
    std::uint64_t count = 0;
    enumerate_shift_matrices(k, n, [&](const ShiftMatrix&) { ++count; });
    return count;
}

Polynomial3 partition_function_fast(int k, int n) {
    check_graph_args(k, n);
    const BigInt kfac_pow = int_pow(factorial(static_cast<unsigned long>(k)),
                                    static_cast<unsigned long>(n));
    auto matrix_weight = [&](const ShiftMatrix& m) {
        // Left-vertex shift assignments per copy, times the bijection of each
        // right copy's k incoming edges onto its k vertices.
        BigInt w = kfac_pow;
        for (int copy = 0; copy < n; ++copy)
            w *= multinomial(k, {m.at(copy, 1), m.at(copy, 0), m.at(copy, -1)});
        return w;
    };
    Polynomial3 p;
    if (n == 2) {
        enumerate_shift_matrices(k, 2, [&](const ShiftMatrix& m) {
            const BigInt w = matrix_weight(m);
            const int cross = m.shift_total(1);
            const int stay = m.shift_total(0);
            for (int j = 0; j <= cross; ++j)
                p.add_term({j, stay, cross - j},
                           w * binomial(static_cast<unsigned long>(cross),
                                        static_cast<unsigned long>(j)));
        });
        return p;
    }
    enumerate_shift_matrices(k, n, [&](const ShiftMatrix& m) {
        p.add_term({m.shift_total(1), m.shift_total(0), m.shift_total(-1)}, matrix_weight(m));
    });
    return p;
}

Polynomial3 restricted_partition_k1(int n) {
    if (n < 0) throw std::invalid_argument("restricted_partition_k1: n must be >= 0");
    Polynomial3 prev2 = Polynomial3::constant(1);  // n = 0
    if (n == 0) return prev2;
    Polynomial3 prev1 = Polynomial3::r0();  // n = 1
    if (n == 1) return prev1;
    const Polynomial3 couple = Polynomial3::r1() * Polynomial3::rm1();
    for (int i = 2; i <= n; ++i) {
        Polynomial3 cur = Polynomial3::r0() * prev1 + couple * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

Polynomial3 restricted_partition_k1_closed(int n) {
    if (n < 0) throw std::invalid_argument("restricted_partition_k1_closed: n must be >= 0");
    const Polynomial3 discriminant =
        Polynomial3::r0() * Polynomial3::r0() +
        BigInt(4) * Polynomial3::r1() * Polynomial3::rm1();
    Polynomial3 sum;
    for (int i = 0; 2 * i + 1 <= n + 1; ++i) {
        Polynomial3 term = discriminant.pow(static_cast<unsigned>(i));
        term *= Polynomial3::monomial({0, n - 2 * i, 0},
                                      binomial(static_cast<unsigned long>(n + 1),
                                               static_cast<unsigned long>(2 * i + 1)));
        sum += term;
    }
    return sum.divided_exact(int_pow(BigInt(2), static_cast<unsigned long>(n)));
}

double partition_k1_closed(double n, double r1, double r0, double rm1) {
    const double disc = r0 * r0 + 4.0 * r1 * rm1;
    const double root = std::sqrt(std::max(disc, 0.0));
    const double lambda_plus = (r0 + root) / 2.0;
    const double lambda_minus = (r0 - root) / 2.0;
    const bool integer_n = std::abs(n - std::round(n)) < 1e-9;
    const double fourth = integer_n ? std::pow(lambda_minus, std::round(n))
                                    : std::pow(std::abs(lambda_minus), n);
    return std::pow(r1, n) + std::pow(rm1, n) + std::pow(lambda_plus, n) + fourth;
}

}  // namespace twistgraph::graphs
