#pragma once

#include "twistgraph/poly3.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace twistgraph::graphs {

// One edge of a bipartite perfect matching between left and right vertex sets
// indexed by (particle, copy). The right copy always equals
// left copy + shift (mod n). For n = 2 the +1 and -1 classes coincide and are
// stored with shift = +1.
struct Edge {
    int left_particle = 1;   // 1..k
    int left_copy = 1;       // 1..n
    int right_particle = 1;
    int right_copy = 1;
    int shift = 0;           // +1, 0, -1

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Graph {
    int k = 0;
    int n = 0;
    std::vector<Edge> edges;  // exactly k*n entries, every vertex used once
};

// Per-copy counts of outgoing edges by shift class. Feasible matrices have
// every row summing to k and, for every copy p, incoming edges
// s[p-1][+1] + s[p][0] + s[p+1][-1] summing to k as well.
class ShiftMatrix {
public:
    ShiftMatrix(int k, int n);

    int k() const { return k_; }
    int n() const { return n_; }

    int at(int copy, int shift) const { return rows_[copy][column(shift)]; }
    void set(int copy, int shift, int value) { rows_[copy][column(shift)] = value; }

    int row_sum(int copy) const;
    int incoming_sum(int copy) const;   // cyclic
    int shift_total(int shift) const;   // N_ell

    friend bool operator==(const ShiftMatrix&, const ShiftMatrix&) = default;

    static int column(int shift) { return 1 - shift; }

private:
    int k_;
    int n_;
    std::vector<std::array<int, 3>> rows_;
};

// k*n cap for the raw matching enumerator ((kn)! growth).
inline constexpr int kRawEnumerationLimit = 9;

// Streams every matching exactly once: left vertices in (copy, particle)
// order, shifts tried +1, 0, -1, right particles in increasing order. The
// Graph reference passed to the callback is reused between calls.
void enumerate_graphs_raw(int k, int n, const std::function<void(const Graph&)>& fn);
std::vector<Graph> all_graphs_raw(int k, int n);
std::uint64_t count_graphs_raw(int k, int n);

// Weighted sum over the matchings: prod r_ell^{N_ell} for n > 2, and
// r0^{N0} (r1 + rm1)^{N1} expanded for n = 2.
Polynomial3 partition_function_raw(int k, int n);

// Streams every feasible shift matrix exactly once (no scale guard; the state
// space is polynomial in k per copy).
void enumerate_shift_matrices(int k, int n, const std::function<void(const ShiftMatrix&)>& fn);
std::uint64_t count_shift_matrices(int k, int n);

ShiftMatrix shift_matrix_of(const Graph& g);

// Same polynomial as partition_function_raw, via shift-matrix multiplicities:
// each matrix contributes (k!)^n * prod_m multinomial(k; s[m][.]) matchings.
Polynomial3 partition_function_fast(int k, int n);

// Restricted k = 1 partition function (no wrap-around edges), by the
// recursion p~_n = r0 p~_{n-1} + r1 rm1 p~_{n-2}, p~_0 = 1, p~_1 = r0.
Polynomial3 restricted_partition_k1(int n);

// The same polynomial from the two-eigenvalue closed form, expanded
// binomially: 2^{-n} sum_i C(n+1, 2i+1) r0^{n-2i} (r0^2 + 4 r1 rm1)^i.
Polynomial3 restricted_partition_k1_closed(int n);

// Four-eigenvalue closed form for k = 1:
// r1^n + rm1^n + ((r0+sqrt(D))/2)^n + ((r0-sqrt(D))/2)^n, D = r0^2 + 4 r1 rm1.
// Integer n uses the signed fourth eigenvalue; non-integer n continues it
// through even powers, i.e. |r0-sqrt(D)|/2 raised to n.
double partition_k1_closed(double n, double r1, double r0, double rm1);

}  // namespace twistgraph::graphs
