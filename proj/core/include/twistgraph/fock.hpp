#pragma once

#include "twistgraph/poly3.hpp"
#include "twistgraph/qubit.hpp"

#include <map>
#include <vector>

namespace twistgraph::fock {

// L lattice sites split into three contiguous blocks of sizes (l1, l0, lm1),
// in that order. Only the cardinalities enter any quantity, so non-contiguous
// region shapes are represented by their block sizes.
struct RegionLayout {
    int l1 = 0;
    int l0 = 0;
    int lm1 = 0;

    int sites() const { return l1 + l0 + lm1; }
    RegionRatios ratios() const;
    // Region (+1 / 0 / -1) of a 0-based site index.
    int region_of(int site) const;
};

// Occupation number per site; entries sum to the particle count.
using SiteConfiguration = std::vector<int>;

inline constexpr long kFockBasisLimit = 100000;  // C(L+k-1, k) cap
inline constexpr int kWickPairingLimit = 8;      // k*n cap ((kn)! pairings)

// Squared amplitudes of (sum_x a^dag_x)^k |0> / sqrt(k! L^k) on the occupation
// basis: amp^2(config) = multinomial(k; n_1..n_L) / L^k. Exactly normalised.
std::map<SiteConfiguration, Rational> build_fock_state(int k, const RegionLayout& layout);

// Groups site configurations by per-region particle counts; equals
// build_qubit_state(k, layout.ratios()) exactly.
qubit::QubitAmplitudes fock_to_qubit(int k, const RegionLayout& layout);

// Sum over admissible pairings of creation slots (i, m) with annihilation
// slots (j, p): a pair needs p = m + l (cyclically) for some l in {1, 0, -1}
// and carries weight L_l (L1 + Lm1 merged when n = 2; the full L when n = 1).
// Weighted count, before normalisation.
BigInt wick_pairing_census(int k, int n, const RegionLayout& layout);

// exp[E_n] = census / ((k!)^n L^{kn}). Exact; independent of the graph module.
Rational wick_oracle(int k, int n, const RegionLayout& layout);

}  // namespace twistgraph::fock
