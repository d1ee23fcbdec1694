#pragma once

#include "twistgraph/poly3.hpp"

#include <compare>
#include <map>
#include <vector>

namespace twistgraph::qubit {

// Occupation numbers (k1, k0, km1) of the three regions.
struct OccupationTriple {
    int k1 = 0;
    int k0 = 0;
    int km1 = 0;

    int total() const { return k1 + k0 + km1; }
    // Matrix bases are ordered lexicographically on (k1, k0, km1).
    auto operator<=>(const OccupationTriple&) const = default;
};

// Squared amplitudes of the uniform k-particle state:
// amp^2(k1,k0,km1) = multinomial(k; k1,k0,km1) r1^k1 r0^k0 rm1^km1.
// Amplitudes themselves are the non-negative square roots; they never need to
// materialise because every quantity pairs them up.
struct QubitAmplitudes {
    int k = 0;
    std::map<OccupationTriple, Rational> amp2;

    Rational amp2_of(const OccupationTriple& t) const;
};

QubitAmplitudes build_qubit_state(int k, const RegionRatios& r);

// exp[E_n] straight from the state coefficients: the cyclic sum over n-tuples
// of occupation triples of prod_j c_{k1^(j+1),k0^(j),km1^(j)} c_{k1^(j),k0^(j),km1^(j+1)}.
// Every cyclic product is rational (each ratio power and factorial appears
// squared across the cycle), so the result is exact.
Rational negativity_direct_sum(int k, int n, const RegionRatios& r);

// Tr[((Tr_0 rho)^{T_{-1}})^n] through an explicit dense matrix: build
// rho = |Psi><Psi|, trace out the k0 index, transpose the km1 index, raise to
// the n-th power. Floating point.
double density_matrix_negativity(int k, int n, const RegionRatios& r);

// Eigenvalues of the partially transposed reduced matrix, ascending. They sum
// to 1; for k = 1 the nonzero ones are r1, rm1 and (r0 +- sqrt(r0^2+4 r1 rm1))/2.
std::vector<double> negativity_spectrum(int k, const RegionRatios& r);

// The matrix itself, rows of the (k+1)^2 grid indexed by (k1, km1) in
// lexicographic order. For export and debugging.
std::vector<std::vector<double>> partial_transpose_reduced(int k, const RegionRatios& r);

// Tr[(Tr_0 |Psi'><Psi'|)^n] for the two-region state; the reduced matrix is
// diagonal with eigenvalues C(k,j) r1^j r0^{k-j}. Exact.
Rational renyi_direct(int k, int n, const Rational& r1, const Rational& r0);

// <psi|^{(x)n} P1+ Pm1- |psi>^{(x)n} with the permutation twists built as
// explicit basis permutations on the n-fold tensor of the truncated
// three-factor space. Exact; equals negativity_direct_sum. Guarded to k = 1,
// n <= 3.
Rational twist_operator_check(int k, int n, const RegionRatios& r);

// Applies seeded pseudo-random single-factor unitaries (each factor alone and
// all three together, for n = 2 and 3) and checks the dense-matrix negativity
// is unchanged to 1e-9. k = 1 only.
bool unitary_invariance_check(int k, const RegionRatios& r, unsigned seed);

}  // namespace twistgraph::qubit
