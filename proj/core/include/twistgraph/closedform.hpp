#pragma once

#include "twistgraph/poly3.hpp"

#include <vector>

namespace twistgraph::closedform {

// A_{p,sigma}: sum over ordered n-tuples (k_1..k_n) of non-negative integers
// summing to sigma of prod_j k! / ((p+k_j)! (k-p-k_{j+1}-k_j)! k_{j+1}!),
// indices cyclic (k_{n+1} = k_1), a tuple contributing zero whenever a
// factorial argument would be negative. Always a non-negative integer.
BigInt coefficient_A(int k, int n, int p, int sigma);

// sum_{p,sigma} A_{p,sigma} r1^{np+sigma} r0^{n(k-p)-2sigma} rm1^{sigma};
// evaluates to exp[E_n] and equals partition_function_fast(k,n) / (k!)^n.
Polynomial3 negativity_polynomial(int k, int n);

// exp[(1-n) S_n] = sum_j (C(k,j) r1^j r0^{k-j})^n for the two-region state.
// Requires r1 + r0 = 1 with both in [0, 1].
Rational renyi_exp(int k, int n, const Rational& r1, const Rational& r0);

// Even-replica form (n = 2m):
// sum_p sum_{sigma=|mp|}^{mk} A_{p,sigma-mp} r1^{sigma+mp} r0^{2(mk-sigma)} rm1^{sigma-mp}.
// Exact; equals negativity_polynomial(k, 2m) evaluated at r.
Rational negativity_even_symmetric(int k, int m, const RegionRatios& r);

// Genuine logarithmic negativity for k = 1: the m -> 1/2 continuation of the
// even-replica closed form, log(r1 + rm1 + sqrt(r0^2 + 4 r1 rm1)).
double log_negativity_k1(double r1, double r0, double rm1);

// Even-replica value continued to real m (the signed eigenvalue enters
// through its square): r1^{2m} + rm1^{2m} + lp^{2m} + (lm^2)^m.
double replica_negativity_k1_continued(double m, double r1, double r0, double rm1);

// Maximal sets of equal-momentum particles; entanglement increments add over
// the groups.
struct MomentumGroups {
    std::vector<int> sizes;
};

struct GroupedValue {
    Rational exp_value;  // exact product over groups
    double log_value;    // log for negativity, S_n for the Renyi variant
};

GroupedValue multi_group_negativity(const MomentumGroups& groups, int n, const RegionRatios& r);
GroupedValue multi_group_renyi(const MomentumGroups& groups, int n,
                               const Rational& r1, const Rational& r0);

}  // namespace twistgraph::closedform
