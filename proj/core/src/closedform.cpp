#include "twistgraph/closedform.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace twistgraph::closedform {

namespace {

void check_kn(int k, int n) {
    if (k < 1 || n < 1)
        throw std::invalid_argument("closedform: need k >= 1 and n >= 1");
}

// Factor table for fixed (k, p): factor(a, b) is the trinomial
// k!/((p+a)! (k-p-a-b)! b!) for parts a = k_j, b = k_{j+1}, or zero when a
// factorial argument is negative.
class FactorTable {
public:
    FactorTable(int k, int p) : k_(k), p_(p), table_((k + 1) * (k + 1)) {
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b) {
                const int mid = k - p - a - b;
                if (p + a >= 0 && mid >= 0)
                    table_[a * (k_ + 1) + b] = multinomial(k, {p + a, mid, b});
            }
    }

    const BigInt& at(int a, int b) const { return table_[a * (k_ + 1) + b]; }

    // Largest admissible part value: p + a <= k must hold for the factor of
    // the previous index, so parts above k - max(p, 0) never contribute.
    int max_part() const { return k_ - std::max(p_, 0); }
    int min_part() const { return std::max(0, -p_); }

private:
    int k_, p_;
    std::vector<BigInt> table_;
};

}  // namespace

BigInt coefficient_A(int k, int n, int p, int sigma) {
    check_kn(k, n);
    if (sigma < 0) return 0;
    const FactorTable factors(k, p);
    const int lo = factors.min_part();
    const int hi = factors.max_part();
    if (lo > hi) return 0;

    BigInt total = 0;
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    // Depth-first over the cyclic tuple; the factor for index j-1 multiplies
    // in as soon as part j is chosen, so dead branches prune early.
    auto place = [&](auto&& self, int j, int remaining, const BigInt& product) -> void {
        if (j == n) {
            if (remaining != 0) return;
            const BigInt& wrap = factors.at(parts[n - 1], parts[0]);
            if (sgn(wrap) != 0) total += product * wrap;
            return;
        }
        const int slots_left = n - j - 1;
        for (int v = std::min(hi, remaining); v >= lo; --v) {
            if (remaining - v > slots_left * hi) break;  // v descending: gap only grows
            if (remaining - v < slots_left * lo) continue;
            parts[j] = v;
            if (j == 0) {
                self(self, 1, remaining - v, product);
                continue;
            }
            const BigInt& f = factors.at(parts[j - 1], v);
            if (sgn(f) == 0) continue;
            self(self, j + 1, remaining - v, product * f);
        }
    };
    place(place, 0, sigma, BigInt(1));
    return total;
}

Polynomial3 negativity_polynomial(int k, int n) {
    check_kn(k, n);
    Polynomial3 poly;
    for (int p = -k; p <= k; ++p) {
        const int sigma_lo = std::max(0, -n * p);
        const int sigma_hi = (n * (k - p)) / 2;
        for (int sigma = sigma_lo; sigma <= sigma_hi; ++sigma) {
            BigInt a = coefficient_A(k, n, p, sigma);
            if (sgn(a) == 0) continue;
            poly.add_term({n * p + sigma, n * (k - p) - 2 * sigma, sigma}, a);
        }
    }
    return poly;
}

Rational renyi_exp(int k, int n, const Rational& r1, const Rational& r0) {
    check_kn(k, n);
    if (sgn(r1) < 0 || sgn(r0) < 0 || r1 + r0 != 1)
        throw std::invalid_argument("renyi_exp: need r1, r0 >= 0 with r1 + r0 = 1");
    Rational sum(0);
    for (int j = 0; j <= k; ++j) {
        Rational eig(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)));
        eig *= rational_pow(r1, static_cast<unsigned>(j));
        eig *= rational_pow(r0, static_cast<unsigned>(k - j));
        sum += rational_pow(eig, static_cast<unsigned>(n));
    }
    sum.canonicalize();
    return sum;
}

Rational negativity_even_symmetric(int k, int m, const RegionRatios& r) {
    if (k < 1 || m < 1)
        throw std::invalid_argument("negativity_even_symmetric: need k >= 1 and m >= 1");
    Rational sum(0);
    for (int p = -k; p <= k; ++p) {
        for (int sigma = std::abs(m * p); sigma <= m * k; ++sigma) {
            BigInt a = coefficient_A(k, 2 * m, p, sigma - m * p);
            if (sgn(a) == 0) continue;
            Rational term(a);
            term *= rational_pow(r.r1, static_cast<unsigned>(sigma + m * p));
            term *= rational_pow(r.r0, static_cast<unsigned>(2 * (m * k - sigma)));
            term *= rational_pow(r.rm1, static_cast<unsigned>(sigma - m * p));
            sum += term;
        }
    }
    sum.canonicalize();
    return sum;
}

double log_negativity_k1(double r1, double r0, double rm1) {
    return std::log(r1 + rm1 + std::sqrt(r0 * r0 + 4.0 * r1 * rm1));
}

double replica_negativity_k1_continued(double m, double r1, double r0, double rm1) {
    const double disc = r0 * r0 + 4.0 * r1 * rm1;
    const double root = std::sqrt(std::max(disc, 0.0));
    const double lambda_plus = (r0 + root) / 2.0;
    const double lambda_minus = (r0 - root) / 2.0;
    return std::pow(r1, 2.0 * m) + std::pow(rm1, 2.0 * m) +
           std::pow(lambda_plus, 2.0 * m) + std::pow(lambda_minus * lambda_minus, m);
}

GroupedValue multi_group_negativity(const MomentumGroups& groups, int n, const RegionRatios& r) {
    if (groups.sizes.empty())
        throw std::invalid_argument("multi_group_negativity: no groups");
    Rational product(1);
    for (int size : groups.sizes) {
        if (size < 1) throw std::invalid_argument("multi_group_negativity: group size must be >= 1");
        product *= negativity_polynomial(size, n).eval(r);
    }
    product.canonicalize();
    return GroupedValue{product, std::log(to_double(product))};
}

GroupedValue multi_group_renyi(const MomentumGroups& groups, int n,
                               const Rational& r1, const Rational& r0) {
    if (groups.sizes.empty())
        throw std::invalid_argument("multi_group_renyi: no groups");
    Rational product(1);
    for (int size : groups.sizes) {
        if (size < 1) throw std::invalid_argument("multi_group_renyi: group size must be >= 1");
        product *= renyi_exp(size, n, r1, r0);
    }
    product.canonicalize();
    const double entropy = (n == 1) ? 0.0 : std::log(to_double(product)) / (1.0 - n);
    return GroupedValue{product, entropy};
}

}  // namespace twistgraph::closedform
