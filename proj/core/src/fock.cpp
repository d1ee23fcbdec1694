#include "twistgraph/fock.hpp"

#include "twistgraph/errors.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace twistgraph::fock {

namespace {

void check_layout(const RegionLayout& layout) {
    if (layout.l1 < 0 || layout.l0 < 0 || layout.lm1 < 0)
        throw std::invalid_argument("RegionLayout: block sizes must be non-negative");
    if (layout.sites() < 1)
        throw std::invalid_argument("RegionLayout: need at least one site");
}

}  // namespace

RegionRatios RegionLayout::ratios() const {
    const int total = sites();
    if (total < 1) throw std::invalid_argument("RegionLayout: need at least one site");
    return RegionRatios(Rational(l1, total), Rational(l0, total), Rational(lm1, total));
}

int RegionLayout::region_of(int site) const {
    if (site < 0 || site >= sites()) throw std::out_of_range("RegionLayout: site out of range");
    if (site < l1) return 1;
    if (site < l1 + l0) return 0;
    return -1;
}

std::map<SiteConfiguration, Rational> build_fock_state(int k, const RegionLayout& layout) {
    if (k < 1) throw std::invalid_argument("build_fock_state: k must be >= 1");
    check_layout(layout);
    const int sites = layout.sites();
    if (binomial(static_cast<unsigned long>(sites + k - 1), static_cast<unsigned long>(k)) >
        kFockBasisLimit)
        throw ScaleError("build_fock_state: occupation basis exceeds " +
                         std::to_string(kFockBasisLimit) + " configurations");

    const BigInt site_norm = int_pow(BigInt(sites), static_cast<unsigned long>(k));
    std::map<SiteConfiguration, Rational> state;
    Rational total(0);
    SiteConfiguration config(static_cast<std::size_t>(sites), 0);
    auto place = [&](auto&& self, int site, int remaining) -> void {
        if (site == sites - 1) {
            config[site] = remaining;
            Rational a2(multinomial(k, config), site_norm);
            a2.canonicalize();
            total += a2;
            state.emplace(config, std::move(a2));
            config[site] = 0;
            return;
        }
        for (int occ = remaining; occ >= 0; --occ) {
            config[site] = occ;
            self(self, site + 1, remaining - occ);
        }
        config[site] = 0;
    };
    place(place, 0, k);
    assert(total == 1);
    return state;
}

qubit::QubitAmplitudes fock_to_qubit(int k, const RegionLayout& layout) {
    const auto state = build_fock_state(k, layout);
    qubit::QubitAmplitudes grouped;
    grouped.k = k;
    for (const auto& [config, a2] : state) {
        qubit::OccupationTriple counts;
        for (int site = 0; site < layout.sites(); ++site) {
            switch (layout.region_of(site)) {
                case 1: counts.k1 += config[site]; break;
                case 0: counts.k0 += config[site]; break;
                default: counts.km1 += config[site]; break;
            }
        }
        auto [it, inserted] = grouped.amp2.try_emplace(counts, a2);
        if (!inserted) it->second += a2;
    }
    for (auto& [t, a2] : grouped.amp2) a2.canonicalize();
    return grouped;
}

BigInt wick_pairing_census(int k, int n, const RegionLayout& layout) {
    if (k < 1 || n < 1) throw std::invalid_argument("wick: need k >= 1 and n >= 1");
    check_layout(layout);
    if (k * n > kWickPairingLimit)
        throw ScaleError("wick pairing enumeration limited to k*n <= " +
                         std::to_string(kWickPairingLimit));

    std::vector<std::vector<char>> used(static_cast<std::size_t>(n), std::vector<char>(k, 0));
    BigInt total = 0;

    // Creation slots in (copy, particle) order; each picks an unpaired
    // annihilation slot in an adjacent copy.
    auto place = [&](auto&& self, int index, const BigInt& weight) -> void {
        if (index == k * n) {
            total += weight;
            return;
        }
        const int m = index / k;  // creation copy
        auto try_copy = [&](int p, long site_count) {
            if (site_count == 0) return;
            for (int j = 0; j < k; ++j) {
                if (used[p][j]) continue;
                used[p][j] = 1;
                self(self, index + 1, weight * site_count);
                used[p][j] = 0;
            }
        };
        if (n == 1) {
            try_copy(0, layout.sites());
        } else if (n == 2) {
            try_copy(1 - m, layout.l1 + layout.lm1);  // cross pair
            try_copy(m, layout.l0);
        } else {
            try_copy((m + 1) % n, layout.l1);
            try_copy(m, layout.l0);
            try_copy((m + n - 1) % n, layout.lm1);
        }
    };
    place(place, 0, BigInt(1));
    return total;
}

Rational wick_oracle(int k, int n, const RegionLayout& layout) {
    const BigInt census = wick_pairing_census(k, n, layout);
    const BigInt norm =
        int_pow(factorial(static_cast<unsigned long>(k)), static_cast<unsigned long>(n)) *
        int_pow(BigInt(layout.sites()), static_cast<unsigned long>(k) * n);
    Rational value(census, norm);
    value.canonicalize();
    return value;
}

}  // namespace twistgraph::fock
