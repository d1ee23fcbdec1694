#include "twistgraph/exactmath.hpp"

#include <cstddef>
#include <stdexcept>

namespace twistgraph {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt int_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt multinomial(int k, std::span<const int> parts) {
    if (k < 0) throw std::invalid_argument("multinomial: k must be non-negative");
    long sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum += p;
    }
    if (sum != k) throw std::invalid_argument("multinomial: parts must sum to k");
    BigInt r = factorial(static_cast<unsigned long>(k));
    for (int p : parts) {
        // Each intermediate quotient is an integer, so divexact is safe.
        BigInt f = factorial(static_cast<unsigned long>(p));
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.get_mpz_t());
    }
    return r;
}

BigInt multinomial(int k, std::initializer_list<int> parts) {
    return multinomial(k, std::span<const int>(parts.begin(), parts.size()));
}

BigInt cyclic_nonadjacent_count(int n, int sigma) {
    if (n < 2) throw std::invalid_argument("cyclic_nonadjacent_count: n must be >= 2");
    if (sigma < 0 || 2 * sigma > n)
        throw std::invalid_argument("cyclic_nonadjacent_count: need 0 <= sigma <= n/2");
    BigInt r = binomial(static_cast<unsigned long>(n - sigma),
                        static_cast<unsigned long>(sigma)) * n;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n - sigma));
    return r;
}

CompositionRange::CompositionRange(int n, int sigma) {
    if (n < 1 || sigma < 0)
        throw std::invalid_argument("compositions: need n >= 1 and sigma >= 0");
    parts_.assign(static_cast<std::size_t>(n), 0);
    parts_[0] = sigma;
}

void CompositionRange::advance() {
    const int n = static_cast<int>(parts_.size());
    // Rightmost position before the last that still holds something to move.
    int i = n - 2;
    while (i >= 0 && parts_[i] == 0) --i;
    if (i < 0) {
        done_ = true;
        return;
    }
    // Everything strictly right of i is concentrated in the last slot.
    const int tail = parts_[n - 1];
    parts_[i] -= 1;
    parts_[i + 1] = tail + 1;
    for (int j = i + 2; j < n; ++j) parts_[j] = 0;
}

void for_each_composition(int n, int sigma,
                          const std::function<void(const std::vector<int>&)>& fn) {
    for (CompositionRange range(n, sigma); !range.done(); range.advance()) fn(range.parts());
}

BigInt composition_count(int n, int sigma) {
    if (n < 1 || sigma < 0)
        throw std::invalid_argument("composition_count: need n >= 1 and sigma >= 0");
    return binomial(static_cast<unsigned long>(sigma + n - 1),
                    static_cast<unsigned long>(n - 1));
}

Rational rational_pow(const Rational& base, unsigned exp) {
    if (exp == 0) return Rational(1);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
    return r;  // canonical in, canonical out
}

std::optional<Rational> sqrt_exact(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    Rational c = x;
    c.canonicalize();
    const mpz_class& num = c.get_num();
    const mpz_class& den = c.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    BigInt sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational r(sn, sd);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty input");
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const std::size_t frac_len = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("parse_rational: malformed decimal '" + text + "'");
        BigInt num;
        if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
            throw std::invalid_argument("parse_rational: malformed decimal '" + text + "'");
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    if (sgn(r.get_den()) == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

double to_double(const Rational& x) { return x.get_d(); }

}  // namespace twistgraph
