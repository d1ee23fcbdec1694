#pragma once

#include <gmpxx.h>

#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twistgraph {

using BigInt = mpz_class;
using Rational = mpq_class;

// n!
BigInt factorial(unsigned long n);

// C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

BigInt int_pow(const BigInt& base, unsigned long exp);

// k! / prod(parts!). Throws std::invalid_argument unless every part is
// non-negative and the parts sum to k.
BigInt multinomial(int k, std::span<const int> parts);
BigInt multinomial(int k, std::initializer_list<int> parts);

// Number of binary n-tuples arranged on a cycle with sigma ones and no two
// ones cyclically adjacent: n/(n-sigma) * C(n-sigma, sigma).
// Requires n >= 2 and 0 <= sigma <= n/2.
BigInt cyclic_nonadjacent_count(int n, int sigma);

// Ordered n-tuples of non-negative integers summing to sigma, streamed
// exactly once each in descending lexicographic order, starting from
// (sigma, 0, ..., 0).
class CompositionRange {
public:
    CompositionRange(int n, int sigma);

    bool done() const { return done_; }
    const std::vector<int>& parts() const { return parts_; }
    void advance();

private:
    std::vector<int> parts_;
    bool done_ = false;
};

void for_each_composition(int n, int sigma,
                          const std::function<void(const std::vector<int>&)>& fn);

// C(sigma + n - 1, n - 1)
BigInt composition_count(int n, int sigma);

// base^exp with exact rational arithmetic (0^0 = 1).
Rational rational_pow(const Rational& base, unsigned exp);

// Exact square root of a perfect-square rational; nullopt otherwise.
std::optional<Rational> sqrt_exact(const Rational& x);

// Accepts "a/b", "a", or a plain decimal literal such as "0.125" (parsed
// exactly). Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

double to_double(const Rational& x);

}  // namespace twistgraph
