#pragma once

#include "twistgraph/exactmath.hpp"

#include <map>
#include <optional>
#include <string>

namespace twistgraph {

// Exponents of a monomial r1^e1 * r0^e0 * rm1^em1.
struct MonomialExponents {
    int e1 = 0;
    int e0 = 0;
    int em1 = 0;

    int total_degree() const { return e1 + e0 + em1; }
    friend bool operator==(const MonomialExponents&, const MonomialExponents&) = default;
};

// Canonical term order: descending lexicographic on (e1, e0, em1).
struct MonomialOrder {
    bool operator()(const MonomialExponents& a, const MonomialExponents& b) const {
        if (a.e1 != b.e1) return a.e1 > b.e1;
        if (a.e0 != b.e0) return a.e0 > b.e0;
        return a.em1 > b.em1;
    }
};

// Exact region ratios (r1, r0, rm1): each in [0, 1] and summing to one.
struct RegionRatios {
    Rational r1, r0, rm1;

    RegionRatios(Rational r1_in, Rational r0_in, Rational rm1_in);
    static RegionRatios thirds();

    friend bool operator==(const RegionRatios&, const RegionRatios&) = default;
};

// Integer-coefficient polynomial in the three region-ratio variables, kept in
// canonical form: no zero coefficients, terms ordered by MonomialOrder.
class Polynomial3 {
public:
    using TermMap = std::map<MonomialExponents, BigInt, MonomialOrder>;

    Polynomial3() = default;

    static Polynomial3 constant(const BigInt& c);
    static Polynomial3 monomial(const MonomialExponents& e, const BigInt& c);
    static Polynomial3 r1();
    static Polynomial3 r0();
    static Polynomial3 rm1();

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // Accumulates c onto the coefficient of e, dropping the term if it cancels.
    void add_term(const MonomialExponents& e, const BigInt& c);

    Polynomial3& operator+=(const Polynomial3& other);
    Polynomial3& operator*=(const Polynomial3& other);
    Polynomial3& operator*=(const BigInt& c);
    friend Polynomial3 operator+(Polynomial3 a, const Polynomial3& b) { return a += b; }
    friend Polynomial3 operator*(Polynomial3 a, const Polynomial3& b) { return a *= b; }
    friend Polynomial3 operator*(Polynomial3 a, const BigInt& c) { return a *= c; }
    friend Polynomial3 operator*(const BigInt& c, Polynomial3 a) { return a *= c; }
    friend bool operator==(const Polynomial3&, const Polynomial3&) = default;

    Polynomial3 pow(unsigned exponent) const;

    // Divides every coefficient by c; throws std::domain_error when a
    // coefficient is not divisible.
    Polynomial3 divided_exact(const BigInt& c) const;

    Rational eval(const RegionRatios& r) const;
    Rational eval(const Rational& r1, const Rational& r0, const Rational& rm1) const;
    double eval_double(double r1, double r0, double rm1) const;  // plotting only

    BigInt coefficient_sum() const;
    // Common total degree of all terms; nullopt for the zero polynomial or a
    // non-homogeneous one.
    std::optional<int> homogeneous_degree() const;
    Polynomial3 swapped_r1_rm1() const;

private:
    TermMap terms_;
};

// Human-readable monomial list, canonical order ("r1^4 + 2 r1^2 rm1^2 + ...").
std::string to_text(const Polynomial3& p);

// Canonical JSON form {"terms":[{"e1":...,"e0":...,"em1":...,"c":"<decimal>"}, ...]},
// terms in canonical order, coefficients as decimal strings.
std::string to_json(const Polynomial3& p);

// Inverse of to_json. Throws std::runtime_error on malformed or non-canonical
// input (duplicate exponent triples, zero coefficients, negative exponents).
Polynomial3 polynomial_from_json(const std::string& text);

}  // namespace twistgraph
