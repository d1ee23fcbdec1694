#include "twistgraph/poly3.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <utility>

namespace twistgraph {

RegionRatios::RegionRatios(Rational r1_in, Rational r0_in, Rational rm1_in)
    : r1(std::move(r1_in)), r0(std::move(r0_in)), rm1(std::move(rm1_in)) {
    r1.canonicalize();
    r0.canonicalize();
    rm1.canonicalize();
    if (sgn(r1) < 0 || sgn(r0) < 0 || sgn(rm1) < 0)
        throw std::invalid_argument("RegionRatios: components must be non-negative");
    if (r1 + r0 + rm1 != 1)
        throw std::invalid_argument("RegionRatios: components must sum to 1");
}

RegionRatios RegionRatios::thirds() {
    return RegionRatios(Rational(1, 3), Rational(1, 3), Rational(1, 3));
}

Polynomial3 Polynomial3::constant(const BigInt& c) {
    Polynomial3 p;
    p.add_term({0, 0, 0}, c);
    return p;
}

Polynomial3 Polynomial3::monomial(const MonomialExponents& e, const BigInt& c) {
    Polynomial3 p;
    p.add_term(e, c);
    return p;
}

Polynomial3 Polynomial3::r1() { return monomial({1, 0, 0}, 1); }
Polynomial3 Polynomial3::r0() { return monomial({0, 1, 0}, 1); }
Polynomial3 Polynomial3::rm1() { return monomial({0, 0, 1}, 1); }

void Polynomial3::add_term(const MonomialExponents& e, const BigInt& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial3& Polynomial3::operator+=(const Polynomial3& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial3& Polynomial3::operator*=(const Polynomial3& other) {
    Polynomial3 result;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_)
            result.add_term({ea.e1 + eb.e1, ea.e0 + eb.e0, ea.em1 + eb.em1}, ca * cb);
    terms_ = std::move(result.terms_);
    return *this;
}

Polynomial3& Polynomial3::operator*=(const BigInt& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial3 Polynomial3::pow(unsigned exponent) const {
    Polynomial3 result = constant(1);
    Polynomial3 base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

Polynomial3 Polynomial3::divided_exact(const BigInt& c) const {
    if (sgn(c) == 0) throw std::domain_error("Polynomial3: division by zero");
    Polynomial3 result;
    for (const auto& [e, coeff] : terms_) {
        if (!mpz_divisible_p(coeff.get_mpz_t(), c.get_mpz_t()))
            throw std::domain_error("Polynomial3: coefficient not divisible");
        BigInt q;
        mpz_divexact(q.get_mpz_t(), coeff.get_mpz_t(), c.get_mpz_t());
        result.terms_.emplace(e, std::move(q));
    }
    return result;
}

Rational Polynomial3::eval(const RegionRatios& r) const { return eval(r.r1, r.r0, r.rm1); }

Rational Polynomial3::eval(const Rational& r1, const Rational& r0, const Rational& rm1) const {
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term(c);
        term *= rational_pow(r1, static_cast<unsigned>(e.e1));
        term *= rational_pow(r0, static_cast<unsigned>(e.e0));
        term *= rational_pow(rm1, static_cast<unsigned>(e.em1));
        sum += term;
    }
    sum.canonicalize();
    return sum;
}

double Polynomial3::eval_double(double r1, double r0, double rm1) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.get_d();
        for (int i = 0; i < e.e1; ++i) term *= r1;
        for (int i = 0; i < e.e0; ++i) term *= r0;
        for (int i = 0; i < e.em1; ++i) term *= rm1;
        sum += term;
    }
    return sum;
}

BigInt Polynomial3::coefficient_sum() const {
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

std::optional<int> Polynomial3::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int degree = terms_.begin()->first.total_degree();
    for (const auto& [e, c] : terms_)
        if (e.total_degree() != degree) return std::nullopt;
    return degree;
}

Polynomial3 Polynomial3::swapped_r1_rm1() const {
    Polynomial3 result;
    for (const auto& [e, c] : terms_) result.add_term({e.em1, e.e0, e.e1}, c);
    return result;
}

std::string to_text(const Polynomial3& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        BigInt abs_c = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        const bool has_vars = e.total_degree() > 0;
        bool printed = false;
        if (abs_c != 1 || !has_vars) {
            out << abs_c.get_str();
            printed = true;
        }
        auto var = [&](const char* name, int exp) {
            if (exp == 0) return;
            if (printed) out << " ";
            out << name;
            if (exp > 1) out << "^" << exp;
            printed = true;
        };
        var("r1", e.e1);
        var("r0", e.e0);
        var("rm1", e.em1);
    }
    return out.str();
}

std::string to_json(const Polynomial3& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["e1"] = e.e1;
        term["e0"] = e.e0;
        term["em1"] = e.em1;
        term["c"] = c.get_str();
        terms.push_back(std::move(term));
    }
    nlohmann::ordered_json root;
    root["terms"] = std::move(terms);
    return root.dump();
}

Polynomial3 polynomial_from_json(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("polynomial_from_json: ") + e.what());
    }
    if (!root.is_object() || !root.contains("terms") || !root["terms"].is_array())
        throw std::runtime_error("polynomial_from_json: missing \"terms\" array");
    Polynomial3 p;
    for (const auto& term : root["terms"]) {
        if (!term.is_object() || !term.contains("e1") || !term.contains("e0") ||
            !term.contains("em1") || !term.contains("c"))
            throw std::runtime_error("polynomial_from_json: malformed term");
        if (!term["e1"].is_number_integer() || !term["e0"].is_number_integer() ||
            !term["em1"].is_number_integer())
            throw std::runtime_error("polynomial_from_json: exponents must be integers");
        MonomialExponents e{term["e1"].get<int>(), term["e0"].get<int>(),
                            term["em1"].get<int>()};
        if (e.e1 < 0 || e.e0 < 0 || e.em1 < 0)
            throw std::runtime_error("polynomial_from_json: negative exponent");
        BigInt c;
        if (term["c"].is_string()) {
            if (mpz_set_str(c.get_mpz_t(), term["c"].get<std::string>().c_str(), 10) != 0)
                throw std::runtime_error("polynomial_from_json: bad coefficient string");
        } else if (term["c"].is_number_integer()) {
            c = BigInt(term["c"].get<long>());
        } else {
            throw std::runtime_error("polynomial_from_json: bad coefficient");
        }
        if (sgn(c) == 0) throw std::runtime_error("polynomial_from_json: zero coefficient");
        if (p.terms().contains(e))
            throw std::runtime_error("polynomial_from_json: duplicate exponents");
        p.add_term(e, c);
    }
    return p;
}

}  // namespace twistgraph
