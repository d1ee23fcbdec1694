// twistgraph: exact replica negativities and Renyi entropies of uniform
// multi-particle qubit states, computed by independent routes (graph
// partition functions, closed-form coefficients, dense density matrices,
// lattice Wick pairings) and cross-checked.

#include "checks.hpp"

#include "twistgraph/closedform.hpp"
#include "twistgraph/errors.hpp"
#include "twistgraph/exactmath.hpp"
#include "twistgraph/fock.hpp"
#include "twistgraph/graphs.hpp"
#include "twistgraph/poly3.hpp"
#include "twistgraph/qubit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace twistgraph;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitGuard = 2;
constexpr int kExitDisagreement = 3;
constexpr const char* kSchema = "twistgraph/1";
constexpr double kFloatTolerance = 1e-10;

std::string fmt15(double x) {
    std::ostringstream out;
    out << std::setprecision(15) << x;
    return out.str();
}

struct RatioArg {
    RegionRatios ratios;
    bool approximate = false;  // any component given as a decimal literal

    RatioArg() : ratios(Rational(1), Rational(0), Rational(0)) {}
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, sep)) out.push_back(token);
    return out;
}

RatioArg parse_ratio_list(const std::string& text) {
    const auto tokens = split(text, ',');
    if (tokens.size() != 3)
        throw std::invalid_argument("--r expects three comma-separated ratios, e.g. 1/3,1/3,1/3");
    RatioArg arg;
    std::vector<Rational> values;
    for (const auto& token : tokens) {
        values.push_back(parse_rational(token));
        if (token.find('.') != std::string::npos) arg.approximate = true;
    }
    if (arg.approximate) {
        const Rational sum = values[0] + values[1] + values[2];
        if (std::abs(to_double(sum) - 1.0) > 1e-9)
            throw std::invalid_argument("ratios must sum to 1 (got " + sum.get_str() + ")");
        // Repair the middle component so downstream exact invariants hold.
        values[1] = Rational(1) - values[0] - values[2];
        values[1].canonicalize();
        std::cerr << "warning: decimal ratios; exact cross-checks downgraded to "
                  << kFloatTolerance << " tolerance, r0 adjusted to " << values[1].get_str()
                  << "\n";
    }
    arg.ratios = RegionRatios(values[0], values[1], values[2]);
    return arg;
}

struct ReplicaIndex {
    bool is_integer = true;
    int n = 1;
    double exponent = 1.0;  // replica power nu; for "m x2" forms nu = 2m
    bool continued = false;
};

double parse_positive_real(const std::string& body, const std::string& what) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(body, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("--n: malformed " + what + " '" + body + "'");
    }
    if (pos != body.size() || value <= 0)
        throw std::invalid_argument("--n: malformed " + what + " '" + body + "'");
    return value;
}

ReplicaIndex parse_replica(const std::string& text) {
    ReplicaIndex idx;
    std::string body = text;
    if (body.size() > 2 && body.substr(body.size() - 2) == "x2") {
        body = body.substr(0, body.size() - 2);
        idx.is_integer = false;
        idx.continued = true;
        idx.exponent = 2.0 * parse_positive_real(body, "continuation index");
        return idx;
    }
    if (body.find_first_not_of("0123456789") == std::string::npos && !body.empty()) {
        idx.n = std::stoi(body);
        idx.exponent = idx.n;
        if (idx.n < 1) throw std::invalid_argument("--n must be >= 1");
        return idx;
    }
    idx.is_integer = false;
    idx.continued = true;
    idx.exponent = parse_positive_real(body, "replica index");
    return idx;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    return file;
}

ordered_json ratios_json(const RegionRatios& r) {
    return ordered_json::array({r.r1.get_str(), r.r0.get_str(), r.rm1.get_str()});
}

ordered_json poly_terms_json(const Polynomial3& p) {
    return ordered_json::parse(to_json(p))["terms"];
}

std::optional<fock::RegionLayout> layout_from_ratios(const RegionRatios& r) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), r.r1.get_den().get_mpz_t(), r.r0.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.rm1.get_den().get_mpz_t());
    if (l > 1000000) return std::nullopt;  // lattice would need absurdly many sites
    auto block = [&](const Rational& x) {
        return static_cast<int>(mpz_class(x.get_num() * (l / x.get_den())).get_si());
    };
    return fock::RegionLayout{block(r.r1), block(r.r0), block(r.rm1)};
}

// ---------------------------------------------------------------------------
// partition

struct PartitionOptions {
    int k = 1;
    int n = 2;
    std::string format = "text";
    bool raw = false;
    std::string out;
};

int cmd_partition(const PartitionOptions& opt) {
    Polynomial3 poly;
    if (opt.raw) {
        poly = graphs::partition_function_fast(opt.k, opt.n);
    } else {
        poly = closedform::negativity_polynomial(opt.k, opt.n);
    }
    std::ofstream file;
    std::ostream& out = open_output(file, opt.out);
    if (opt.format == "json") {
        ordered_json root;
        root["schema"] = kSchema;
        root["kind"] = "partition";
        root["k"] = opt.k;
        root["n"] = opt.n;
        root["raw"] = opt.raw;
        root["terms"] = poly_terms_json(poly);
        out << root.dump() << "\n";
    } else if (opt.format == "csv") {
        out << "e1,e0,em1,c\n";
        for (const auto& [e, c] : poly.terms())
            out << e.e1 << "," << e.e0 << "," << e.em1 << "," << c.get_str() << "\n";
    } else {
        out << to_text(poly) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// negativity

struct RouteValue {
    std::string name;
    bool exact = false;
    Rational rational;
    double value = 0.0;
};

struct NegativityOptions {
    int k = 1;
    std::string n = "2";
    std::string ratios;
    std::string split;  // lattice block sizes "L1,L0,Lm1"
    int sites = 0;
    std::string route = "all";
    std::string format = "text";
    std::string out;
};

fock::RegionLayout parse_layout(const std::string& split, int sites) {
    const auto tokens = ::split(split, ',');
    if (tokens.size() != 3)
        throw std::invalid_argument("--split expects three block sizes, e.g. 2,1,1");
    fock::RegionLayout layout{std::stoi(tokens[0]), std::stoi(tokens[1]), std::stoi(tokens[2])};
    if (layout.l1 < 0 || layout.l0 < 0 || layout.lm1 < 0)
        throw std::invalid_argument("--split block sizes must be non-negative");
    if (sites > 0 && layout.sites() != sites)
        throw std::invalid_argument("--sites does not match the --split block sizes");
    return layout;
}

int cmd_negativity(const NegativityOptions& opt) {
    if (opt.ratios.empty() == opt.split.empty())
        throw std::invalid_argument("give exactly one of --r or --split");
    std::optional<fock::RegionLayout> given_layout;
    RatioArg ratio;
    if (!opt.split.empty()) {
        given_layout = parse_layout(opt.split, opt.sites);
        ratio.ratios = given_layout->ratios();
    } else {
        ratio = parse_ratio_list(opt.ratios);
    }
    const RegionRatios& r = ratio.ratios;
    const ReplicaIndex idx = parse_replica(opt.n);

    std::vector<RouteValue> routes;
    std::vector<std::string> notes;

    if (!idx.is_integer) {
        if (opt.k != 1)
            throw ScaleError("replica continuation is available for k = 1 only");
        if (opt.route != "all" && opt.route != "closed")
            throw ScaleError("replica continuation supports route 'closed' only");
        const double m = idx.exponent / 2.0;
        const double closed = closedform::replica_negativity_k1_continued(
            m, to_double(r.r1), to_double(r.r0), to_double(r.rm1));
        routes.push_back({"closed", false, Rational(0), closed});
        // Independent cross-value: sum over |lambda|^(2m) of the partially
        // transposed reduced matrix spectrum.
        double from_spectrum = 0.0;
        for (double v : qubit::negativity_spectrum(1, r))
            from_spectrum += std::pow(std::abs(v), idx.exponent);
        routes.push_back({"spectrum", false, Rational(0), from_spectrum});
    } else {
        const int n = idx.n;
        const int k = opt.k;
        const bool all = opt.route == "all";
        auto want = [&](const char* name) { return all || opt.route == name; };

        if (want("closed")) {
            const Rational v = closedform::negativity_polynomial(k, n).eval(r);
            routes.push_back({"closed", true, v, to_double(v)});
        }
        if (want("graph-fast")) {
            if (n >= 2) {
                Rational v = graphs::partition_function_fast(k, n).eval(r);
                v /= Rational(int_pow(factorial(static_cast<unsigned long>(k)),
                                      static_cast<unsigned long>(n)));
                v.canonicalize();
                routes.push_back({"graph-fast", true, v, to_double(v)});
            } else if (all) {
                notes.push_back("graph-fast skipped: graph family needs n >= 2");
            } else {
                throw ScaleError("graph routes need n >= 2");
            }
        }
        if (want("graph-raw")) {
            if (n >= 2 && k * n <= graphs::kRawEnumerationLimit) {
                Rational v = graphs::partition_function_raw(k, n).eval(r);
                v /= Rational(int_pow(factorial(static_cast<unsigned long>(k)),
                                      static_cast<unsigned long>(n)));
                v.canonicalize();
                routes.push_back({"graph-raw", true, v, to_double(v)});
            } else if (all) {
                notes.push_back("graph-raw skipped: needs n >= 2 and k*n <= " +
                                std::to_string(graphs::kRawEnumerationLimit));
            } else {
                graphs::partition_function_raw(k, n);  // raises the guard error
            }
        }
        if (want("direct-sum")) {
            if (std::pow((k + 1.0) * (k + 2.0) / 2.0, n) <= 5e7) {
                const Rational v = qubit::negativity_direct_sum(k, n, r);
                routes.push_back({"direct-sum", true, v, to_double(v)});
            } else if (all) {
                notes.push_back("direct-sum skipped: tuple space beyond desk scale");
            } else {
                qubit::negativity_direct_sum(k, n, r);
            }
        }
        if (want("density")) {
            routes.push_back(
                {"density", false, Rational(0), qubit::density_matrix_negativity(k, n, r)});
        }
        if (want("wick")) {
            const auto layout = given_layout ? given_layout : layout_from_ratios(r);
            if (k * n <= fock::kWickPairingLimit && layout) {
                const Rational v = fock::wick_oracle(k, n, *layout);
                routes.push_back({"wick", true, v, to_double(v)});
            } else if (all) {
                notes.push_back("wick skipped: needs k*n <= " +
                                std::to_string(fock::kWickPairingLimit) +
                                " and lattice-sized denominators");
            } else if (!layout) {
                throw ScaleError("wick route: ratio denominators too large for a lattice");
            } else {
                fock::wick_oracle(k, n, *layout);
            }
        }
    }

    if (routes.empty()) throw std::invalid_argument("unknown route '" + opt.route + "'");

    // Agreement: exact routes must coincide exactly (tolerance when the input
    // itself was approximate); float routes compare against the reference.
    bool agree = true;
    const RouteValue* exact_ref = nullptr;
    for (const auto& rv : routes)
        if (rv.exact) {
            exact_ref = &rv;
            break;
        }
    const double ref_value = exact_ref ? exact_ref->value : routes.front().value;
    for (const auto& rv : routes) {
        if (rv.exact && exact_ref && !ratio.approximate) {
            if (rv.rational != exact_ref->rational) agree = false;
        } else if (std::abs(rv.value - ref_value) > kFloatTolerance) {
            agree = false;
        }
    }

    std::ofstream file;
    std::ostream& out = open_output(file, opt.out);
    if (opt.format == "json") {
        ordered_json root;
        root["schema"] = kSchema;
        root["kind"] = "negativity";
        root["k"] = opt.k;
        root["n"] = opt.n;
        root["r"] = ratios_json(r);
        ordered_json jroutes = ordered_json::array();
        for (const auto& rv : routes) {
            ordered_json jr;
            jr["route"] = rv.name;
            jr["exact"] = rv.exact;
            if (rv.exact) jr["exp_En"] = rv.rational.get_str();
            jr["exp_En_float"] = rv.value;
            jr["En"] = std::log(rv.value);
            jroutes.push_back(std::move(jr));
        }
        root["routes"] = std::move(jroutes);
        root["notes"] = notes;
        root["agree"] = agree;
        out << root.dump() << "\n";
    } else if (opt.format == "csv") {
        out << "route,exp_En,En\n";
        for (const auto& rv : routes)
            out << rv.name << "," << fmt15(rv.value) << "," << fmt15(std::log(rv.value)) << "\n";
    } else {
        for (const auto& rv : routes) {
            out << std::left << std::setw(11) << rv.name << " exp_En = ";
            if (rv.exact)
                out << rv.rational.get_str() << " (" << fmt15(rv.value) << ")";
            else
                out << fmt15(rv.value);
            out << "  En = " << fmt15(std::log(rv.value)) << "\n";
        }
        for (const auto& note : notes) out << "note: " << note << "\n";
        out << "agreement: " << (agree ? "OK" : "FAIL") << "\n";
    }
    return agree ? kExitOk : kExitDisagreement;
}

// ---------------------------------------------------------------------------
// renyi

struct RenyiOptions {
    int k = 1;
    int n = 2;
    std::string r1 = "1/2";
    std::string format = "text";
    std::string out;
};

int cmd_renyi(const RenyiOptions& opt) {
    Rational r1 = parse_rational(opt.r1);
    const bool approximate = opt.r1.find('.') != std::string::npos;
    if (sgn(r1) < 0 || r1 > 1) throw std::invalid_argument("--r1 must lie in [0, 1]");
    const Rational r0 = Rational(1) - r1;

    struct Entry {
        std::string name;
        Rational value;
    };
    std::vector<Entry> entries;
    entries.push_back({"closed", closedform::renyi_exp(opt.k, opt.n, r1, r0)});
    entries.push_back({"density", qubit::renyi_direct(opt.k, opt.n, r1, r0)});
    entries.push_back({"partition",
                       closedform::negativity_polynomial(opt.k, opt.n)
                           .eval(RegionRatios(r1, r0, Rational(0)))});

    bool agree = true;
    for (const auto& e : entries) {
        if (approximate) {
            if (std::abs(to_double(e.value) - to_double(entries.front().value)) > kFloatTolerance)
                agree = false;
        } else if (e.value != entries.front().value) {
            agree = false;
        }
    }
    const double exp_value = to_double(entries.front().value);
    const double entropy = (opt.n == 1) ? 0.0 : std::log(exp_value) / (1.0 - opt.n);

    std::ofstream file;
    std::ostream& out = open_output(file, opt.out);
    if (opt.format == "json") {
        ordered_json root;
        root["schema"] = kSchema;
        root["kind"] = "renyi";
        root["k"] = opt.k;
        root["n"] = opt.n;
        root["r1"] = r1.get_str();
        ordered_json jroutes = ordered_json::array();
        for (const auto& e : entries)
            jroutes.push_back({{"route", e.name}, {"exp", e.value.get_str()},
                               {"exp_float", to_double(e.value)}});
        root["routes"] = std::move(jroutes);
        root["Sn"] = entropy;
        root["agree"] = agree;
        out << root.dump() << "\n";
    } else if (opt.format == "csv") {
        out << "route,exp,Sn\n";
        for (const auto& e : entries)
            out << e.name << "," << fmt15(to_double(e.value)) << "," << fmt15(entropy) << "\n";
    } else {
        for (const auto& e : entries)
            out << std::left << std::setw(10) << e.name << " exp[(1-n)Sn] = " << e.value.get_str()
                << " (" << fmt15(to_double(e.value)) << ")\n";
        out << "Sn = " << fmt15(entropy) << "\n";
        out << "agreement: " << (agree ? "OK" : "FAIL") << "\n";
    }
    return agree ? kExitOk : kExitDisagreement;
}

// ---------------------------------------------------------------------------
// curve

struct CurveOptions {
    int k = 1;
    std::string n = "2";
    int points = 11;
    std::string fix = "rm1=0";
    std::string quantity = "negativity";
    bool check = false;
    std::string out;
};

int cmd_curve(const CurveOptions& opt) {
    if (opt.points < 2) throw std::invalid_argument("--points must be >= 2");
    const ReplicaIndex idx = parse_replica(opt.n);

    Rational split_fraction(0);
    enum class Fix { Rm1Zero, R0Zero, Split } fix = Fix::Rm1Zero;
    if (opt.fix == "rm1=0") {
        fix = Fix::Rm1Zero;
    } else if (opt.fix == "r0=0") {
        fix = Fix::R0Zero;
    } else if (opt.fix.rfind("split=", 0) == 0) {
        fix = Fix::Split;
        split_fraction = parse_rational(opt.fix.substr(6));
        if (sgn(split_fraction) < 0 || split_fraction > 1)
            throw std::invalid_argument("--fix split fraction must lie in [0, 1]");
    } else {
        throw std::invalid_argument("--fix expects rm1=0, r0=0 or split=<fraction>");
    }

    const bool renyi = opt.quantity == "renyi";
    if (renyi && fix != Fix::Rm1Zero)
        throw std::invalid_argument("--quantity renyi requires --fix rm1=0");
    if (renyi && !idx.is_integer)
        throw std::invalid_argument("--quantity renyi requires an integer n");
    if (!idx.is_integer && opt.k != 1)
        throw ScaleError("replica continuation is available for k = 1 only");

    Polynomial3 poly;
    if (idx.is_integer) poly = closedform::negativity_polynomial(opt.k, idx.n);

    std::ofstream file;
    std::ostream& out = open_output(file, opt.out);
    out << (renyi ? "r1,r0,rm1,exp_1mnSn,Sn" : "r1,r0,rm1,exp_En,En") << "\n";

    bool all_agree = true;
    for (int i = 0; i < opt.points; ++i) {
        const Rational r1(i, opt.points - 1);
        Rational r0, rm1;
        switch (fix) {
            case Fix::Rm1Zero: r0 = Rational(1) - r1; rm1 = 0; break;
            case Fix::R0Zero: r0 = 0; rm1 = Rational(1) - r1; break;
            case Fix::Split:
                rm1 = split_fraction * (Rational(1) - r1);
                r0 = Rational(1) - r1 - rm1;
                break;
        }
        r0.canonicalize();
        rm1.canonicalize();
        const RegionRatios r(r1, r0, rm1);

        double exp_value = 0.0;
        if (!idx.is_integer) {
            exp_value = closedform::replica_negativity_k1_continued(
                idx.exponent / 2.0, to_double(r.r1), to_double(r.r0), to_double(r.rm1));
        } else if (renyi) {
            exp_value = to_double(closedform::renyi_exp(opt.k, idx.n, r1, r0));
        } else {
            exp_value = to_double(poly.eval(r));
        }
        const double log_value = renyi ? std::log(exp_value) / (1.0 - idx.n)
                                       : std::log(exp_value);
        out << fmt15(to_double(r1)) << "," << fmt15(to_double(r0)) << ","
            << fmt15(to_double(rm1)) << "," << fmt15(exp_value) << "," << fmt15(log_value)
            << "\n";

        if (opt.check) {
            if (!idx.is_integer) {
                double from_spectrum = 0.0;
                for (double v : qubit::negativity_spectrum(1, r))
                    from_spectrum += std::pow(std::abs(v), idx.exponent);
                if (std::abs(from_spectrum - exp_value) > kFloatTolerance) all_agree = false;
            } else if (renyi) {
                if (qubit::renyi_direct(opt.k, idx.n, r1, r0) !=
                    closedform::renyi_exp(opt.k, idx.n, r1, r0))
                    all_agree = false;
            } else {
                if (std::pow((opt.k + 1.0) * (opt.k + 2.0) / 2.0, idx.n) <= 5e7 &&
                    qubit::negativity_direct_sum(opt.k, idx.n, r) != poly.eval(r))
                    all_agree = false;
                if (std::abs(qubit::density_matrix_negativity(opt.k, idx.n, r) - exp_value) >
                    kFloatTolerance)
                    all_agree = false;
            }
        }
    }
    if (opt.check && !all_agree) {
        std::cerr << "curve: cross-route check failed\n";
        return kExitDisagreement;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumOptions {
    int k = 1;
    std::string ratios = "1/3,1/3,1/3";
    std::string format = "text";
    bool matrix = false;
    std::string out;
};

int cmd_spectrum(const SpectrumOptions& opt) {
    const RatioArg ratio = parse_ratio_list(opt.ratios);
    const auto values = qubit::negativity_spectrum(opt.k, ratio.ratios);
    double sum = 0.0, sum_abs = 0.0;
    for (double v : values) {
        sum += v;
        sum_abs += std::abs(v);
    }
    std::ofstream file;
    std::ostream& out = open_output(file, opt.out);
    if (opt.format == "json") {
        ordered_json root;
        root["schema"] = kSchema;
        root["kind"] = "spectrum";
        root["k"] = opt.k;
        root["r"] = ratios_json(ratio.ratios);
        root["eigenvalues"] = values;
        root["sum"] = sum;
        root["sum_abs"] = sum_abs;
        root["log_sum_abs"] = std::log(sum_abs);
        if (opt.matrix)
            root["matrix"] = qubit::partial_transpose_reduced(opt.k, ratio.ratios);
        out << root.dump() << "\n";
    } else if (opt.format == "csv") {
        out << "eigenvalue\n";
        for (double v : values) out << fmt15(v) << "\n";
    } else {
        out << "eigenvalues (ascending):\n";
        for (double v : values)
            out << "  " << fmt15(std::abs(v) < 1e-12 ? 0.0 : v) << "\n";
        out << "sum = " << fmt15(sum) << "\n";
        out << "sum |lambda| = " << fmt15(sum_abs) << "  log = " << fmt15(std::log(sum_abs))
            << "\n";
        if (opt.matrix) {
            out << "partially transposed reduced matrix:\n";
            for (const auto& row : qubit::partial_transpose_reduced(opt.k, ratio.ratios)) {
                out << " ";
                for (double v : row) out << " " << fmt15(v);
                out << "\n";
            }
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// graphs

struct GraphsOptions {
    int k = 1;
    int n = 3;
    std::string format = "text";
    std::string out;
};

int cmd_graphs(const GraphsOptions& opt) {
    std::ofstream file;
    std::ostream& out = open_output(file, opt.out);
    if (opt.format == "json") {
        ordered_json jgraphs = ordered_json::array();
        graphs::enumerate_graphs_raw(opt.k, opt.n, [&](const graphs::Graph& g) {
            ordered_json edges = ordered_json::array();
            for (const auto& e : g.edges)
                edges.push_back({{"left_particle", e.left_particle},
                                 {"left_copy", e.left_copy},
                                 {"right_particle", e.right_particle},
                                 {"right_copy", e.right_copy},
                                 {"shift", e.shift}});
            jgraphs.push_back({{"edges", std::move(edges)}});
        });
        ordered_json root;
        root["schema"] = kSchema;
        root["kind"] = "graphs";
        root["k"] = opt.k;
        root["n"] = opt.n;
        root["count"] = jgraphs.size();
        root["graphs"] = std::move(jgraphs);
        out << root.dump() << "\n";
    } else {
        std::uint64_t index = 0;
        graphs::enumerate_graphs_raw(opt.k, opt.n, [&](const graphs::Graph& g) {
            out << "graph " << ++index << ":";
            for (const auto& e : g.edges)
                out << " (" << e.left_particle << "," << e.left_copy << ")->("
                    << e.right_particle << "," << e.right_copy << ")["
                    << (e.shift > 0 ? "+1" : e.shift == 0 ? "0" : "-1") << "]";
            out << "\n";
        });
        out << "count: " << index << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string scope = "all";
    std::string out;
};

int cmd_verify(const VerifyOptions& opt) {
    const auto ids = checks::criteria_for_scope(opt.scope);
    const auto results = checks::run_criteria(ids);

    ordered_json jcriteria = ordered_json::array();
    bool all_pass = true;
    for (const auto& result : results) {
        ordered_json jchecks = ordered_json::array();
        for (const auto& check : result.checks)
            jchecks.push_back({{"name", check.name},
                               {"expected", check.expected},
                               {"actual", check.actual},
                               {"pass", check.pass}});
        jcriteria.push_back({{"id", result.id},
                             {"title", result.title},
                             {"seconds", result.seconds},
                             {"pass", result.pass()},
                             {"checks", std::move(jchecks)}});
        all_pass = all_pass && result.pass();
        std::cerr << "criterion " << result.id << " (" << result.title << "): "
                  << (result.pass() ? "PASS" : "FAIL") << " [" << std::fixed
                  << std::setprecision(2) << result.seconds << "s]\n";
    }
    ordered_json root;
    root["schema"] = kSchema;
    root["kind"] = "verify";
    root["scope"] = opt.scope;
    root["criteria"] = std::move(jcriteria);
    root["pass"] = all_pass;

    std::ofstream file;
    std::ostream& out = open_output(file, opt.out);
    out << root.dump() << "\n";
    return all_pass ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact replica negativities and Renyi entropies of uniform qubit states"};
    app.require_subcommand(1);

    PartitionOptions partition_opt;
    auto* partition = app.add_subcommand(
        "partition", "print the replica-negativity polynomial exp[E_n] (or the raw "
                     "graph partition function with --raw)");
    partition->add_option("--k", partition_opt.k, "particle count")->required();
    partition->add_option("--n", partition_opt.n, "replica count")->required();
    partition->add_option("--format", partition_opt.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    partition->add_flag("--raw", partition_opt.raw, "emit p_{k,n} instead of p_{k,n}/(k!)^n");
    partition->add_option("--out", partition_opt.out, "write to file instead of stdout");

    NegativityOptions negativity_opt;
    auto* negativity = app.add_subcommand(
        "negativity", "replica logarithmic negativity by one or all routes");
    negativity->add_option("--k", negativity_opt.k, "particle count")->required();
    negativity->add_option("--n", negativity_opt.n,
                           "replica count; 'Mx2' continues even replicas to real M (k=1)")
        ->required();
    negativity->add_option("--r", negativity_opt.ratios,
                           "ratios r1,r0,rm1 (fractions or decimals)");
    negativity->add_option("--split", negativity_opt.split,
                           "lattice block sizes L1,L0,Lm1 (alternative to --r)");
    negativity->add_option("--sites", negativity_opt.sites,
                           "total lattice sites (optional consistency check for --split)");
    negativity->add_option("--route", negativity_opt.route,
                           "all, graph-raw, graph-fast, closed, direct-sum, density or wick")
        ->check(CLI::IsMember(
            {"all", "graph-raw", "graph-fast", "closed", "direct-sum", "density", "wick"}));
    negativity->add_option("--format", negativity_opt.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    negativity->add_option("--out", negativity_opt.out, "write to file instead of stdout");

    RenyiOptions renyi_opt;
    auto* renyi = app.add_subcommand("renyi", "Renyi entanglement entropy of the two-region state");
    renyi->add_option("--k", renyi_opt.k, "particle count")->required();
    renyi->add_option("--n", renyi_opt.n, "Renyi index (integer >= 1)")->required();
    renyi->add_option("--r1", renyi_opt.r1, "ratio of the first region")->required();
    renyi->add_option("--format", renyi_opt.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    renyi->add_option("--out", renyi_opt.out, "write to file instead of stdout");

    CurveOptions curve_opt;
    auto* curve = app.add_subcommand("curve", "CSV sweep of r1 from 0 to 1");
    curve->add_option("--k", curve_opt.k, "particle count")->required();
    curve->add_option("--n", curve_opt.n, "replica count (or 'Mx2' continuation)")->required();
    curve->add_option("--points", curve_opt.points, "grid points (default 11)");
    curve->add_option("--fix", curve_opt.fix, "rm1=0 (default), r0=0, or split=<fraction>");
    curve->add_option("--quantity", curve_opt.quantity, "negativity (default) or renyi")
        ->check(CLI::IsMember({"negativity", "renyi"}));
    curve->add_flag("--check", curve_opt.check, "cross-verify every row against other routes");
    curve->add_option("--out", curve_opt.out, "write to file instead of stdout");

    SpectrumOptions spectrum_opt;
    auto* spectrum = app.add_subcommand(
        "spectrum", "eigenvalues of the partially transposed reduced matrix");
    spectrum->add_option("--k", spectrum_opt.k, "particle count")->required();
    spectrum->add_option("--r", spectrum_opt.ratios, "ratios r1,r0,rm1")->required();
    spectrum->add_option("--format", spectrum_opt.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    spectrum->add_flag("--matrix", spectrum_opt.matrix,
                       "also emit the partially transposed reduced matrix");
    spectrum->add_option("--out", spectrum_opt.out, "write to file instead of stdout");

    GraphsOptions graphs_opt;
    auto* graphs_cmd = app.add_subcommand("graphs", "dump the matching family as edge lists");
    graphs_cmd->add_option("--k", graphs_opt.k, "particle count")->required();
    graphs_cmd->add_option("--n", graphs_opt.n, "replica count")->required();
    graphs_cmd->add_option("--format", graphs_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    graphs_cmd->add_option("--out", graphs_opt.out, "write to file instead of stdout");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "run the built-in verification suite");
    verify->add_option("--scope", verify_opt.scope,
                       "paper-values, cross-routes, recursion or all (default)")
        ->check(CLI::IsMember({"paper-values", "cross-routes", "recursion", "all"}));
    verify->add_option("--out", verify_opt.out, "write the JSON report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (partition->parsed()) return cmd_partition(partition_opt);
        if (negativity->parsed()) return cmd_negativity(negativity_opt);
        if (renyi->parsed()) return cmd_renyi(renyi_opt);
        if (curve->parsed()) return cmd_curve(curve_opt);
        if (spectrum->parsed()) return cmd_spectrum(spectrum_opt);
        if (graphs_cmd->parsed()) return cmd_graphs(graphs_opt);
        if (verify->parsed()) return cmd_verify(verify_opt);
    } catch (const twistgraph::ScaleError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
