#include "twistgraph/qubit.hpp"

#include "twistgraph/errors.hpp"

#include <Eigen/Dense>

#include <cassert>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace twistgraph::qubit {

namespace {

void check_kn(int k, int n) {
    if (k < 1 || n < 1)
        throw std::invalid_argument("qubit: need k >= 1 and n >= 1");
}

// Real amplitude c(k1,k0,km1) as a double; zero off the support.
double amp_of(const QubitAmplitudes& state, int k1, int k0, int km1) {
    if (k1 < 0 || k0 < 0 || km1 < 0) return 0.0;
    const Rational a2 = state.amp2_of({k1, k0, km1});
    return std::sqrt(to_double(a2));
}

// Partially transposed reduced matrix on the (k+1)^2 grid indexed by
// (k1, km1); rows with k1 + km1 > k are identically zero.
Eigen::MatrixXd partial_transpose_matrix(int k, const RegionRatios& r) {
    const QubitAmplitudes state = build_qubit_state(k, r);
    const int d = k + 1;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c)
            for (int ap = 0; ap < d; ++ap)
                for (int cp = 0; cp < d; ++cp) {
                    // rho_A[(a,c),(ap,cp)] = sum_b c(a,b,c) c(ap,b,cp); the
                    // shared k0 index forces a + c == ap + cp. Partial
                    // transpose swaps the km1 column labels.
                    const int b = k - a - cp;
                    if (b < 0 || b != k - ap - c) continue;
                    m(a * d + c, ap * d + cp) = amp_of(state, a, b, cp) * amp_of(state, ap, b, c);
                }
    return m;
}

using Complex = std::complex<double>;

// Tr[((Tr_0 rho)^{T_{-1}})^n] for an arbitrary vector on a basis with factor
// dimensions (d1, d0, dm1), index (a*d0 + b)*dm1 + c.
double dense_negativity(const Eigen::VectorXcd& psi, int d1, int d0, int dm1, int n) {
    const int dim = d1 * dm1;
    Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Zero(dim, dim);
    for (int a = 0; a < d1; ++a)
        for (int c = 0; c < dm1; ++c)
            for (int ap = 0; ap < d1; ++ap)
                for (int cp = 0; cp < dm1; ++cp) {
                    Complex sum = 0.0;
                    for (int b = 0; b < d0; ++b)
                        // partial transpose applied directly: km1 labels swap
                        sum += psi((a * d0 + b) * dm1 + cp) *
                               std::conj(psi((ap * d0 + b) * dm1 + c));
                    reduced(a * dm1 + c, ap * dm1 + cp) = sum;
                }
    Eigen::MatrixXcd power = reduced;
    for (int i = 1; i < n; ++i) power = power * reduced;
    return power.trace().real();
}

Eigen::MatrixXcd random_unitary(int dim, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    return Eigen::MatrixXcd(qr.householderQ());
}

}  // namespace

Rational QubitAmplitudes::amp2_of(const OccupationTriple& t) const {
    const auto it = amp2.find(t);
    return it == amp2.end() ? Rational(0) : it->second;
}

QubitAmplitudes build_qubit_state(int k, const RegionRatios& r) {
    if (k < 1) throw std::invalid_argument("build_qubit_state: k must be >= 1");
    QubitAmplitudes state;
    state.k = k;
    Rational total(0);
    for (int k1 = 0; k1 <= k; ++k1)
        for (int k0 = 0; k0 <= k - k1; ++k0) {
            const int km1 = k - k1 - k0;
            Rational a2(multinomial(k, {k1, k0, km1}));
            a2 *= rational_pow(r.r1, static_cast<unsigned>(k1));
            a2 *= rational_pow(r.r0, static_cast<unsigned>(k0));
            a2 *= rational_pow(r.rm1, static_cast<unsigned>(km1));
            a2.canonicalize();
            if (sgn(a2) == 0) continue;
            state.amp2.emplace(OccupationTriple{k1, k0, km1}, a2);
            total += a2;
        }
    assert(total == 1);
    return state;
}

Rational negativity_direct_sum(int k, int n, const RegionRatios& r) {
    check_kn(k, n);
    {
        // (number of occupation triples)^n tuples at worst
        const double triples = (k + 1.0) * (k + 2.0) / 2.0;
        if (std::pow(triples, n) > 5e7)
            throw ScaleError("negativity_direct_sum: k, n beyond desk scale");
    }
    const QubitAmplitudes state = build_qubit_state(k, r);
    std::vector<int> k1(static_cast<std::size_t>(n)), k0(k1.size()), km1(k1.size());
    Rational sum(0);

    // Cyclic pair of copy j: A_j = (k1[j+1], k0[j], km1[j]) and
    // B_j = (k1[j], k0[j], km1[j+1]); both must be on the state's support.
    auto pair_weight = [&](int j, int jn) -> Rational {
        const OccupationTriple a{k1[jn], k0[j], km1[j]};
        const OccupationTriple b{k1[j], k0[j], km1[jn]};
        if (a.total() != state.k || b.total() != state.k) return Rational(0);
        Rational w = state.amp2_of(a);
        if (sgn(w) == 0) return w;
        w *= state.amp2_of(b);
        return w;
    };

    auto place = [&](auto&& self, int j, const Rational& product) -> void {
        if (j == n) {
            Rational w = pair_weight(n - 1, 0);
            if (sgn(w) == 0) return;
            w *= product;
            // The full cyclic product is a perfect square of a rational.
            auto root = sqrt_exact(w);
            if (!root) throw std::logic_error("negativity_direct_sum: non-square cyclic product");
            sum += *root;
            return;
        }
        for (k1[j] = 0; k1[j] <= k; ++k1[j])
            for (k0[j] = 0; k0[j] <= k; ++k0[j])
                for (km1[j] = 0; km1[j] <= k; ++km1[j]) {
                    if (j == 0) {
                        self(self, 1, product);
                        continue;
                    }
                    const Rational w = pair_weight(j - 1, j);
                    if (sgn(w) == 0) continue;
                    self(self, j + 1, product * w);
                }
    };
    place(place, 0, Rational(1));
    sum.canonicalize();
    return sum;
}

double density_matrix_negativity(int k, int n, const RegionRatios& r) {
    check_kn(k, n);
    const Eigen::MatrixXd m = partial_transpose_matrix(k, r);
    Eigen::MatrixXd power = m;
    for (int i = 1; i < n; ++i) power = power * m;
    return power.trace();
}

std::vector<double> negativity_spectrum(int k, const RegionRatios& r) {
    if (k < 1) throw std::invalid_argument("negativity_spectrum: k must be >= 1");
    const Eigen::MatrixXd m = partial_transpose_matrix(k, r);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    const auto& values = solver.eigenvalues();
    return std::vector<double>(values.data(), values.data() + values.size());
}

std::vector<std::vector<double>> partial_transpose_reduced(int k, const RegionRatios& r) {
    if (k < 1) throw std::invalid_argument("partial_transpose_reduced: k must be >= 1");
    const Eigen::MatrixXd m = partial_transpose_matrix(k, r);
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        rows[static_cast<std::size_t>(i)].assign(m.row(i).begin(), m.row(i).end());
    }
    return rows;
}

Rational renyi_direct(int k, int n, const Rational& r1, const Rational& r0) {
    check_kn(k, n);
    if (sgn(r1) < 0 || sgn(r0) < 0 || r1 + r0 != 1)
        throw std::invalid_argument("renyi_direct: need r1, r0 >= 0 with r1 + r0 = 1");
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

Rational twist_operator_check(int k, int n, const RegionRatios& r) {
    check_kn(k, n);
    if (k != 1 || n > 3)
        throw ScaleError("twist_operator_check: explicit permutation matrices guarded to k = 1, n <= 3");
    const QubitAmplitudes state = build_qubit_state(k, r);

    // Truncated factor occupation 0..k per region; basis of one copy is all
    // (k+1)^3 triples, the state living on those summing to k.
    std::vector<OccupationTriple> copies(static_cast<std::size_t>(n));
    Rational sum(0);
    // P1+ shifts the k1 entries forward by one copy, Pm1- shifts the km1
    // entries backward; the matrix element pairs amp(sigma(b)) with amp(b).
    auto place = [&](auto&& self, int j, const Rational& product) -> void {
        if (j == n) {
            Rational w = product;
            for (int c = 0; c < n; ++c) {
                const OccupationTriple image{copies[(c - 1 + n) % n].k1, copies[c].k0,
                                             copies[(c + 1) % n].km1};
                if (image.total() != k) return;
                const Rational a2 = state.amp2_of(image);
                if (sgn(a2) == 0) return;
                w *= a2;
            }
            auto root = sqrt_exact(w);
            if (!root) throw std::logic_error("twist_operator_check: non-square product");
            sum += *root;
            return;
        }
        for (int k1 = 0; k1 <= k; ++k1)
            for (int k0 = 0; k0 <= k - k1; ++k0) {
                const int km1 = k - k1 - k0;
                copies[j] = {k1, k0, km1};
                const Rational a2 = state.amp2_of(copies[j]);
                if (sgn(a2) == 0) continue;
                self(self, j + 1, product * a2);
            }
    };
    place(place, 0, Rational(1));
    sum.canonicalize();
    return sum;
}

bool unitary_invariance_check(int k, const RegionRatios& r, unsigned seed) {
    if (k != 1)
        throw ScaleError("unitary_invariance_check: guarded to k = 1 (3-dimensional factors)");
    // Occupations 0..2 per factor so a rotated |1> may spill into |2>.
    const int d = 3;
    const QubitAmplitudes state = build_qubit_state(k, r);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d * d);
    for (const auto& [t, a2] : state.amp2)
        psi((t.k1 * d + t.k0) * d + t.km1) = std::sqrt(to_double(a2));

    std::mt19937 rng(seed);
    auto apply_factor = [&](const Eigen::VectorXcd& v, const Eigen::MatrixXcd& u, int factor) {
        Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) {
                    const int idx[3] = {a, b, c};
                    Complex sum = 0.0;
                    for (int s = 0; s < d; ++s) {
                        int src[3] = {a, b, c};
                        src[factor] = s;
                        sum += u(idx[factor], s) * v((src[0] * d + src[1]) * d + src[2]);
                    }
                    out((a * d + b) * d + c) = sum;
                }
        return out;
    };

    constexpr double kTol = 1e-9;
    for (int n = 2; n <= 3; ++n) {
        const double reference = dense_negativity(psi, d, d, d, n);
        // identity rotation: the enlarged-cutoff embedding must reproduce the
        // plain matrix route
        if (std::abs(reference - density_matrix_negativity(k, n, r)) > 1e-12) return false;
        for (int factor = 0; factor < 3; ++factor) {
            const Eigen::VectorXcd rotated = apply_factor(psi, random_unitary(d, rng), factor);
            if (std::abs(dense_negativity(rotated, d, d, d, n) - reference) > kTol) return false;
        }
        Eigen::VectorXcd all = psi;
        for (int factor = 0; factor < 3; ++factor)
            all = apply_factor(all, random_unitary(d, rng), factor);
        if (std::abs(dense_negativity(all, d, d, d, n) - reference) > kTol) return false;
    }
    return true;
}

}  // namespace twistgraph::qubit
