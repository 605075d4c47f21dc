#include "symcap/finite.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "symcap/simplex.hpp"

namespace symcap {

namespace {

using Cplx = std::complex<double>;

Eigen::VectorXcd vector_from_params(const Eigen::VectorXd& theta, int dim) {
    Eigen::VectorXcd psi(dim);
    for (int i = 0; i < dim; ++i) psi(i) = Cplx(theta(2 * i), theta(2 * i + 1));
    double n = psi.norm();
    if (n < 1e-8) return Eigen::VectorXcd();
    return psi / n;
}

Eigen::MatrixXcd pure_state(const Eigen::VectorXcd& psi) {
    return psi * psi.adjoint();
}

// ln of a density matrix restricted to its support; entries off the support
// never contribute to the traces we take against supported states.
double relative_entropy(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> er(rho), es(sigma);
    double tr_rho_ln_rho = 0.0;
    for (int i = 0; i < er.eigenvalues().size(); ++i) {
        double l = er.eigenvalues()(i);
        if (l > 1e-14) tr_rho_ln_rho += l * std::log(l);
    }
    double tr_rho_ln_sigma = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double l = std::max(es.eigenvalues()(i), 1e-300);
        Eigen::VectorXcd v = es.eigenvectors().col(i);
        tr_rho_ln_sigma += std::log(l) * (v.adjoint() * rho * v)(0).real();
    }
    return tr_rho_ln_rho - tr_rho_ln_sigma;
}

double chi_of(const FiniteChannel& ch, const std::vector<double>& probs,
              const std::vector<Eigen::MatrixXcd>& outs) {
    Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(ch.dim, ch.dim);
    for (size_t i = 0; i < probs.size(); ++i) avg += probs[i] * outs[i];
    double chi = vn_entropy(avg);
    for (size_t i = 0; i < probs.size(); ++i) chi -= probs[i] * vn_entropy(outs[i]);
    return chi;
}

// Exponentiated-gradient ascent over the probability simplex; chi is concave
// in the probabilities with gradient D(Phi[rho_x] || Phi[rho_bar]).
void optimize_probabilities(const FiniteChannel& ch, const std::vector<Eigen::MatrixXcd>& outs,
                            std::vector<double>& probs, int iterations) {
    const size_t m = outs.size();
    for (int it = 0; it < iterations; ++it) {
        Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(ch.dim, ch.dim);
        for (size_t i = 0; i < m; ++i) avg += probs[i] * outs[i];
        std::vector<double> w(m);
        double z = 0.0, wmax = -std::numeric_limits<double>::infinity();
        std::vector<double> d(m);
        for (size_t i = 0; i < m; ++i) {
            d[i] = relative_entropy(outs[i], avg);
            wmax = std::max(wmax, d[i]);
        }
        for (size_t i = 0; i < m; ++i) {
            w[i] = probs[i] * std::exp(d[i] - wmax);
            z += w[i];
        }
        double shift = 0.0;
        for (size_t i = 0; i < m; ++i) {
            double next = w[i] / z;
            shift += std::abs(next - probs[i]);
            probs[i] = next;
        }
        if (shift < 1e-12) break;
    }
}

}  // namespace

FiniteChannel depolarizing_channel(int dim, double p) {
    if (dim < 2) throw std::invalid_argument("depolarizing_channel: dim must be >= 2");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("depolarizing_channel: p outside [0,1]");
    FiniteChannel ch;
    ch.dim = dim;
    // Heisenberg-Weyl twirl: (1/d^2) sum_jk U_jk rho U_jk^* = I/d.
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        x((i + 1) % dim, i) = 1.0;
        z(i, i) = std::exp(Cplx(0.0, 2.0 * M_PI * i / dim));
    }
    ch.kraus.push_back(std::sqrt(1.0 - p) * Eigen::MatrixXcd::Identity(dim, dim));
    Eigen::MatrixXcd xj = Eigen::MatrixXcd::Identity(dim, dim);
    for (int j = 0; j < dim; ++j) {
        Eigen::MatrixXcd u = xj;
        for (int k = 0; k < dim; ++k) {
            ch.kraus.push_back(std::sqrt(p) / dim * u);
            u = u * z;
        }
        xj = x * xj;
    }
    return ch;
}

FiniteChannel identity_channel(int dim) {
    return FiniteChannel{dim, {Eigen::MatrixXcd::Identity(dim, dim)}};
}

bool is_trace_preserving(const FiniteChannel& ch, double tol) {
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(ch.dim, ch.dim);
    for (const auto& a : ch.kraus) sum += a.adjoint() * a;
    return (sum - Eigen::MatrixXcd::Identity(ch.dim, ch.dim)).norm() <= tol;
}

Eigen::MatrixXcd apply(const FiniteChannel& ch, const Eigen::MatrixXcd& rho) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(ch.dim, ch.dim);
    for (const auto& a : ch.kraus) out += a * rho * a.adjoint();
    return out;
}

double vn_entropy(const Eigen::MatrixXcd& rho) {
    if ((rho - rho.adjoint()).norm() > 1e-9 * (1.0 + rho.norm()))
        throw std::invalid_argument("vn_entropy: not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-8)
        throw std::invalid_argument("vn_entropy: trace != 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    double s = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double l = es.eigenvalues()(i);
        if (l < -1e-9) throw std::invalid_argument("vn_entropy: negative eigenvalue");
        if (l > 1e-14) s -= l * std::log(l);
    }
    return s;
}

MinEntropyResult min_output_entropy(const FiniteChannel& ch, int starts, unsigned seed) {
    if (!is_trace_preserving(ch)) throw std::invalid_argument("min_output_entropy: invalid channel");
    auto objective = [&](const Eigen::VectorXd& theta) {
        Eigen::VectorXcd psi = vector_from_params(theta, ch.dim);
        if (psi.size() == 0) return 1e6;
        return vn_entropy(symcap::apply(ch, pure_state(psi)));
    };
    SimplexOptions opts;
    opts.max_evaluations = 6000;
    opts.restarts = 2;
    MinEntropyResult best;
    best.entropy = std::numeric_limits<double>::infinity();
    for (int s = 0; s < starts; ++s) {
        std::mt19937 rng(1000 + seed + s);
        std::normal_distribution<double> dist(0.0, 1.0);
        Eigen::VectorXd x0(2 * ch.dim);
        for (int i = 0; i < x0.size(); ++i) x0(i) = dist(rng);
        SimplexResult res = nelder_mead(objective, x0, opts);
        if (res.value < best.entropy) {
            best.entropy = res.value;
            best.minimizer = vector_from_params(res.x, ch.dim);
            best.converged = res.converged;
        }
    }
    return best;
}

ChiResult chi_capacity_bruteforce(const FiniteChannel& ch, int max_states, int starts,
                                  unsigned seed) {
    if (!is_trace_preserving(ch))
        throw std::invalid_argument("chi_capacity_bruteforce: invalid channel");
    if (max_states < ch.dim * ch.dim)
        throw std::invalid_argument("chi_capacity_bruteforce: need at least d^2 states");
    const int d = ch.dim;
    const int m = max_states;

    ChiResult best;
    best.chi = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < starts; ++s) {
        std::mt19937 rng(2000 + seed + s);
        std::normal_distribution<double> dist(0.0, 1.0);
        std::vector<Eigen::VectorXd> params(m, Eigen::VectorXd(2 * d));
        for (auto& p : params)
            for (int i = 0; i < p.size(); ++i) p(i) = dist(rng);
        std::vector<double> probs(m, 1.0 / m);

        auto outputs = [&]() {
            std::vector<Eigen::MatrixXcd> outs;
            for (const auto& p : params) {
                Eigen::VectorXcd psi = vector_from_params(p, d);
                outs.push_back(symcap::apply(ch, pure_state(psi)));
            }
            return outs;
        };

        double chi = -std::numeric_limits<double>::infinity();
        bool converged = false;
        for (int round = 0; round < 40; ++round) {
            auto outs = outputs();
            optimize_probabilities(ch, outs, probs, 200);
            // One coordinate pass of state moves at fixed probabilities.
            for (int x = 0; x < m; ++x) {
                if (probs[x] < 1e-9) continue;
                auto obj = [&](const Eigen::VectorXd& theta) {
                    Eigen::VectorXcd psi = vector_from_params(theta, d);
                    if (psi.size() == 0) return 1e6;
                    auto local = outs;
                    local[x] = symcap::apply(ch, pure_state(psi));
                    return -chi_of(ch, probs, local);
                };
                SimplexOptions sopts;
                sopts.max_evaluations = 800;
                sopts.restarts = 1;
                sopts.patience = 25;
                SimplexResult res = nelder_mead(obj, params[x], sopts);
                params[x] = res.x;
                outs[x] = symcap::apply(ch, pure_state(vector_from_params(res.x, d)));
            }
            optimize_probabilities(ch, outs, probs, 200);
            double next = chi_of(ch, probs, outs);
            if (next - chi < 1e-10) {
                chi = std::max(chi, next);
                converged = true;
                break;
            }
            chi = next;
        }
        if (chi > best.chi) {
            best.chi = chi;
            best.converged = converged;
            best.ensemble.probabilities = probs;
            best.ensemble.states.clear();
            for (const auto& p : params)
                best.ensemble.states.push_back(pure_state(vector_from_params(p, d)));
        }
    }
    return best;
}

EqualityReport verify_covariant_equality(const FiniteChannel& ch, double tol, unsigned seed) {
    EqualityReport rep;
    rep.chi = chi_capacity_bruteforce(ch, ch.dim * ch.dim, 16, seed).chi;
    Eigen::MatrixXcd max_mixed =
        Eigen::MatrixXcd::Identity(ch.dim, ch.dim) / static_cast<double>(ch.dim);
    rep.max_minus_min = vn_entropy(symcap::apply(ch, max_mixed)) - min_output_entropy(ch, 16, seed).entropy;
    rep.gap = rep.chi - rep.max_minus_min;
    rep.verified = std::abs(rep.gap) <= tol;
    return rep;
}

AdditivityReport additivity_spotcheck(const FiniteChannel& ch, int samples, unsigned seed) {
    const int d = ch.dim;
    if (d * d > 16) throw std::invalid_argument("additivity_spotcheck: pair dimension too large");
    FiniteChannel pair;
    pair.dim = d * d;
    for (const auto& a : ch.kraus)
        for (const auto& b : ch.kraus) pair.kraus.push_back(Eigen::kroneckerProduct(a, b).eval());

    AdditivityReport rep;
    rep.single_min_entropy = min_output_entropy(ch, 16, seed).entropy;
    rep.pair_min_entropy = min_output_entropy(pair, samples, seed).entropy;
    rep.gap = rep.pair_min_entropy - 2.0 * rep.single_min_entropy;
    rep.no_violation = rep.gap >= -1e-6;
    return rep;
}

}  // namespace symcap
