#include "symcap/capacity.hpp"

#include <cmath>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "symcap/simplex.hpp"

namespace symcap {

namespace {

double softplus(double t) {
    return t > 30.0 ? t : std::log1p(std::exp(t));
}

// Output entropy without re-validating the input (valid by construction).
double output_entropy(const GaussianChannel& ch, const Eigen::MatrixXd& alpha) {
    Eigen::MatrixXd out = ch.K.transpose() * alpha * ch.K + ch.mu;
    double s = 0.0;
    for (double nu : symplectic_eigenvalues(out)) s += g_function(std::max(nu, 0.5) - 0.5);
    return s;
}

// Williamson-style parameterization of the constraint surface Sp(alpha eps) = E:
// theta = (t_1..t_s, q_1..q_{s(2s+1)}) with S = exp(Delta Q), Q symmetric, and
// nu_j = 1/2 + softplus(t_j) rescaled onto the energy budget. Returns an empty
// optional when the vacuum of this S already exceeds the budget.
struct Parameterization {
    int modes;
    Eigen::MatrixXd delta;
    Eigen::MatrixXd epsilon;
    double E;

    int dim() const { return modes + modes * (2 * modes + 1); }

    std::optional<Eigen::MatrixXd> covariance(const Eigen::VectorXd& theta) const {
        const int s = modes, n = 2 * modes;
        Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
        int at = s;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                q(i, j) = q(j, i) = theta(at++);
            }
        Eigen::MatrixXd sp = (delta * q).exp();

        // Per-mode energy weights c_j = Sp(S P_j S^t eps); energy is linear in nu.
        Eigen::VectorXd c(s);
        for (int j = 0; j < s; ++j) {
            Eigen::MatrixXd block = sp.middleCols(2 * j, 2) * sp.middleCols(2 * j, 2).transpose();
            c(j) = (block * epsilon).trace();
        }
        double vac = 0.5 * c.sum();
        if (vac > E + 1e-12 * (1.0 + E)) return std::nullopt;

        Eigen::VectorXd excess(s);
        double wsum = 0.0;
        for (int j = 0; j < s; ++j) {
            excess(j) = softplus(theta(j));
            wsum += excess(j) * c(j);
        }
        Eigen::VectorXd nu(s);
        if (wsum > 1e-12) {
            double gamma = (E - vac) / wsum;
            for (int j = 0; j < s; ++j) nu(j) = 0.5 + gamma * excess(j);
        } else {
            for (int j = 0; j < s; ++j) nu(j) = 0.5 + (E - vac) / (s * c(j));
        }
        Eigen::VectorXd d(n);
        for (int j = 0; j < s; ++j) d(2 * j) = d(2 * j + 1) = nu(j);
        Eigen::MatrixXd alpha = sp * d.asDiagonal() * sp.transpose();
        return 0.5 * (alpha + alpha.transpose().eval());
    }
};

}  // namespace

MaxEntropyResult max_output_entropy(const GaussianChannel& ch, const EnergyForm& form,
                                    unsigned seed) {
    auto chk = validate_channel(ch);
    if (!chk.valid) throw std::invalid_argument("max_output_entropy: invalid channel");
    const int s = ch.layout.modes;
    double e_min = minimal_energy(form.epsilon);
    if (form.budget < e_min - 1e-9 * (1.0 + e_min))
        throw std::invalid_argument("max_output_entropy: energy budget below the minimal vacuum energy");

    Parameterization par{s, symplectic_form(ModeLayout{s, Ordering::Interleaved}), form.epsilon,
                         form.budget};
    auto objective = [&](const Eigen::VectorXd& theta) {
        auto alpha = par.covariance(theta);
        if (!alpha) return 1e6;  // vacuum over budget for this S
        return -output_entropy(ch, *alpha);
    };

    SimplexOptions opts;
    opts.max_evaluations = 20000;
    opts.improvement_tol = 1e-12;
    opts.patience = 50;
    opts.restarts = 4;

    SimplexResult best;
    best.value = std::numeric_limits<double>::infinity();
    std::vector<unsigned> seeds = {11, 23, 37, 41, 53, 67, 79, 97};
    for (auto& sd : seeds) sd += seed;
    for (size_t i = 0; i < seeds.size(); ++i) {
        Eigen::VectorXd x0 = Eigen::VectorXd::Zero(par.dim());
        if (i > 0) {
            std::mt19937 rng(seeds[i]);
            std::normal_distribution<double> dist(0.0, 0.4);
            for (int k = 0; k < x0.size(); ++k) x0(k) = dist(rng);
        }
        SimplexResult res = nelder_mead(objective, x0, opts);
        res.evaluations += best.evaluations;
        if (res.value < best.value) {
            res.converged = res.converged || best.converged;
            best = res;
        } else {
            best.evaluations = res.evaluations;
        }
    }

    auto alpha = par.covariance(best.x);
    if (!alpha) throw std::runtime_error("max_output_entropy: optimizer left the feasible set");
    MaxEntropyResult r;
    r.S_max = -best.value;
    r.alpha_opt = CovarianceMatrix::centered(*alpha);
    r.diagnostics.evaluations = best.evaluations;
    r.diagnostics.converged = best.converged;
    r.diagnostics.constraint_residual =
        std::abs((*alpha * form.epsilon).trace() - form.budget);
    return r;
}

double min_output_entropy_gaussian(const GaussianChannel& ch, const ComplexStructure& j) {
    return entropy(apply(ch, vacuum_covariance(j)));
}

ThresholdCheck threshold_check(const CovarianceMatrix& alpha_opt, const ComplexStructure& j,
                               double tol) {
    Eigen::MatrixXd a = reorder(alpha_opt.entries, alpha_opt.layout.ordering, Ordering::Interleaved);
    Eigen::MatrixXd vac = vacuum_covariance(j).entries;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a - vac);
    ThresholdCheck c;
    c.min_eigenvalue = es.eigenvalues()(0);
    c.ok = c.min_eigenvalue >= -tol * (1.0 + a.norm());
    return c;
}

Eigen::MatrixXd ensemble_covariance(const CovarianceMatrix& alpha_opt, const ComplexStructure& j) {
    auto chk = threshold_check(alpha_opt, j);
    if (!chk.ok) throw std::invalid_argument("ensemble_covariance: threshold condition violated");
    Eigen::MatrixXd a = reorder(alpha_opt.entries, alpha_opt.layout.ordering, Ordering::Interleaved);
    return a - vacuum_covariance(j).entries;
}

CapacityReport capacity(const GaussianChannel& ch, const EnergyForm& form,
                        const ComplexStructure& j, unsigned seed) {
    MaxEntropyResult max_res = max_output_entropy(ch, form, seed);
    CapacityReport rep;
    rep.E = form.budget;
    rep.S_max = max_res.S_max;
    rep.alpha_opt = max_res.alpha_opt;
    rep.diagnostics = max_res.diagnostics;
    rep.J_used = j;
    rep.S_min = min_output_entropy_gaussian(ch, j);
    rep.upper_bound = rep.S_max - rep.S_min;

    auto thr = threshold_check(max_res.alpha_opt, j);
    rep.threshold_ok = thr.ok;
    rep.threshold_margin = thr.min_eigenvalue;

    rep.conditions.maximizer_found = max_res.diagnostics.converged;
    bool gauge_ok = check_gauge_covariant_same_J(ch, j).valid;
    if (!gauge_ok) {
        auto chk = validate_channel(ch);
        if (!chk.degenerate_K) {
            gauge_ok = covariance_criterion(ch, j, false).holds ||
                       covariance_criterion(ch, j, true).holds;
        }
    }
    rep.conditions.minimizer_is_vacuum = gauge_ok;
    rep.conditions.threshold_ok = thr.ok;
    rep.conditions.additivity = gauge_ok ? ConditionReport::Additivity::ByTheory
                                         : ConditionReport::Additivity::Unknown;

    if (rep.conditions.maximizer_found && gauge_ok && thr.ok) {
        rep.capacity = rep.upper_bound;
        rep.ensemble_covariance = ensemble_covariance(max_res.alpha_opt, j);
    }
    return rep;
}

CapacityReport capacity(const GaussianChannel& ch, const EnergyForm& form, unsigned seed) {
    return capacity(ch, form, complex_structure_from_form(ch.mu), seed);
}

SqueezedNoiseSolution squeezed_closed_form(const SqueezedNoiseParams& p, double E) {
    squeezed_noise_channel(p);  // parameter validation
    SqueezedNoiseSolution sol;
    sol.eta = std::sqrt(p.mu2 / p.mu1);
    double inv = 1.0 / sol.eta;
    double k2 = p.k * p.k;
    sol.E_threshold = 0.5 * (sol.eta + inv +
                             std::abs(sol.eta - inv) * (1.0 + 2.0 / k2 * std::sqrt(p.mu1 * p.mu2)));
    sol.alpha1_opt = E / 2.0 + (p.mu2 - p.mu1) / (2.0 * k2);
    sol.alpha2_opt = E / 2.0 - (p.mu2 - p.mu1) / (2.0 * k2);
    sol.S_max = g_function(0.5 * (k2 * E + p.mu1 + p.mu2 - 1.0));
    sol.S_min = g_function(std::sqrt(p.mu1 * p.mu2) + (k2 - 1.0) / 2.0);
    if (E >= sol.E_threshold - 1e-12) sol.capacity = sol.S_max - sol.S_min;
    return sol;
}

std::vector<CapacityReport> capacity_sweep(const GaussianChannel& ch,
                                           const Eigen::MatrixXd& epsilon,
                                           const std::vector<double>& energies,
                                           unsigned seed) {
    if (energies.empty()) throw std::invalid_argument("capacity_sweep: empty energy grid");
    for (size_t i = 1; i < energies.size(); ++i)
        if (energies[i] < energies[i - 1])
            throw std::invalid_argument("capacity_sweep: energy grid must ascend");
    ComplexStructure j = complex_structure_from_form(ch.mu);
    std::vector<CapacityReport> out;
    out.reserve(energies.size());
    for (double e : energies) out.push_back(capacity(ch, EnergyForm{epsilon, e}, j, seed));
    return out;
}

}  // namespace symcap
