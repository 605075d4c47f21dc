// symcap: constrained classical capacity of multimode Gaussian channels.
//
// Exit codes: 0 success, 1 mathematical failure or invalid object,
// 2 I/O or parse failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symcap/finite.hpp"
#include "symcap/json_io.hpp"

namespace {

using nlohmann::json;
using namespace symcap;

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitIo = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw IoError("parse error in " + path + ": " + e.what());
    }
    return j;
}

double default_tolerance() {
    if (const char* env = std::getenv("SYMCAP_TOL")) return std::atof(env);
    return kDefaultTol;
}

void emit(const json& out, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw IoError("cannot write " + out_path);
    f << out.dump(2) << "\n";
}

Eigen::MatrixXd load_epsilon(const std::string& spec, int dim) {
    if (spec.empty() || spec == "identity") return Eigen::MatrixXd::Identity(dim, dim);
    Eigen::MatrixXd eps = matrix_from_json(load_json(spec));
    if (eps.rows() != dim || eps.cols() != dim)
        throw std::invalid_argument("epsilon dimension does not match the channel");
    return eps;
}

std::vector<double> parse_sweep(const std::string& spec) {
    double a = 0, b = 0;
    int n = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    if (!(in >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1)
        throw IoError("--sweep expects A:B:N with N >= 1");
    std::vector<double> grid;
    for (int i = 0; i < n; ++i)
        grid.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
    return grid;
}

int cmd_validate(const std::string& spec_path, double tol) {
    json spec = load_json(spec_path);
    GaussianChannel ch = channel_from_json(spec);
    ChannelCheck chk = validate_channel(ch, tol);
    json out;
    out["channel"] = {
        {"valid", chk.valid},
        {"min_cp_eigenvalue", json_number(chk.min_cp_eigenvalue)},
        {"degenerate_K", chk.degenerate_K},
    };
    bool all_valid = chk.valid;
    if (spec.contains("state")) {
        CovarianceMatrix alpha = covariance_from_json(spec.at("state"));
        StateCheck sc = validate_state(alpha, tol);
        out["state"] = {
            {"valid", sc.valid},
            {"min_symplectic_eigenvalue", json_number(sc.min_symplectic_eigenvalue)},
        };
        all_valid = all_valid && sc.valid;
    }
    emit(out, "");
    return all_valid ? kExitOk : kExitMath;
}

int cmd_capacity(const std::string& spec_path, const std::string& eps_spec, double energy,
                 const std::string& sweep, const std::string& units, unsigned seed,
                 const std::string& out_path) {
    GaussianChannel ch = channel_from_json(load_json(spec_path));
    Eigen::MatrixXd eps = load_epsilon(eps_spec, ch.layout.dim());
    double scale = units == "bits" ? 1.0 / std::log(2.0) : 1.0;
    if (!sweep.empty()) {
        auto grid = parse_sweep(sweep);
        auto reports = capacity_sweep(ch, eps, grid, seed);
        std::ostringstream csv;
        csv << "E,capacity_" << units << ",S_max,S_min,threshold_ok,converged,iterations\n";
        for (const auto& r : reports) {
            csv << format_number(r.E) << ","
                << (r.capacity ? format_number(*r.capacity * scale) : "") << ","
                << format_number(r.S_max * scale) << "," << format_number(r.S_min * scale) << ","
                << (r.threshold_ok ? 1 : 0) << "," << (r.diagnostics.converged ? 1 : 0) << ","
                << r.diagnostics.evaluations << "\n";
        }
        if (out_path.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream f(out_path);
            if (!f) throw IoError("cannot write " + out_path);
            f << csv.str();
        }
        return kExitOk;
    }
    CapacityReport rep = capacity(ch, EnergyForm{eps, energy}, seed);
    emit(report_to_json(rep, units), out_path);
    return kExitOk;
}

int cmd_classify(const std::string& spec_path) {
    GaussianChannel ch = channel_from_json(load_json(spec_path));
    emit(verdict_to_json(classify(ch)), "");
    return kExitOk;
}

int cmd_finite_check(int dim, double p, int starts, unsigned seed) {
    FiniteChannel ch = depolarizing_channel(dim, p);
    EqualityReport eq = verify_covariant_equality(ch, 1e-3, seed);
    AdditivityReport ad = additivity_spotcheck(ch, starts, seed);
    json out;
    out["dim"] = dim;
    out["p"] = json_number(p);
    out["chi_capacity"] = json_number(eq.chi);
    out["max_minus_min"] = json_number(eq.max_minus_min);
    out["equality_gap"] = json_number(eq.gap);
    out["equality_verified"] = eq.verified;
    out["additivity"] = {
        {"single_min_entropy", json_number(ad.single_min_entropy)},
        {"pair_min_entropy", json_number(ad.pair_min_entropy)},
        {"gap", json_number(ad.gap)},
        {"no_violation", ad.no_violation},
    };
    emit(out, "");
    return eq.verified && ad.no_violation ? kExitOk : kExitMath;
}

int cmd_entropy(const std::string& spec_path, const std::string& units) {
    json spec = load_json(spec_path);
    CovarianceMatrix alpha =
        spec.contains("state") ? covariance_from_json(spec.at("state")) : covariance_from_json(spec);
    double scale = units == "bits" ? 1.0 / std::log(2.0) : 1.0;
    json out;
    out["entropy"] = json_number(entropy(alpha) * scale);
    out["units"] = units;
    emit(out, "");
    return kExitOk;
}

int cmd_threshold(const std::string& spec_path) {
    json spec = load_json(spec_path);
    if (!spec.contains("squeezed_noise"))
        throw std::invalid_argument("threshold requires the squeezed_noise shorthand");
    const auto& p = spec.at("squeezed_noise");
    SqueezedNoiseParams params{p.at("k").get<double>(), p.at("mu1").get<double>(),
                               p.at("mu2").get<double>()};
    SqueezedNoiseSolution sol = squeezed_closed_form(params, 0.0);
    json out;
    out["E_threshold"] = json_number(sol.E_threshold);
    out["eta"] = json_number(sol.eta);
    emit(out, "");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constrained classical capacity toolkit for Gaussian quantum channels"};
    app.require_subcommand(1);

    std::string spec_path, eps_spec = "identity", sweep, units = "nats", out_path;
    double energy = -1.0, p = 0.5;
    double tol = default_tolerance();
    unsigned seed = 0;
    int dim = 2, starts = 200;

    auto* validate = app.add_subcommand("validate", "Validate a channel (and optional state) spec");
    validate->add_option("spec", spec_path, "JSON channel spec")->required();
    validate->add_option("--tol", tol, "residual tolerance");

    auto* cap = app.add_subcommand("capacity", "Constrained capacity of a Gaussian channel");
    cap->add_option("spec", spec_path, "JSON channel spec")->required();
    cap->add_option("--epsilon", eps_spec, "energy form: JSON file or 'identity'");
    cap->add_option("--energy", energy, "energy budget E");
    cap->add_option("--sweep", sweep, "energy grid A:B:N (CSV output)");
    cap->add_option("--units", units, "nats or bits")->check(CLI::IsMember({"nats", "bits"}));
    cap->add_option("--seed", seed, "multi-start seed offset");
    cap->add_option("--out", out_path, "output file (default stdout)");

    auto* classify_cmd = app.add_subcommand("classify", "Gauge covariance classification");
    classify_cmd->add_option("spec", spec_path, "JSON channel spec")->required();

    auto* finite = app.add_subcommand("finite-check",
                                      "Brute-force capacity equality for depolarizing channels");
    finite->add_option("--dim", dim, "dimension (2 or 3)")->check(CLI::Range(2, 3));
    finite->add_option("--p", p, "depolarizing probability")->check(CLI::Range(0.0, 1.0));
    finite->add_option("--starts", starts, "additivity search starts");
    finite->add_option("--seed", seed, "multi-start seed offset");

    auto* ent = app.add_subcommand("entropy", "Entropy of a covariance matrix");
    ent->add_option("spec", spec_path, "JSON state spec")->required();
    ent->add_option("--units", units, "nats or bits")->check(CLI::IsMember({"nats", "bits"}));

    auto* thr = app.add_subcommand("threshold", "Squeezed-noise threshold energy");
    thr->add_option("spec", spec_path, "JSON squeezed_noise spec")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(spec_path, tol);
        if (cap->parsed()) {
            if (sweep.empty() && energy <= 0.0)
                throw std::invalid_argument("capacity requires --energy > 0 or --sweep");
            return cmd_capacity(spec_path, eps_spec, energy, sweep, units, seed, out_path);
        }
        if (classify_cmd->parsed()) return cmd_classify(spec_path);
        if (finite->parsed()) return cmd_finite_check(dim, p, starts, seed);
        if (ent->parsed()) return cmd_entropy(spec_path, units);
        if (thr->parsed()) return cmd_threshold(spec_path);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
    return kExitOk;
}
