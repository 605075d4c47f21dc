#include "symcap/json_io.hpp"

#include <cstdio>

namespace symcap {

using nlohmann::json;

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

json json_number(double x) {
    // Round-trip through the fixed format so emitted JSON is byte-stable.
    return json::parse(format_number(x));
}

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(json_number(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a nested array matrix");
    const auto rows = j.size();
    const auto cols = j[0].size();
    Eigen::MatrixXd m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (size_t k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
    }
    return m;
}

namespace {

Ordering ordering_from_string(const std::string& s) {
    if (s == "interleaved") return Ordering::Interleaved;
    if (s == "blocked") return Ordering::Blocked;
    throw std::invalid_argument("ordering must be \"interleaved\" or \"blocked\"");
}

}  // namespace

GaussianChannel channel_from_json(const json& j) {
    if (j.contains("squeezed_noise")) {
        if (j.contains("K") || j.contains("mu"))
            throw std::invalid_argument("squeezed_noise shorthand excludes explicit K/mu");
        const auto& p = j.at("squeezed_noise");
        return squeezed_noise_channel(
            {p.at("k").get<double>(), p.at("mu1").get<double>(), p.at("mu2").get<double>()});
    }
    int modes = j.at("modes").get<int>();
    Ordering ord = ordering_from_string(j.value("ordering", "interleaved"));
    Eigen::MatrixXd k = matrix_from_json(j.at("K"));
    Eigen::MatrixXd mu = matrix_from_json(j.at("mu"));
    if (k.rows() != 2 * modes || k.cols() != 2 * modes || mu.rows() != 2 * modes ||
        mu.cols() != 2 * modes)
        throw std::invalid_argument("channel matrices must be 2s x 2s");
    GaussianChannel ch;
    ch.layout = ModeLayout{modes, Ordering::Interleaved};
    ch.K = reorder(k, ord, Ordering::Interleaved);
    ch.mu = reorder(mu, ord, Ordering::Interleaved);
    return ch;
}

CovarianceMatrix covariance_from_json(const json& j) {
    int modes = j.at("modes").get<int>();
    Ordering ord = ordering_from_string(j.value("ordering", "interleaved"));
    Eigen::MatrixXd a = matrix_from_json(j.at("alpha"));
    if (a.rows() != 2 * modes || a.cols() != 2 * modes)
        throw std::invalid_argument("covariance must be 2s x 2s");
    return CovarianceMatrix::centered(reorder(a, ord, Ordering::Interleaved));
}

const char* gauge_status_name(GaugeStatus s) {
    switch (s) {
        case GaugeStatus::CovariantSameJ: return "CovariantSameJ";
        case GaugeStatus::CovariantPair: return "CovariantPair";
        case GaugeStatus::Contravariant: return "Contravariant";
        case GaugeStatus::NotForCanonicalJB: return "NotForCanonicalJB";
        default: return "Undetermined";
    }
}

json verdict_to_json(const GaugeVerdict& v) {
    json out;
    out["status"] = gauge_status_name(v.status);
    if (v.J_A) out["J_A"] = matrix_to_json(v.J_A->entries);
    if (v.J_B) out["J_B"] = matrix_to_json(v.J_B->entries);
    out["residuals"] = {
        {"commutation", json_number(v.commutation_residual)},
        {"mu_commutation", json_number(v.mu_residual)},
        {"witness_symmetry", json_number(v.symmetry_residual)},
        {"witness_min_eigenvalue", json_number(v.min_witness_eigenvalue)},
    };
    return out;
}

json report_to_json(const CapacityReport& r, const std::string& units) {
    double scale = units == "bits" ? 1.0 / std::log(2.0) : 1.0;
    json out;
    out["E"] = json_number(r.E);
    out["units"] = units;
    if (r.capacity) out["capacity"] = json_number(*r.capacity * scale);
    out["S_max"] = json_number(r.S_max * scale);
    out["S_min"] = json_number(r.S_min * scale);
    out["upper_bound"] = json_number(r.upper_bound * scale);
    out["threshold_ok"] = r.threshold_ok;
    out["threshold_margin"] = json_number(r.threshold_margin);
    out["alpha_opt"] = matrix_to_json(r.alpha_opt.entries);
    if (r.ensemble_covariance) out["ensemble_covariance"] = matrix_to_json(*r.ensemble_covariance);
    out["J"] = matrix_to_json(r.J_used.entries);
    out["conditions"] = {
        {"maximizer_found", r.conditions.maximizer_found},
        {"minimizer_is_vacuum", r.conditions.minimizer_is_vacuum},
        {"threshold", r.conditions.threshold_ok},
        {"additivity",
         r.conditions.additivity == ConditionReport::Additivity::ByTheory ? "by theory" : "unknown"},
    };
    out["optimizer"] = {
        {"evaluations", r.diagnostics.evaluations},
        {"converged", r.diagnostics.converged},
        {"constraint_residual", json_number(r.diagnostics.constraint_residual)},
    };
    return out;
}

}  // namespace symcap
