#pragma once

#include <string>

#include <json.hpp>

#include "symcap/capacity.hpp"

namespace symcap {

// Fixed 12-significant-digit formatting so identical runs print identical JSON.
std::string format_number(double x);
nlohmann::json json_number(double x);

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd matrix_from_json(const nlohmann::json& j);

// Channel spec: {"modes": s, "ordering": "interleaved"|"blocked",
//                "K": [[...]], "mu": [[...]]}
// or the shorthand {"squeezed_noise": {"k":..., "mu1":..., "mu2":...}}.
// Matrices are converted to interleaved coordinates on load.
GaussianChannel channel_from_json(const nlohmann::json& j);

// Optional covariance block: {"modes": s, "ordering": ..., "alpha": [[...]]}.
CovarianceMatrix covariance_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const GaugeVerdict& v);
nlohmann::json report_to_json(const CapacityReport& r, const std::string& units);

const char* gauge_status_name(GaugeStatus s);

}  // namespace symcap
