#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>

namespace stabinfer {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;
using Complex = std::complex<double>;

/// Stability region selector: open unit disk (discrete) or open left
/// half-plane (continuous).
enum class TimeDomain { Discrete, Continuous };

std::string to_string(TimeDomain domain);
std::optional<TimeDomain> time_domain_from_string(std::string_view text);

}  // namespace stabinfer
