#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wjcm {

inline constexpr double kEndpointSlack = 1e-12;

// Two-outcome (binary) entropy in nats as a function of the expectation
// value x in [-1, 1]:
//   H(x) = -(1+x)/2 ln((1+x)/2) - (1-x)/2 ln((1-x)/2).
// Evaluated in the log1p form H = ln2 - [(1+x)ln(1+x) + (1-x)ln(1-x)]/2,
// which is exact at x = 0 and stable at the endpoints. Arguments within
// 1e-12 of +-1 are clamped so 0 ln 0 = 0.
inline double binary_entropy(double x) {
    if (!(std::abs(x) <= 1.0 + kEndpointSlack))
        throw std::domain_error("binary_entropy: argument outside [-1, 1]");
    if (std::abs(x) >= 1.0) return 0.0;
    return std::numbers::ln2 - 0.5 * ((1.0 + x) * std::log1p(x) + (1.0 - x) * std::log1p(-x));
}

// von Neumann entropy of a qubit with Bloch length eta.
inline double von_neumann(double eta_val) {
    if (!(eta_val >= 0.0 && eta_val <= 1.0 + kEndpointSlack))
        throw std::domain_error("von_neumann: eta outside [0, 1]");
    return binary_entropy(eta_val);
}

// Information entropy of a single Pauli measurement; same kernel, full range.
inline double info_entropy(double x) { return binary_entropy(x); }

} // namespace wjcm
