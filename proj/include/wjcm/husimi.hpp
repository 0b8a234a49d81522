#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wjcm/core.hpp"

namespace wjcm {

// Point on the Bloch sphere, theta in [0, pi], phi in [0, 2pi).
struct SphericalPoint {
    SphericalPoint(double theta_, double phi_) : theta(theta_), phi(phi_) {
        if (!(theta >= 0.0 && theta <= std::numbers::pi))
            throw std::domain_error("SphericalPoint: theta outside [0, pi]");
        if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi))
            throw std::domain_error("SphericalPoint: phi outside [0, 2pi)");
    }
    double theta;
    double phi;
};

// Projection of the Bloch vector onto the spin coherent state direction:
//   beta = h cos(theta) + (b cos(phi) + c sin(phi)) sin(theta), |beta| <= eta.
inline double beta_value(const BlochVector& v, const SphericalPoint& p) noexcept {
    return v.h * std::cos(p.theta) +
           (v.b * std::cos(p.phi) + v.c * std::sin(p.phi)) * std::sin(p.theta);
}

// Atomic Husimi Q-function over the sphere, (1 + beta)/(4pi); non-negative
// whenever eta <= 1 and normalized against sin(theta) dtheta dphi.
inline double q_value(const BlochVector& v, const SphericalPoint& p) noexcept {
    return (1.0 + beta_value(v, p)) / (4.0 * std::numbers::pi);
}

// Marginal over phi: (1 + h cos(theta))/2.
inline double q_theta(const BlochVector& v, double theta) noexcept {
    return 0.5 * (1.0 + v.h * std::cos(theta));
}

// Marginal over theta with the sin(theta) weight:
//   (1 + (pi/4)(b cos(phi) + c sin(phi))) / (2pi).
inline double q_phi(const BlochVector& v, double phi) noexcept {
    return (1.0 + 0.25 * std::numbers::pi * (v.b * std::cos(phi) + v.c * std::sin(phi))) /
           (2.0 * std::numbers::pi);
}

// Closures of state for the integration oracles: the Bloch vector and one
// fixed angle baked into a single-variable evaluator.
inline auto q_slice_phi(const BlochVector& v, double theta) {
    return [v, theta](double phi) { return q_value(v, SphericalPoint(theta, phi)); };
}
inline auto q_slice_theta(const BlochVector& v, double phi) {
    return [v, phi](double theta) { return q_value(v, SphericalPoint(theta, phi)); };
}

} // namespace wjcm
