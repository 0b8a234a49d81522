#pragma once

#include <functional>

#include "wjcm/errors.hpp"

namespace wjcm {

// One-dimensional angular integrand. Phi integrands are treated as periodic
// on [0, 2pi]; Theta integrands live on [0, pi] and are integrated against
// the spherical weight sin(theta), which the integrator supplies itself.
enum class AngleDomain { Phi, Theta };

struct IntegrandHandle {
    std::function<double(double)> evaluator;
    AngleDomain domain = AngleDomain::Phi;
};

// Composite trapezoid rule on [0, 2pi] with panel doubling. For smooth
// periodic integrands the trapezoid rule converges spectrally, so the
// doubling loop terminates after a handful of refinements.
double integrate_phi(const std::function<double(double)>& f, double tol = 1e-10);

// Adaptive Gauss-Legendre on [0, pi]; integrates f(theta) sin(theta) dtheta.
double integrate_theta(const std::function<double(double)>& f, double tol = 1e-10);

double integrate(const IntegrandHandle& handle, double tol = 1e-10);

// Closed form of the integral of (c1 sin x + c2 cos x)^k over one period:
// zero for odd k, and 2pi (2m)! / (4^m (m!)^2) (c1^2+c2^2)^m for k = 2m.
double trig_power_integral(double c1, double c2, int k);

// Closed form of the integral of sin^(m-1) x over [0, pi], expressed through
// the Beta function: pi / (2^(m-1) m B((m+1)/2, (m+1)/2)).
double sin_power_integral(int m);

// ln B(a, b) for a, b > 0 via log-Gamma.
double log_beta(double a, double b);

} // namespace wjcm
