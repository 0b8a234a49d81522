#pragma once

#include <utility>

#include "wjcm/core.hpp"
#include "wjcm/errors.hpp"

namespace wjcm {

// How to evaluate a Wehrl-entropy quantity. Quadrature (of the defining
// integral) is always available and is the authoritative route; closed forms
// exist only at the special angles listed per function; series expansions
// converge only while the Q-function stays clear of zero.
enum class WehrlMethod { ClosedForm, Series, Quadrature };

// Truncation control for the series routes.
struct SeriesPolicy {
    double tol = 1e-12;             // relative tail tolerance
    int max_terms = 400;            // cap on outer-series terms
    double fallback_threshold = 0.9; // max |beta| beyond which series routes refuse

    void validate() const;
};

// Entropy deficit of a raised-cosine distribution, the closed form of the
// series sum_{n>=0} (2n)!/(4^{n+1} ((n+1)!)^2) xi^{n+1}:
//   D(xi) = 1 - sqrt(1-xi) + ln((1+sqrt(1-xi))/2),  xi in [0, 1].
// Evaluated in a cancellation-free arrangement.
double entropy_deficit(double xi);

// Same quantity summed term by term (power-series route).
double entropy_deficit_series(double xi, const SeriesPolicy& policy = {});

// xi at the fully polarized equator state, pi^2/16.
double xi_max() noexcept;

// Exact span constants, computed from their defining expressions at startup.
// The rounded values behind the literal flags are 0.17 and 0.15.
double w_phi_deficit_max() noexcept;    // omega = D(pi^2/16) ~= 0.169665
double z_half_pi_deficit_max() noexcept; // rho = D(1)/2      ~= 0.153426

// Marginal Wehrl entropy of the theta marginal, closed form
//   W_theta = ln(2 sqrt e) + (1-h)^2/(4h) ln(1-h) - (1+h)^2/(4h) ln(1+h),
// with the removable singularity at h = 0 handled by its even power series.
// Range [1/2, ln 2].
double w_theta(double h);

// Marginal Wehrl entropy of the phi marginal; depends on (b, c) only through
// xi = pi^2 (b^2+c^2)/16. Closed form ln(2pi) - D(xi); the Series method sums
// the power series; Quadrature integrates -Q_phi ln Q_phi directly.
// Range [ln(2pi) - omega, ln(2pi)].
double w_phi(double b, double c, WehrlMethod method = WehrlMethod::ClosedForm,
             const SeriesPolicy& policy = {}, double quad_tol = 1e-10);

// Affine rescalings onto [0, ln 2] so the marginal entropies can be read on
// the information-entropy scale.
double rescale_w_theta(double w);

// Default maps [ln(2pi)-omega, ln(2pi)] onto [0, ln2] using the exact omega.
// paper_literal reproduces the printed rescaling, which uses the rounded
// constant 0.17 in both places and therefore does not reach 0 at the lower
// endpoint; it is kept for faithful comparison output.
double rescale_w_phi(double w, bool paper_literal = false);

// Density Wehrl entropy at fixed theta: -integral of Q_a ln Q_a dphi over
// [0, 2pi]. Closed forms exist at theta = 0, pi/2, pi; the Series method
// evaluates the double-sum expansion in (h cos theta) and sin^2 theta (b^2+c^2),
// valid while |h cos theta| + sin(theta) sqrt(b^2+c^2) stays below the policy
// threshold.
double z_theta(const BlochVector& v, double theta,
               WehrlMethod method = WehrlMethod::Quadrature,
               const SeriesPolicy& policy = {}, double quad_tol = 1e-10);

// Density Wehrl entropy at fixed phi: -integral of Q_a ln Q_a sin(theta) dtheta.
// Depends on the state only through h and eps = b cos(phi) + c sin(phi).
// Closed form exists at eps = 0; the Series method evaluates the triple-sum
// expansion (inner sums carried as their Beta-function closed forms), valid
// while sqrt(h^2 + eps^2) stays below the policy threshold.
double z_phi(const BlochVector& v, double phi,
             WehrlMethod method = WehrlMethod::Quadrature,
             const SeriesPolicy& policy = {}, double quad_tol = 1e-10);

// Both sides of the pole identity Z_{theta=0} + Z_{theta=pi} = H(h) + ln(2pi).
std::pair<double, double> z_theta_sum_identity(const BlochVector& v);

// Equator value, closed form (ln(4pi) - D(b^2+c^2))/2... precisely
//   Z_{theta=pi/2} = ln(4pi)/2 - D(b^2+c^2)/2,  range [ln(4pi)/2 - rho, ln(4pi)/2].
double z_theta_half_pi(double b, double c);

// Rescaled equator entropy on [0, ln 2]; exact rho by default, the printed
// 0.15 behind paper_literal.
double rescaled_z_half_pi(double b, double c, bool paper_literal = false);

} // namespace wjcm
