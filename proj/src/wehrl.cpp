#include "wjcm/wehrl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wjcm/entropies.hpp"
#include "wjcm/husimi.hpp"
#include "wjcm/quadrature.hpp"

namespace wjcm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
const double kLn2Pi = std::log(2.0 * kPi);
const double kLn4Pi = std::log(4.0 * kPi);

// 0 ln 0 = 0 convention at entropy integrand zeros.
inline double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

inline double neg_q_ln_q(double q) { return -xlnx(q); }

// Groups with the same total power can vanish identically (parity), so a
// single small group is not proof of convergence; require a short run.
constexpr int kQuietGroups = 3;

} // namespace

void SeriesPolicy::validate() const {
    if (!(tol > 0.0)) throw std::invalid_argument("SeriesPolicy: tol must be positive");
    if (max_terms < 10) throw std::invalid_argument("SeriesPolicy: max_terms must be >= 10");
    if (!(fallback_threshold > 0.0 && fallback_threshold <= 1.0))
        throw std::invalid_argument("SeriesPolicy: fallback_threshold must be in (0, 1]");
}

double entropy_deficit(double xi) {
    if (!(xi >= -1e-12 && xi <= 1.0 + 1e-12))
        throw std::domain_error("entropy_deficit: xi outside [0, 1]");
    xi = std::clamp(xi, 0.0, 1.0);
    const double s = std::sqrt(1.0 - xi);
    // 1 - sqrt(1-xi) rewritten as xi/(1+s); ln((1+s)/2) as log1p of a small
    // ratio. Both forms stay fully accurate as xi -> 0.
    return xi / (1.0 + s) + std::log1p(-xi / (2.0 * (1.0 + s)));
}

double entropy_deficit_series(double xi, const SeriesPolicy& policy) {
    policy.validate();
    if (!(xi >= -1e-12 && xi <= 1.0 + 1e-12))
        throw std::domain_error("entropy_deficit_series: xi outside [0, 1]");
    xi = std::clamp(xi, 0.0, 1.0);
    if (xi == 0.0) return 0.0;
    double term = 0.25 * xi; // n = 0
    double acc = term;
    for (int n = 1; n < policy.max_terms; ++n) {
        term *= xi * (2.0 * n) * (2.0 * n - 1.0) / (4.0 * (n + 1.0) * (n + 1.0));
        acc += term;
        if (term <= policy.tol * acc) return acc;
    }
    throw SeriesError("entropy_deficit_series: tolerance not reached in " +
                      std::to_string(policy.max_terms) + " terms (xi = " + std::to_string(xi) +
                      ")");
}

double xi_max() noexcept { return kPi * kPi / 16.0; }

double w_phi_deficit_max() noexcept {
    static const double omega = entropy_deficit(xi_max());
    return omega;
}

double z_half_pi_deficit_max() noexcept {
    static const double rho = 0.5 * entropy_deficit(1.0);
    return rho;
}

double w_theta(double h) {
    if (!(std::abs(h) <= 1.0 + 1e-12)) throw std::domain_error("w_theta: |h| > 1");
    h = std::clamp(h, -1.0, 1.0);
    if (std::abs(h) <= 0.5) {
        // Even series ln2 - sum_k h^(2k) / ((2k-1) 2k (2k+1)) across the
        // removable singularity at h = 0.
        const double x = h * h;
        double term = x / 6.0;
        double acc = term;
        for (int k = 1; term > 1e-18; ++k) {
            term *= x * (2.0 * k - 1.0) * (2.0 * k) / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
            acc += term;
        }
        return kLn2 - acc;
    }
    // grouped so the deficit cancels exactly at |h| = 1, where W = 1/2
    const double deficit =
        ((1.0 + h) * xlnx(1.0 + h) - (1.0 - h) * xlnx(1.0 - h)) / (4.0 * h);
    return (kLn2 - deficit) + 0.5;
}

double w_phi(double b, double c, WehrlMethod method, const SeriesPolicy& policy,
             double quad_tol) {
    const double xibar = b * b + c * c;
    if (!(xibar <= 1.0 + 1e-12)) throw std::domain_error("w_phi: b^2 + c^2 > 1");
    const double xi = xi_max() * std::min(xibar, 1.0);
    switch (method) {
    case WehrlMethod::ClosedForm:
        return kLn2Pi - entropy_deficit(xi);
    case WehrlMethod::Series:
        return kLn2Pi - entropy_deficit_series(xi, policy);
    case WehrlMethod::Quadrature: {
        const BlochVector v{b, c, 0.0};
        return integrate_phi([&v](double phi) { return neg_q_ln_q(q_phi(v, phi)); }, quad_tol);
    }
    }
    throw std::logic_error("w_phi: unknown method");
}

double rescale_w_theta(double w) {
    if (!(w >= 0.5 - 1e-9 && w <= kLn2 + 1e-9))
        throw std::domain_error("rescale_w_theta: w outside [1/2, ln2]");
    // ln(4/e) = 2 ln2 - 1; the ratio form maps both endpoints exactly.
    return kLn2 * (2.0 * w - 1.0) / (2.0 * kLn2 - 1.0);
}

double rescale_w_phi(double w, bool paper_literal) {
    const double hi = kLn2Pi;
    const double lo = kLn2Pi - w_phi_deficit_max();
    if (!(w >= lo - 1e-9 && w <= hi + 1e-9))
        throw std::domain_error("rescale_w_phi: w outside [ln(2pi)-omega, ln(2pi)]");
    if (paper_literal) return kLn2 * (w - 0.17) / (kLn2Pi - 0.17);
    return kLn2 * (w - lo) / (hi - lo);
}

namespace {

// Series expansion of Z_theta: the phi integral of each power of
// beta = A + eps(phi) s keeps only even powers of eps, giving
//   (1 + A) ln(4pi)/2 - (1/2) { A + sum_{n>=2} (-1)^n sum_r
//       (n-2)! / ((n-2r)! (r!)^2 4^r) A^(n-2r) s^(2r) xibar^r },
// with A = h cos(theta), s = sin(theta), xibar = b^2 + c^2. Coefficients are
// assembled in log space; the n-sum converges while sup_phi |beta| < 1.
double z_theta_series(const BlochVector& v, double theta, const SeriesPolicy& policy) {
    const double a = v.h * std::cos(theta);
    const double s = std::sin(theta);
    const double xibar = v.b * v.b + v.c * v.c;
    const double beta_sup = std::abs(a) + std::abs(s) * std::sqrt(xibar);
    if (beta_sup > policy.fallback_threshold)
        throw SeriesError("z_theta series: sup |beta| = " + std::to_string(beta_sup) +
                          " exceeds convergence threshold " +
                          std::to_string(policy.fallback_threshold));
    const double ln_abs_a = a != 0.0 ? std::log(std::abs(a)) : 0.0;
    const double ln_s2_xibar = (s != 0.0 && xibar != 0.0)
                                   ? 2.0 * std::log(s) + std::log(xibar) - std::log(4.0)
                                   : 0.0;
    double correction = a;
    int quiet = 0;
    for (int n = 2; n < policy.max_terms; ++n) {
        double group = 0.0;
        for (int r = 0; 2 * r <= n; ++r) {
            const int a_pow = n - 2 * r;
            if (a == 0.0 && a_pow > 0) continue;
            if ((s == 0.0 || xibar == 0.0) && r > 0) continue;
            double lg = std::lgamma(n - 1.0) - std::lgamma(a_pow + 1.0) -
                        2.0 * std::lgamma(r + 1.0);
            lg += a_pow * ln_abs_a + r * ln_s2_xibar;
            const double mag = std::exp(lg);
            group += (a < 0.0 && a_pow % 2 == 1) ? -mag : mag;
        }
        if (n % 2 == 1) group = -group;
        correction += group;
        if (std::abs(group) <= policy.tol * std::max(1.0, std::abs(correction))) {
            if (++quiet >= kQuietGroups) break;
        } else {
            quiet = 0;
        }
        if (n + 1 == policy.max_terms)
            throw SeriesError("z_theta series: tolerance not reached in " +
                              std::to_string(policy.max_terms) + " groups");
    }
    return (1.0 + a) * 0.5 * kLn4Pi - 0.5 * correction;
}

// Series expansion of Z_phi in h and eps = b cos(phi) + c sin(phi). The
// theta integral of beta^N splits by the parity of the eps power; the inner
// binomial sums are carried as their Beta-function closed forms (evaluated
// through log-Gamma), which is the same identity the printed expansion uses
// for sin-power integrals, taken in the numerically stable direction.
double z_phi_series(double h, double eps, const SeriesPolicy& policy) {
    const double beta_sup = std::hypot(h, eps);
    if (beta_sup > policy.fallback_threshold)
        throw SeriesError("z_phi series: sup |beta| = " + std::to_string(beta_sup) +
                          " exceeds convergence threshold " +
                          std::to_string(policy.fallback_threshold));
    const double ln_abs_h = h != 0.0 ? std::log(std::abs(h)) : 0.0;
    const double ln_abs_eps = eps != 0.0 ? std::log(std::abs(eps)) : 0.0;
    const double ln_4pi = kLn4Pi;
    double total = (2.0 + 0.5 * kPi * eps) * kLn4Pi / (4.0 * kPi) - eps / 8.0;
    int quiet = 0;
    for (int n = 1; n < policy.max_terms; ++n) {
        double group = 0.0;
        if (eps != 0.0) {
            // odd eps powers: beta^(2n+1) / ((2n+1) 2n)
            for (int r = 0; r <= n; ++r) {
                if (h == 0.0 && r != n) continue;
                double lg = std::lgamma(2.0 * n) - std::lgamma(2.0 * r + 2.0) -
                            std::lgamma(2.0 * (n - r) + 1.0) +
                            log_beta(r + 1.5, n - r + 0.5) - ln_4pi;
                lg += 2.0 * (n - r) * ln_abs_h + (2.0 * r + 1.0) * ln_abs_eps;
                group += eps > 0.0 ? std::exp(lg) : -std::exp(lg);
            }
        }
        // even eps powers: -beta^(2n) / (2n (2n-1))
        for (int r = 0; r <= n; ++r) {
            if (h == 0.0 && r != n) continue;
            if (eps == 0.0 && r > 0) continue;
            double lg = std::lgamma(2.0 * n - 1.0) - std::lgamma(2.0 * r + 1.0) -
                        std::lgamma(2.0 * (n - r) + 1.0) + log_beta(r + 1.0, n - r + 0.5) -
                        ln_4pi;
            lg += 2.0 * (n - r) * ln_abs_h + 2.0 * r * ln_abs_eps;
            group -= std::exp(lg);
        }
        total += group;
        if (std::abs(group) <= policy.tol * std::max(1.0, std::abs(total))) {
            if (++quiet >= kQuietGroups) break;
        } else {
            quiet = 0;
        }
        if (n + 1 == policy.max_terms)
            throw SeriesError("z_phi series: tolerance not reached in " +
                              std::to_string(policy.max_terms) + " groups");
    }
    return total;
}

// Z_theta at the poles; Q_a is constant in phi there.
double z_theta_pole(double h, bool north) {
    const double q = north ? 1.0 + h : 1.0 - h;
    return 0.5 * q * kLn4Pi - 0.5 * xlnx(q);
}

} // namespace

double z_theta(const BlochVector& v, double theta, WehrlMethod method,
               const SeriesPolicy& policy, double quad_tol) {
    if (!(theta >= 0.0 && theta <= kPi)) throw std::domain_error("z_theta: theta outside [0, pi]");
    policy.validate();
    switch (method) {
    case WehrlMethod::Quadrature:
        return integrate_phi(
            [&v, theta](double phi) { return neg_q_ln_q(q_value(v, SphericalPoint(theta, phi))); },
            quad_tol);
    case WehrlMethod::Series:
        return z_theta_series(v, theta, policy);
    case WehrlMethod::ClosedForm:
        if (std::abs(theta) <= 1e-12) return z_theta_pole(v.h, true);
        if (std::abs(theta - kPi) <= 1e-12) return z_theta_pole(v.h, false);
        if (std::abs(theta - 0.5 * kPi) <= 1e-12) return z_theta_half_pi(v.b, v.c);
        throw std::invalid_argument("z_theta: closed form exists only at theta in {0, pi/2, pi}");
    }
    throw std::logic_error("z_theta: unknown method");
}

double z_phi(const BlochVector& v, double phi, WehrlMethod method, const SeriesPolicy& policy,
             double quad_tol) {
    if (!(phi >= 0.0 && phi < 2.0 * kPi)) throw std::domain_error("z_phi: phi outside [0, 2pi)");
    policy.validate();
    const double eps = v.b * std::cos(phi) + v.c * std::sin(phi);
    switch (method) {
    case WehrlMethod::Quadrature:
        return integrate_theta(
            [&v, phi](double theta) { return neg_q_ln_q(q_value(v, SphericalPoint(theta, phi))); },
            quad_tol);
    case WehrlMethod::Series:
        return z_phi_series(v.h, eps, policy);
    case WehrlMethod::ClosedForm:
        // eps = 0 collapses the integrand to the theta marginal shape.
        if (std::abs(eps) <= 1e-12) return (kLn2Pi + w_theta(v.h)) / (2.0 * kPi);
        throw std::invalid_argument("z_phi: closed form exists only at eps = 0");
    }
    throw std::logic_error("z_phi: unknown method");
}

std::pair<double, double> z_theta_sum_identity(const BlochVector& v) {
    const double lhs = z_theta_pole(v.h, true) + z_theta_pole(v.h, false);
    const double rhs = binary_entropy(v.h) + kLn2Pi;
    return {lhs, rhs};
}

double z_theta_half_pi(double b, double c) {
    const double xibar = b * b + c * c;
    if (!(xibar <= 1.0 + 1e-12)) throw std::domain_error("z_theta_half_pi: b^2 + c^2 > 1");
    return 0.5 * kLn4Pi - 0.5 * entropy_deficit(std::min(xibar, 1.0));
}

double rescaled_z_half_pi(double b, double c, bool paper_literal) {
    const double z = z_theta_half_pi(b, c);
    const double hi = 0.5 * kLn4Pi;
    if (paper_literal) return kLn2 * (z - hi + 0.15) / 0.15;
    const double lo = hi - z_half_pi_deficit_max();
    return kLn2 * (z - lo) / (hi - lo);
}

} // namespace wjcm
