#include "wjcm/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wjcm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ---------------------------------------------------------------------------
// Gauss-Legendre panel rule. Nodes and weights on [-1, 1] are built once by
// Newton iteration on the Legendre recurrence; order 24 integrates smooth
// integrands to near machine precision per panel, and the adaptive driver
// splits panels until the two-level estimates agree.
// ---------------------------------------------------------------------------
constexpr int kGlOrder = 24;

struct GlRule {
    std::array<double, kGlOrder> node{};
    std::array<double, kGlOrder> weight{};
};

GlRule build_gl_rule() {
    GlRule rule;
    const int n = kGlOrder;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.node[i] = -x;
        rule.node[n - 1 - i] = x;
        rule.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weight[n - 1 - i] = rule.weight[i];
    }
    return rule;
}

const GlRule& gl_rule() {
    static const GlRule rule = build_gl_rule();
    return rule;
}

double gl_panel(const std::function<double(double)>& f, double a, double b) {
    const GlRule& rule = gl_rule();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double acc = 0.0;
    for (int i = 0; i < kGlOrder; ++i) acc += rule.weight[i] * f(mid + half * rule.node[i]);
    return half * acc;
}

double adaptive_gl(const std::function<double(double)>& f, double a, double b, double tol,
                   int depth) {
    const double whole = gl_panel(f, a, b);
    const double mid = 0.5 * (a + b);
    const double halves = gl_panel(f, a, mid) + gl_panel(f, mid, b);
    if (std::abs(halves - whole) <= tol) return halves;
    if (depth >= 30)
        throw QuadratureError("integrate_theta: panel subdivision limit reached", halves);
    return adaptive_gl(f, a, mid, 0.5 * tol, depth + 1) +
           adaptive_gl(f, mid, b, 0.5 * tol, depth + 1);
}

} // namespace

double integrate_phi(const std::function<double(double)>& f, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_phi: tol must be positive");
    int n = 16;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += f(kTwoPi * j / n);
    double estimate = sum * kTwoPi / n;
    // Each refinement adds the midpoints of the current panels; for smooth
    // periodic integrands the estimates converge spectrally.
    while (n <= (1 << 20)) {
        double mids = 0.0;
        for (int j = 0; j < n; ++j) mids += f(kTwoPi * (j + 0.5) / n);
        sum += mids;
        n *= 2;
        const double refined = sum * kTwoPi / n;
        if (std::abs(refined - estimate) <= tol) return refined;
        estimate = refined;
    }
    throw QuadratureError("integrate_phi: no convergence after max panel doublings", estimate);
}

double integrate_theta(const std::function<double(double)>& f, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_theta: tol must be positive");
    return adaptive_gl([&f](double theta) { return f(theta) * std::sin(theta); }, 0.0, kPi,
                       tol, 0);
}

double integrate(const IntegrandHandle& handle, double tol) {
    if (!handle.evaluator) throw std::invalid_argument("integrate: empty evaluator");
    return handle.domain == AngleDomain::Phi ? integrate_phi(handle.evaluator, tol)
                                             : integrate_theta(handle.evaluator, tol);
}

double trig_power_integral(double c1, double c2, int k) {
    if (k < 0) throw std::domain_error("trig_power_integral: k must be non-negative");
    if (k % 2 == 1) return 0.0;
    const int m = k / 2;
    double coeff = 1.0; // (2m)! / (4^m (m!)^2)
    for (int j = 0; j < m; ++j) coeff *= (2.0 * j + 1.0) / (2.0 * j + 2.0);
    return kTwoPi * coeff * std::pow(c1 * c1 + c2 * c2, m);
}

double sin_power_integral(int m) {
    if (m < 1) throw std::domain_error("sin_power_integral: m must be >= 1");
    const double half = 0.5 * (m + 1);
    return std::exp(std::log(kPi) - (m - 1) * std::numbers::ln2 - std::log(double(m)) -
                    log_beta(half, half));
}

double log_beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("log_beta: arguments must be positive");
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

} // namespace wjcm
