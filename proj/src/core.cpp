#include "wjcm/core.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace wjcm {

double eta(const BlochVector& v) noexcept {
    return std::sqrt(v.b * v.b + v.c * v.c + v.h * v.h);
}

int default_n_max(double alpha) {
    return static_cast<int>(std::ceil(alpha * alpha + 10.0 * alpha + 20.0));
}

Eigen::ArrayXd coherent_weights(double alpha, int n_max) {
    if (!(alpha >= 0.0)) throw std::domain_error("coherent_weights: alpha must be >= 0");
    if (n_max < 1) throw std::domain_error("coherent_weights: n_max must be >= 1");
    Eigen::ArrayXd c(n_max + 1);
    c[0] = std::exp(-0.5 * alpha * alpha);
    for (int n = 0; n < n_max; ++n) c[n + 1] = c[n] * alpha / std::sqrt(n + 1.0);
    return c;
}

Eigen::ArrayXd coherent_weights(double alpha, int n_max, double tail_tol) {
    Eigen::ArrayXd c = coherent_weights(alpha, n_max);
    const double tail = fock_tail(c);
    if (!(tail < tail_tol))
        throw std::domain_error("coherent_weights: n_max=" + std::to_string(n_max) +
                                " leaves Poisson tail " + std::to_string(tail) +
                                " above tolerance " + std::to_string(tail_tol));
    return c;
}

double fock_tail(const Eigen::ArrayXd& weights) noexcept {
    // The squared weights are the Poisson distribution, so the truncated mass
    // is 1 minus the retained partial sum.
    return std::max(0.0, 1.0 - weights.square().sum());
}

Eigen::ArrayXd uniform_grid(double t_max, int steps) {
    if (steps < 1) throw std::invalid_argument("uniform_grid: steps must be >= 1");
    if (!(t_max >= 0.0)) throw std::invalid_argument("uniform_grid: t_max must be >= 0");
    if (steps == 1) return Eigen::ArrayXd::Zero(1);
    return Eigen::ArrayXd::LinSpaced(steps, 0.0, t_max);
}

ModelConfig::ModelConfig(double alpha_, double vartheta_, Eigen::ArrayXd t_grid_, int n_max_,
                         double series_tol_, double quad_tol_)
    : alpha(alpha_),
      vartheta(vartheta_),
      n_max(n_max_ < 0 ? default_n_max(alpha_) : n_max_),
      t_grid(std::move(t_grid_)),
      series_tol(series_tol_),
      quad_tol(quad_tol_) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("ModelConfig: alpha must be >= 0");
    if (n_max < 1) throw std::invalid_argument("ModelConfig: n_max must be >= 1");
    if (!(series_tol > 0.0) || !(quad_tol > 0.0))
        throw std::invalid_argument("ModelConfig: tolerances must be positive");
    if (t_grid.size() == 0) throw std::invalid_argument("ModelConfig: empty time grid");
    if (!(t_grid[0] >= 0.0)) throw std::invalid_argument("ModelConfig: times must be >= 0");
    for (Eigen::Index i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("ModelConfig: time grid must be strictly increasing");
    // Fock tail bound at the configured cutoff.
    const double tail = fock_tail(coherent_weights(alpha, n_max));
    if (!(tail < series_tol))
        throw std::invalid_argument("ModelConfig: Fock tail " + std::to_string(tail) +
                                    " exceeds series_tol; raise n_max");
    // The joint-state ansatz has no |g,0> component; that stationary amplitude
    // carries weight exp(-alpha^2) sin^2(vartheta), which must be negligible
    // for the norm invariant to hold.
    const double sv = std::sin(vartheta);
    const double dropped = std::exp(-alpha * alpha) * sv * sv;
    if (!(dropped <= 10.0 * series_tol)) {
        std::ostringstream msg;
        msg << "ModelConfig: dropped |g,0> weight exp(-alpha^2) sin^2(vartheta) = " << dropped
            << " exceeds 10*series_tol = " << 10.0 * series_tol
            << "; increase alpha, use vartheta = 0, or loosen series_tol";
        throw std::invalid_argument(msg.str());
    }
}

double AmplitudeSet::norm() const { return g1.abs2().sum() + g2.abs2().sum(); }

StateEvolver::StateEvolver(const ModelConfig& config)
    : weights_(coherent_weights(config.alpha, config.n_max + 1)),
      rabi_((Eigen::ArrayXd::LinSpaced(config.n_max + 1, 1.0, config.n_max + 1.0)).sqrt()),
      cos_v_(std::cos(config.vartheta)),
      sin_v_(std::sin(config.vartheta)) {}

AmplitudeSet StateEvolver::at(double t) const {
    if (!(t >= 0.0)) throw std::domain_error("StateEvolver::at: t must be >= 0");
    const Eigen::Index n = rabi_.size();
    const Eigen::ArrayXd cos_t = (t * rabi_).cos();
    const Eigen::ArrayXd sin_t = (t * rabi_).sin();
    const Eigen::ArrayXd head = weights_.head(n); // C_n
    const Eigen::ArrayXd tail = weights_.tail(n); // C_{n+1}
    AmplitudeSet amps;
    amps.t = t;
    amps.g1.resize(n);
    amps.g2.resize(n);
    amps.g1.real() = cos_v_ * head * cos_t;
    amps.g1.imag() = -sin_v_ * tail * sin_t;
    amps.g2.real() = sin_v_ * tail * cos_t;
    amps.g2.imag() = -cos_v_ * head * sin_t;
    return amps;
}

AmplitudeSet evolve(const ModelConfig& config, double t) { return StateEvolver(config).at(t); }

BlochVector bloch_vector(const AmplitudeSet& amps) {
    const Eigen::Index n = amps.g1.size();
    BlochVector v;
    v.h = (amps.g1.abs2() - amps.g2.abs2()).sum();
    const std::complex<double> cross =
        (amps.g1.tail(n - 1).conjugate() * amps.g2.head(n - 1)).sum();
    v.b = 2.0 * cross.real();
    v.c = 2.0 * cross.imag();
    return v;
}

} // namespace wjcm
