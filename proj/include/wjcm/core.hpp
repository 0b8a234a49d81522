#pragma once

#include <Eigen/Core>
#include <complex>

namespace wjcm {

// Atomic Bloch vector: b = <sigma_x>, c = <sigma_y>, h = <sigma_z>.
struct BlochVector {
    double b = 0.0;
    double c = 0.0;
    double h = 0.0;
};

// Bloch length sqrt(b^2 + c^2 + h^2); 1 for pure reduced states.
double eta(const BlochVector& v) noexcept;

// Default Fock cutoff ceil(alpha^2 + 10 alpha + 20): ten standard deviations
// past the mean photon number, which pushes the Poisson tail below 1e-14 for
// alpha <= 10.
int default_n_max(double alpha);

// Coherent-state amplitudes C_0..C_n_max with C_n = alpha^n/sqrt(n!) e^(-alpha^2/2),
// built by the recurrence C_{n+1} = C_n alpha/sqrt(n+1) (no factorials, no overflow).
Eigen::ArrayXd coherent_weights(double alpha, int n_max);

// Same, but rejects cutoffs whose Poisson tail sum_{n>n_max} C_n^2 exceeds tail_tol.
Eigen::ArrayXd coherent_weights(double alpha, int n_max, double tail_tol);

// Probability mass beyond the cutoff: 1 - sum_n C_n^2 (clamped at 0).
double fock_tail(const Eigen::ArrayXd& weights) noexcept;

// Resonant-model configuration. Times are the scaled interaction time
// T = lambda t; the atom starts in cos(vartheta)|e> + sin(vartheta)|g> and
// the field in the real coherent state |alpha>.
struct ModelConfig {
    double alpha;
    double vartheta;
    int n_max;
    Eigen::ArrayXd t_grid;
    double series_tol = 1e-12;
    double quad_tol = 1e-10;

    // Validates everything: alpha >= 0, n_max >= 1, strictly increasing
    // non-negative grid, positive tolerances, Fock tail below series_tol,
    // and the stationary |g,0> amplitude dropped by the joint-state ansatz
    // small enough (exp(-alpha^2) sin^2 vartheta <= 10 series_tol) that the
    // norm invariant can hold. Pass n_max = -1 for the default cutoff.
    ModelConfig(double alpha, double vartheta, Eigen::ArrayXd t_grid, int n_max = -1,
                double series_tol = 1e-12, double quad_tol = 1e-10);
};

// Inclusive uniform grid: steps points covering [0, t_max].
Eigen::ArrayXd uniform_grid(double t_max, int steps);

// Joint-state coefficients at one instant: g1(n) multiplies |e,n>, g2(n)
// multiplies |g,n+1>, for n = 0..n_max.
struct AmplitudeSet {
    Eigen::ArrayXcd g1;
    Eigen::ArrayXcd g2;
    double t = 0.0;

    double norm() const; // sum |g1|^2 + |g2|^2, = 1 up to the dropped tail
};

// Precomputed evolution kernel (weights and Rabi frequencies) for repeated
// evaluation over a time grid. Immutable after construction; at() is pure.
class StateEvolver {
public:
    explicit StateEvolver(const ModelConfig& config);
    AmplitudeSet at(double t) const;
    const Eigen::ArrayXd& weights() const noexcept { return weights_; }

private:
    Eigen::ArrayXd weights_; // C_0..C_{n_max+1}
    Eigen::ArrayXd rabi_;    // sqrt(n+1), n = 0..n_max
    double cos_v_;
    double sin_v_;
};

AmplitudeSet evolve(const ModelConfig& config, double t);

// Reduce the joint state to the atomic Bloch vector:
//   h = sum |g1(n)|^2 - |g2(n)|^2,  b + ic = 2 sum conj(g1(n+1)) g2(n).
BlochVector bloch_vector(const AmplitudeSet& amps);

} // namespace wjcm
