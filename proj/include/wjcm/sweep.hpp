#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wjcm/core.hpp"
#include "wjcm/wehrl.hpp"

namespace wjcm {

inline constexpr std::string_view kToolName = "wehrl_jcm";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Families of quantities a sweep can evaluate per grid time.
enum class Quantity {
    Bloch,         // b, c, h, eta
    Gamma,         // von Neumann entropy
    InfoEntropy,   // H_b, H_c, H_h
    MarginalWehrl, // W_theta, W_phi
    RescaledWehrl, // W_theta_hat, W_rescaled, Z_half_pi_hat
    DensityWehrl,  // Z_theta@..., Z_phi@... at the requested angles
};

using QuantitySet = std::set<Quantity>;

Quantity parse_quantity(std::string_view token); // bloch|gamma|H|W|rescaled|Z
std::string quantity_name(Quantity q);

// Shortest exact spelling of an angle given in units of pi: 0.25 -> "0.25pi".
std::string angle_label(double angle_over_pi);

// Everything evaluated at one grid time. Fields are set only when the
// corresponding quantity family was requested; a failed evaluation leaves
// the field empty and appends "column: message" to errors.
struct EntropyRecord {
    double t = 0.0;
    BlochVector bloch{};
    double eta_val = 0.0;
    std::optional<double> gamma, h_b, h_c, h_h;
    std::optional<double> w_theta_val, w_phi_val, w_theta_hat, w_rescaled, z_half_pi_hat;
    std::vector<std::pair<double, double>> z_theta_at; // (angle/pi, value)
    std::vector<std::pair<double, double>> z_phi_at;   // (angle/pi, value)
    std::vector<std::string> errors;
};

struct SweepRequest {
    ModelConfig config;
    QuantitySet quantities;
    std::vector<double> z_theta_angles; // in units of pi
    std::vector<double> z_phi_angles;   // in units of pi
    bool paper_literal_constants = false;
    WehrlMethod z_method = WehrlMethod::Quadrature;
    SeriesPolicy series_policy{};
};

struct SweepResult {
    ModelConfig config;
    QuantitySet quantities;
    std::vector<double> z_theta_angles;
    std::vector<double> z_phi_angles;
    std::vector<EntropyRecord> records;
    std::string tool_version{kToolVersion};
    std::string constants_mode = "exact"; // or "paper-literal"
    double wall_time_s = 0.0;
};

// Evaluates every requested quantity at every grid time. Grid points are
// independent and may be computed in parallel (WEHRL_JCM_THREADS caps the
// worker count); records come back in grid order and are identical at any
// parallelism level. Per-record numerical failures are recorded in the
// record's error list instead of aborting the sweep.
SweepResult run_sweep(const SweepRequest& request);

// Number of workers run_sweep will use: min(hardware, WEHRL_JCM_THREADS).
unsigned sweep_thread_count();

// One figure preset may carry several parameter variants (the captions show
// vartheta = 0 and pi/4 side by side); each variant becomes one output file.
struct FigurePreset {
    struct Variant {
        std::string label; // e.g. "vartheta0.25pi"
        double vartheta;   // radians
    };
    std::string name;
    double alpha;
    std::vector<Variant> variants;
    QuantitySet quantities;
    std::vector<double> z_theta_angles; // units of pi
    std::vector<double> z_phi_angles;
    double t_max;
    int t_steps;

    ModelConfig make_config(const Variant& variant) const;
};

// fig1: entropies; fig2: marginal Wehrl + rescalings; fig3: density Wehrl at
// theta = phi = pi/4. Unknown names raise std::invalid_argument listing the
// valid presets.
FigurePreset figure_preset(const std::string& name);

} // namespace wjcm
