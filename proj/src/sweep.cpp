#include "wjcm/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "wjcm/entropies.hpp"

namespace wjcm {
namespace {

constexpr double kPi = std::numbers::pi;

// Static index partition over a worker pool; records land in preallocated
// slots, so the result is independent of the worker count.
template <typename Fn>
void parallel_for(std::size_t count, const Fn& fn) {
    const std::size_t workers =
        std::min<std::size_t>(sweep_thread_count(), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = count * w / workers;
        const std::size_t end = count * (w + 1) / workers;
        pool.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

template <typename Fn>
void try_quantity(EntropyRecord& rec, const std::string& column, const Fn& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        rec.errors.push_back(column + ": " + e.what());
    }
}

} // namespace

std::string angle_label(double angle_over_pi) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), angle_over_pi);
    return std::string(buf, ptr) + "pi";
}

Quantity parse_quantity(std::string_view token) {
    if (token == "bloch") return Quantity::Bloch;
    if (token == "gamma") return Quantity::Gamma;
    if (token == "H") return Quantity::InfoEntropy;
    if (token == "W") return Quantity::MarginalWehrl;
    if (token == "rescaled") return Quantity::RescaledWehrl;
    if (token == "Z") return Quantity::DensityWehrl;
    throw std::invalid_argument("unknown quantity '" + std::string(token) +
                                "'; valid: bloch, gamma, H, W, rescaled, Z");
}

std::string quantity_name(Quantity q) {
    switch (q) {
    case Quantity::Bloch: return "bloch";
    case Quantity::Gamma: return "gamma";
    case Quantity::InfoEntropy: return "H";
    case Quantity::MarginalWehrl: return "W";
    case Quantity::RescaledWehrl: return "rescaled";
    case Quantity::DensityWehrl: return "Z";
    }
    return "?";
}

unsigned sweep_thread_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("WEHRL_JCM_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(cap, &end, 10);
        if (end != cap && parsed >= 1) n = static_cast<unsigned>(std::min<long>(n, parsed));
    }
    return n;
}

SweepResult run_sweep(const SweepRequest& request) {
    const auto start = std::chrono::steady_clock::now();
    request.series_policy.validate();
    const bool literal = request.paper_literal_constants;

    SweepResult result{.config = request.config,
                       .quantities = request.quantities,
                       .z_theta_angles = request.z_theta_angles,
                       .z_phi_angles = request.z_phi_angles,
                       .records = {}};
    result.constants_mode = literal ? "paper-literal" : "exact";

    const bool want_gamma = request.quantities.contains(Quantity::Gamma);
    const bool want_info = request.quantities.contains(Quantity::InfoEntropy);
    const bool want_marginal = request.quantities.contains(Quantity::MarginalWehrl);
    const bool want_rescaled = request.quantities.contains(Quantity::RescaledWehrl);
    const bool want_density = request.quantities.contains(Quantity::DensityWehrl);

    const StateEvolver evolver(request.config);
    const Eigen::ArrayXd& grid = request.config.t_grid;
    result.records.resize(static_cast<std::size_t>(grid.size()));

    parallel_for(result.records.size(), [&](std::size_t i) {
        EntropyRecord& rec = result.records[i];
        rec.t = grid[static_cast<Eigen::Index>(i)];
        const AmplitudeSet amps = evolver.at(rec.t);
        rec.bloch = bloch_vector(amps);
        rec.eta_val = eta(rec.bloch);
        const BlochVector& v = rec.bloch;

        if (want_gamma)
            try_quantity(rec, "gamma",
                         [&] { rec.gamma = von_neumann(std::min(rec.eta_val, 1.0)); });
        if (want_info) {
            try_quantity(rec, "H_b", [&] { rec.h_b = info_entropy(v.b); });
            try_quantity(rec, "H_c", [&] { rec.h_c = info_entropy(v.c); });
            try_quantity(rec, "H_h", [&] { rec.h_h = info_entropy(v.h); });
        }
        if (want_marginal || want_rescaled) {
            try_quantity(rec, "W_theta", [&] { rec.w_theta_val = w_theta(v.h); });
            try_quantity(rec, "W_phi", [&] {
                rec.w_phi_val = w_phi(v.b, v.c, WehrlMethod::ClosedForm, request.series_policy,
                                      request.config.quad_tol);
            });
        }
        if (want_rescaled) {
            try_quantity(rec, "W_theta_hat", [&] {
                if (rec.w_theta_val) rec.w_theta_hat = rescale_w_theta(*rec.w_theta_val);
            });
            try_quantity(rec, "W_rescaled", [&] {
                if (rec.w_phi_val) rec.w_rescaled = rescale_w_phi(*rec.w_phi_val, literal);
            });
            try_quantity(rec, "Z_half_pi_hat",
                         [&] { rec.z_half_pi_hat = rescaled_z_half_pi(v.b, v.c, literal); });
        }
        if (want_density) {
            for (double frac : request.z_theta_angles) {
                try_quantity(rec, "Z_theta@" + angle_label(frac), [&] {
                    rec.z_theta_at.emplace_back(
                        frac, z_theta(v, frac * kPi, request.z_method, request.series_policy,
                                      request.config.quad_tol));
                });
            }
            for (double frac : request.z_phi_angles) {
                try_quantity(rec, "Z_phi@" + angle_label(frac), [&] {
                    rec.z_phi_at.emplace_back(
                        frac, z_phi(v, frac * kPi, request.z_method, request.series_policy,
                                    request.config.quad_tol));
                });
            }
        }
    });

    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

ModelConfig FigurePreset::make_config(const Variant& variant) const {
    return ModelConfig(alpha, variant.vartheta, uniform_grid(t_max, t_steps));
}

FigurePreset figure_preset(const std::string& name) {
    FigurePreset preset;
    preset.name = name;
    preset.alpha = 5.0;
    preset.t_max = 50.0;
    preset.t_steps = 2000;
    if (name == "fig1") {
        preset.variants = {{"vartheta0pi", 0.0}, {"vartheta0.25pi", kPi / 4.0}};
        preset.quantities = {Quantity::Gamma, Quantity::InfoEntropy};
    } else if (name == "fig2") {
        preset.variants = {{"vartheta0pi", 0.0}, {"vartheta0.25pi", kPi / 4.0}};
        preset.quantities = {Quantity::MarginalWehrl, Quantity::RescaledWehrl};
    } else if (name == "fig3") {
        preset.variants = {{"vartheta0pi", 0.0}};
        preset.quantities = {Quantity::DensityWehrl};
        preset.z_theta_angles = {0.25};
        preset.z_phi_angles = {0.25};
    } else {
        throw std::invalid_argument("unknown preset '" + name +
                                    "'; valid presets: fig1, fig2, fig3");
    }
    return preset;
}

} // namespace wjcm
