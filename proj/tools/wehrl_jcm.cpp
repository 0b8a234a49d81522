// Command-line front end: time sweeps of the resonant Jaynes-Cummings entropy
// toolkit, figure presets, CSV/JSON output.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wjcm/output.hpp"
#include "wjcm/sweep.hpp"

namespace {

struct CliOptions {
    double alpha = 5.0;
    double vartheta_pi = 0.0; // units of pi
    double t_max = 50.0;
    int t_steps = 2000;
    int n_max = -1;
    double series_tol = 1e-12;
    double quad_tol = 1e-10;
    std::vector<double> thetas; // units of pi
    std::vector<double> phis;
    std::vector<std::string> quantities = {"bloch", "gamma", "H"};
    std::string format = "csv";
    std::string output;
    std::string preset;
    bool paper_literal = false;
    bool gnuplot = false;
};

std::filesystem::path variant_path(const std::string& base, const std::string& label,
                                   bool multi, const std::string& ext) {
    std::filesystem::path p(base);
    if (!multi) return p.has_extension() ? p : p.replace_extension(ext);
    const std::string stem = p.has_extension() ? p.stem().string() : p.filename().string();
    const std::string extension = p.has_extension() ? p.extension().string() : "." + ext;
    std::filesystem::path dir = p.parent_path();
    return dir / (stem + "_" + label + extension);
}

void write_gnuplot_script(const std::filesystem::path& csv_path,
                          const std::vector<std::string>& columns) {
    std::filesystem::path gp = csv_path;
    gp.replace_extension(".gp");
    std::ofstream script(gp);
    if (!script) throw std::runtime_error("cannot open '" + gp.string() + "' for writing");
    script << "set datafile separator ','\n"
           << "set key autotitle columnhead\n"
           << "set xlabel 'T'\n"
           << "plot";
    for (std::size_t i = 1; i < columns.size(); ++i)
        script << (i == 1 ? " " : ", \\\n     ") << "'" << csv_path.filename().string()
               << "' using 1:" << i + 1 << " with lines";
    script << "\n";
}

int run_one(const wjcm::SweepRequest& request, const std::filesystem::path& path,
            wjcm::OutputFormat format, bool gnuplot) {
    const wjcm::SweepResult result = wjcm::run_sweep(request);
    wjcm::write_output(result, format, path);
    std::size_t failed = 0;
    for (const auto& rec : result.records) failed += rec.errors.empty() ? 0 : 1;
    std::cout << path.string() << ": " << result.records.size() << " records";
    if (failed > 0) std::cout << ", " << failed << " with errors";
    std::cout << " (" << result.wall_time_s << " s)\n";
    if (failed > 0)
        for (const auto& rec : result.records)
            for (const auto& err : rec.errors)
                std::cerr << "warning: t = " << rec.t << ": " << err << "\n";
    if (gnuplot && format == wjcm::OutputFormat::Csv)
        write_gnuplot_script(path, wjcm::csv_columns(result));
    return failed > 0 ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resonant Jaynes-Cummings model: von Neumann, information, and atomic "
                 "Wehrl entropies over a scaled-time sweep"};
    CliOptions opt;

    app.set_config("--config", "", "key=value file mirroring the long options");
    app.add_option("--alpha", opt.alpha, "coherent field amplitude (real)")
        ->capture_default_str();
    app.add_option("--vartheta", opt.vartheta_pi,
                   "initial atomic superposition phase, units of pi")
        ->capture_default_str();
    app.add_option("--t-max", opt.t_max, "sweep end in scaled time T = lambda t")
        ->capture_default_str();
    app.add_option("--t-steps", opt.t_steps, "number of grid points on [0, t-max]")
        ->capture_default_str();
    app.add_option("--n-max", opt.n_max, "Fock cutoff (-1 = automatic)")->capture_default_str();
    app.add_option("--tol", opt.series_tol, "series truncation tolerance")
        ->capture_default_str();
    app.add_option("--quad-tol", opt.quad_tol, "quadrature tolerance")->capture_default_str();
    app.add_option("--theta", opt.thetas, "Z_theta angle, units of pi (repeatable)");
    app.add_option("--phi", opt.phis, "Z_phi angle, units of pi (repeatable)");
    app.add_option("--quantities", opt.quantities,
                   "quantity families: bloch, gamma, H, W, rescaled, Z")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--format", opt.format, "output format: csv or json")->capture_default_str();
    app.add_option("--output", opt.output, "output path (presets add a variant suffix)");
    app.add_option("--preset", opt.preset, "figure preset: fig1, fig2, fig3");
    app.add_flag("--paper-literal-constants", opt.paper_literal,
                 "use the printed rounded constants 0.17/0.15 in the rescalings");
    app.add_flag("--gnuplot", opt.gnuplot, "also emit a gnuplot script per CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        const wjcm::OutputFormat format = wjcm::parse_format(opt.format);
        const std::string ext = format == wjcm::OutputFormat::Csv ? "csv" : "json";
        int status = 0;

        if (!opt.preset.empty()) {
            wjcm::FigurePreset preset = wjcm::figure_preset(opt.preset);
            if (app.count("--alpha")) preset.alpha = opt.alpha;
            if (app.count("--t-max")) preset.t_max = opt.t_max;
            if (app.count("--t-steps")) preset.t_steps = opt.t_steps;
            if (app.count("--theta")) preset.z_theta_angles = opt.thetas;
            if (app.count("--phi")) preset.z_phi_angles = opt.phis;
            const std::string base = opt.output.empty() ? opt.preset : opt.output;
            const bool multi = preset.variants.size() > 1;
            for (const auto& variant : preset.variants) {
                wjcm::ModelConfig config(preset.alpha, variant.vartheta,
                                         wjcm::uniform_grid(preset.t_max, preset.t_steps),
                                         opt.n_max, opt.series_tol, opt.quad_tol);
                wjcm::SweepRequest request{.config = std::move(config),
                                           .quantities = preset.quantities,
                                           .z_theta_angles = preset.z_theta_angles,
                                           .z_phi_angles = preset.z_phi_angles,
                                           .paper_literal_constants = opt.paper_literal};
                status = std::max(
                    status, run_one(request, variant_path(base, variant.label, multi, ext),
                                    format, opt.gnuplot));
            }
        } else {
            wjcm::QuantitySet quantities;
            for (const auto& token : opt.quantities)
                quantities.insert(wjcm::parse_quantity(token));
            wjcm::ModelConfig config(opt.alpha, opt.vartheta_pi * std::numbers::pi,
                                     wjcm::uniform_grid(opt.t_max, opt.t_steps), opt.n_max,
                                     opt.series_tol, opt.quad_tol);
            if ((!opt.thetas.empty() || !opt.phis.empty()) &&
                !quantities.contains(wjcm::Quantity::DensityWehrl))
                quantities.insert(wjcm::Quantity::DensityWehrl);
            wjcm::SweepRequest request{.config = std::move(config),
                                       .quantities = std::move(quantities),
                                       .z_theta_angles = opt.thetas,
                                       .z_phi_angles = opt.phis,
                                       .paper_literal_constants = opt.paper_literal};
            const std::string base = opt.output.empty() ? "sweep" : opt.output;
            status = run_one(request, variant_path(base, "", false, ext), format, opt.gnuplot);
        }
        return status;
    } catch (const wjcm::SeriesError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const wjcm::QuadratureError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
