#include "wjcm/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace wjcm {
namespace {

double pair_lookup(const std::vector<std::pair<double, double>>& pairs, double key) {
    for (const auto& [angle, value] : pairs)
        if (angle == key) return value;
    return std::numeric_limits<double>::quiet_NaN();
}

void append_cell(std::string& out, const std::optional<double>& value) {
    out += ',';
    out += value ? format_double(*value) : "nan";
}

} // namespace

OutputFormat parse_format(std::string_view token) {
    if (token == "csv") return OutputFormat::Csv;
    if (token == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown format '" + std::string(token) + "'; valid: csv, json");
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

std::vector<std::string> csv_columns(const SweepResult& result) {
    std::vector<std::string> cols{"t"};
    const auto& q = result.quantities;
    if (q.contains(Quantity::Bloch)) {
        cols.insert(cols.end(), {"b", "c", "h", "eta"});
    }
    if (q.contains(Quantity::Gamma)) cols.push_back("gamma");
    if (q.contains(Quantity::InfoEntropy)) cols.insert(cols.end(), {"H_b", "H_c", "H_h"});
    if (q.contains(Quantity::MarginalWehrl)) cols.insert(cols.end(), {"W_theta", "W_phi"});
    if (q.contains(Quantity::RescaledWehrl))
        cols.insert(cols.end(), {"W_theta_hat", "W_rescaled", "Z_half_pi_hat"});
    if (q.contains(Quantity::DensityWehrl)) {
        for (double a : result.z_theta_angles) cols.push_back("Z_theta@" + angle_label(a));
        for (double a : result.z_phi_angles) cols.push_back("Z_phi@" + angle_label(a));
    }
    return cols;
}

std::string to_csv(const SweepResult& result) {
    const auto& q = result.quantities;
    std::string out;
    out.reserve(64 + result.records.size() * 160);
    const std::vector<std::string> cols = csv_columns(result);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        out += cols[i];
    }
    out += '\n';
    for (const EntropyRecord& rec : result.records) {
        out += format_double(rec.t);
        if (q.contains(Quantity::Bloch)) {
            append_cell(out, rec.bloch.b);
            append_cell(out, rec.bloch.c);
            append_cell(out, rec.bloch.h);
            append_cell(out, rec.eta_val);
        }
        if (q.contains(Quantity::Gamma)) append_cell(out, rec.gamma);
        if (q.contains(Quantity::InfoEntropy)) {
            append_cell(out, rec.h_b);
            append_cell(out, rec.h_c);
            append_cell(out, rec.h_h);
        }
        if (q.contains(Quantity::MarginalWehrl)) {
            append_cell(out, rec.w_theta_val);
            append_cell(out, rec.w_phi_val);
        }
        if (q.contains(Quantity::RescaledWehrl)) {
            append_cell(out, rec.w_theta_hat);
            append_cell(out, rec.w_rescaled);
            append_cell(out, rec.z_half_pi_hat);
        }
        if (q.contains(Quantity::DensityWehrl)) {
            for (double a : result.z_theta_angles)
                append_cell(out, pair_lookup(rec.z_theta_at, a));
            for (double a : result.z_phi_angles) append_cell(out, pair_lookup(rec.z_phi_at, a));
        }
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::json json_value(const std::optional<double>& v) {
    if (!v || std::isnan(*v)) return nullptr;
    return *v;
}

} // namespace

std::string to_json(const SweepResult& result) {
    nlohmann::json meta;
    meta["tool"] = std::string(kToolName);
    meta["version"] = result.tool_version;
    meta["constants_mode"] = result.constants_mode;
    meta["wall_time_s"] = result.wall_time_s;
    meta["alpha"] = result.config.alpha;
    meta["vartheta"] = result.config.vartheta;
    meta["n_max"] = result.config.n_max;
    meta["series_tol"] = result.config.series_tol;
    meta["quad_tol"] = result.config.quad_tol;
    meta["t_points"] = result.config.t_grid.size();
    meta["t_min"] = result.config.t_grid[0];
    meta["t_max"] = result.config.t_grid[result.config.t_grid.size() - 1];
    std::vector<std::string> names;
    for (Quantity q : result.quantities) names.push_back(quantity_name(q));
    meta["quantities"] = names;

    nlohmann::json records = nlohmann::json::array();
    const auto& q = result.quantities;
    for (const EntropyRecord& rec : result.records) {
        nlohmann::json r;
        r["t"] = rec.t;
        if (q.contains(Quantity::Bloch)) {
            r["b"] = rec.bloch.b;
            r["c"] = rec.bloch.c;
            r["h"] = rec.bloch.h;
            r["eta"] = rec.eta_val;
        }
        if (q.contains(Quantity::Gamma)) r["gamma"] = json_value(rec.gamma);
        if (q.contains(Quantity::InfoEntropy)) {
            r["H_b"] = json_value(rec.h_b);
            r["H_c"] = json_value(rec.h_c);
            r["H_h"] = json_value(rec.h_h);
        }
        if (q.contains(Quantity::MarginalWehrl)) {
            r["W_theta"] = json_value(rec.w_theta_val);
            r["W_phi"] = json_value(rec.w_phi_val);
        }
        if (q.contains(Quantity::RescaledWehrl)) {
            r["W_theta_hat"] = json_value(rec.w_theta_hat);
            r["W_rescaled"] = json_value(rec.w_rescaled);
            r["Z_half_pi_hat"] = json_value(rec.z_half_pi_hat);
        }
        if (q.contains(Quantity::DensityWehrl)) {
            for (double a : result.z_theta_angles) {
                const double v = pair_lookup(rec.z_theta_at, a);
                r["Z_theta@" + angle_label(a)] =
                    std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v);
            }
            for (double a : result.z_phi_angles) {
                const double v = pair_lookup(rec.z_phi_at, a);
                r["Z_phi@" + angle_label(a)] =
                    std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v);
            }
        }
        if (!rec.errors.empty()) r["errors"] = rec.errors;
        records.push_back(std::move(r));
    }

    nlohmann::json doc;
    doc["meta"] = std::move(meta);
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

void write_output(const SweepResult& result, OutputFormat format,
                  const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    file << (format == OutputFormat::Csv ? to_csv(result) : to_json(result));
    file.flush();
    if (!file) throw std::runtime_error("write failed for '" + path.string() + "'");
}

} // namespace wjcm
