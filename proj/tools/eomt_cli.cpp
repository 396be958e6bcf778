#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eomt/eomt.hpp"

namespace {

using eomt::cli::format_double;

// Flat JSON object writer preserving insertion order; all doubles go through
// the 17-significant-digit formatter so output is byte stable.
class JsonObject {
public:
    void add(const std::string& key, double v) { raw(key, format_double(v)); }
    void add(const std::string& key, int v) { raw(key, std::to_string(v)); }
    void add(const std::string& key, bool v) { raw(key, v ? "true" : "false"); }
    void add(const std::string& key, const std::string& v) { raw(key, "\"" + v + "\""); }

    std::string str() const { return "{\n" + body_ + "\n}\n"; }

private:
    void raw(const std::string& key, const std::string& value)
    {
        if (!body_.empty())
            body_ += ",\n";
        body_ += "  \"" + key + "\": " + value;
    }

    std::string body_;
};

std::string csv_table(const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows)
{
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i)
            out += ",";
        out += columns[i];
    }
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ",";
            out += format_double(row[i]);
        }
        out += "\n";
    }
    return out;
}

std::string json_table(const std::vector<std::string>& columns,
                       const std::vector<std::vector<double>>& rows)
{
    std::string out = "{\n  \"columns\": [";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i)
            out += ", ";
        out += "\"" + columns[i] + "\"";
    }
    out += "],\n  \"data\": [\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out += "    [";
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            if (i)
                out += ", ";
            out += format_double(rows[r][i]);
        }
        out += r + 1 < rows.size() ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";
    return out;
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw eomt::validation_error("cannot open output file: " + out_path);
    f << text;
}

void require_json_format(const std::string& format)
{
    if (format == "csv")
        throw eomt::validation_error("--format csv applies to sweep commands only");
}

std::string table_output(const std::string& format,
                         const std::vector<std::string>& columns,
                         const std::vector<std::vector<double>>& rows)
{
    return format == "json" ? json_table(columns, rows) : csv_table(columns, rows);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"optic-to-microwave converter: efficiency, entanglement survival and capacity"};
    app.require_subcommand(1);

    std::string config_path, out_path, format;
    app.add_option("--config", config_path, "JSON parameter file; missing keys take the built-in profile");
    app.add_option("--out", out_path, "output file path (default: stdout)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

    auto* cmd_info = app.add_subcommand("info", "parameters, derived quantities and drive detunings");
    auto* cmd_coeffs = app.add_subcommand("coeffs", "scattering coefficients at one sideband frequency");
    auto* cmd_efficiency = app.add_subcommand("efficiency", "zero-frequency conversion efficiency R(0)");
    auto* cmd_ln = app.add_subcommand("ln", "log negativity of the converted two-mode state");
    auto* cmd_capacity = app.add_subcommand("capacity", "large-signal entanglement bound and k coefficients");
    auto* cmd_sweep_ns = app.add_subcommand("sweep-ns", "LN and surviving ratio over a signal photon-number grid");
    auto* cmd_sweep_loss = app.add_subcommand("sweep-loss", "objective landscape over the two input loss rates");
    auto* cmd_opt_eff = app.add_subcommand("optimize-efficiency", "loss rates maximizing R(0), numeric vs closed form");
    auto* cmd_opt_ln = app.add_subcommand("optimize-ln", "loss rates maximizing the converted-state LN");
    for (auto* sc : app.get_subcommands({}))
        sc->fallthrough();

    double coeffs_omega = 0.0;
    cmd_coeffs->add_option("--omega-hz", coeffs_omega, "sideband frequency (Hz)");

    double eff_omega = 0.0;
    auto* eff_omega_opt = cmd_efficiency->add_option("--omega-hz", eff_omega, "also report R at this frequency (Hz)");

    double ln_ns = 1.0, ln_omega = 0.0;
    cmd_ln->add_option("--ns", ln_ns, "signal mean photon number");
    cmd_ln->add_option("--omega-hz", ln_omega, "sideband frequency (Hz)");

    double sns_min = 1e-3, sns_max = 1e3, sns_omega = 0.0;
    int sns_points = 241;
    cmd_sweep_ns->add_option("--min", sns_min, "grid lower bound");
    cmd_sweep_ns->add_option("--max", sns_max, "grid upper bound");
    cmd_sweep_ns->add_option("--points", sns_points, "grid size");
    cmd_sweep_ns->add_option("--omega-hz", sns_omega, "sideband frequency (Hz)");

    double sl_min = 1e5, sl_max = 1e9, sl_ns = 1.0, sl_omega = 0.0;
    int sl_points = 101;
    std::string sl_objective = "efficiency";
    cmd_sweep_loss->add_option("--min", sl_min, "loss-rate grid lower bound (Hz)");
    cmd_sweep_loss->add_option("--max", sl_max, "loss-rate grid upper bound (Hz)");
    cmd_sweep_loss->add_option("--points", sl_points, "grid size per axis");
    cmd_sweep_loss->add_option("--ns", sl_ns, "signal photon number for the ln objective");
    cmd_sweep_loss->add_option("--omega-hz", sl_omega, "sideband frequency for the ln objective (Hz)");
    cmd_sweep_loss->add_option("--objective", sl_objective, "efficiency or ln")
        ->check(CLI::IsMember({"efficiency", "ln"}));

    double oe_min = 1e4, oe_max = 1e9;
    cmd_opt_eff->add_option("--min", oe_min, "search lower bound (Hz)");
    cmd_opt_eff->add_option("--max", oe_max, "search upper bound (Hz)");

    double ol_min = 1e4, ol_max = 1e9, ol_ns = 1.0;
    cmd_opt_ln->add_option("--min", ol_min, "search lower bound (Hz)");
    cmd_opt_ln->add_option("--max", ol_max, "search upper bound (Hz)");
    cmd_opt_ln->add_option("--ns", ol_ns, "signal mean photon number");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        eomt::params::SystemParams p;
        if (!config_path.empty())
            p = eomt::cli::load_config(config_path).params;
        for (const auto& w : eomt::params::warnings(p))
            std::cerr << "warning: " << w << "\n";
        const auto d = eomt::params::derive(p);

        if (cmd_info->parsed()) {
            require_json_format(format);
            JsonObject j;
            j.add("g_o_hz", p.g_o);
            j.add("g_e_hz", p.g_e);
            j.add("gamma_o_hz", p.gamma_o);
            j.add("gamma_e_hz", p.gamma_e);
            j.add("gamma_o_int_hz", p.gamma_o_int);
            j.add("gamma_e_int_hz", p.gamma_e_int);
            j.add("gamma_m_hz", p.gamma_m);
            j.add("omega_o_hz", p.omega_o);
            j.add("omega_e_hz", p.omega_e);
            j.add("omega_m_hz", p.omega_m);
            j.add("temperature_k", p.temperature);
            j.add("n_pump_o", p.n_pump_o);
            j.add("n_pump_e", p.n_pump_e);
            j.add("occupancy_extra_two_pi", p.conventions.occupancy_extra_two_pi);
            j.add("gamma_m_extra_division", p.conventions.gamma_m_extra_division);
            j.add("G_o_hz", d.G_o);
            j.add("G_e_hz", d.G_e);
            j.add("Gamma_o_hz", d.Gamma_o);
            j.add("Gamma_e_hz", d.Gamma_e);
            j.add("gamma_m_effective_hz", d.gamma_m);
            j.add("n_th_o", d.n_th_o);
            j.add("n_th_e", d.n_th_e);
            j.add("n_th_m", d.n_th_m);
            j.add("Z_hz3", d.Z);
            const auto det = eomt::params::required_pump_detunings(p);
            j.add("delta_drive_o_hz", det.first);
            j.add("delta_drive_e_hz", det.second);
            emit(j.str(), out_path);
        } else if (cmd_coeffs->parsed()) {
            require_json_format(format);
            const auto s = eomt::scattering::coefficients(d, coeffs_omega);
            const auto o = eomt::scattering::solve_qle_oracle(d, coeffs_omega);
            const std::complex<double> cs[5] = {s.c1, s.c2, s.c3, s.c4, s.c5};
            const std::complex<double> co[5] = {o.c1, o.c2, o.c3, o.c4, o.c5};
            double passivity = 0.0, oracle_dev = 0.0;
            for (int i = 0; i < 5; ++i) {
                passivity += std::norm(cs[i]);
                oracle_dev = std::max(oracle_dev, std::abs(cs[i] - co[i]) / std::abs(co[i]));
            }
            JsonObject j;
            j.add("omega_hz", coeffs_omega);
            const char* names[5] = {"c1", "c2", "c3", "c4", "c5"};
            for (int i = 0; i < 5; ++i) {
                j.add(std::string(names[i]) + "_re", cs[i].real());
                j.add(std::string(names[i]) + "_im", cs[i].imag());
            }
            j.add("efficiency", s.efficiency);
            j.add("passivity_sum", passivity);
            j.add("oracle_max_rel_dev", oracle_dev);
            emit(j.str(), out_path);
        } else if (cmd_efficiency->parsed()) {
            require_json_format(format);
            JsonObject j;
            j.add("r0", eomt::scattering::efficiency_closed_form(d));
            if (!eff_omega_opt->empty()) {
                j.add("omega_hz", eff_omega);
                j.add("efficiency_at_omega", eomt::scattering::coefficients(d, eff_omega).efficiency);
            }
            emit(j.str(), out_path);
        } else if (cmd_ln->parsed()) {
            require_json_format(format);
            const auto cm = eomt::gaussian::ctmg_covariance(d, ln_ns, ln_omega);
            const auto rep = eomt::gaussian::log_negativity(cm);
            const double ln_tmsv = eomt::gaussian::ln_tmsv_closed_form(ln_ns);
            JsonObject j;
            j.add("ns", ln_ns);
            j.add("omega_hz", ln_omega);
            j.add("n_out", eomt::scattering::output_occupancy(d, ln_ns, ln_omega));
            j.add("xi_minus", rep.xi_minus);
            j.add("xi_plus", rep.xi_plus);
            j.add("ln_ctmg", rep.ln_value);
            j.add("ln_tmsv", ln_tmsv);
            j.add("surviving_ratio", ln_tmsv > 0.0 ? rep.ln_value / ln_tmsv : 0.0);
            if (ln_omega == 0.0)
                j.add("xi_minus_analytic", eomt::gaussian::xi_minus_analytic(d, ln_ns));
            emit(j.str(), out_path);
        } else if (cmd_capacity->parsed()) {
            require_json_format(format);
            const auto k = eomt::capacity::extract_k_coefficients(d);
            const auto a = eomt::capacity::check_printed_appendix(d);
            JsonObject j;
            j.add("k1", k.k1);
            j.add("k2", k.k2);
            j.add("k3", k.k3);
            j.add("k4", k.k4);
            j.add("k5", k.k5);
            j.add("p", k.p);
            j.add("p_noiseless", k.p_noiseless);
            j.add("printed_k1", a.printed_k1);
            j.add("printed_k2", a.printed_k2);
            j.add("printed_k3", a.printed_k3);
            j.add("printed_k4", a.printed_k4);
            j.add("printed_k5", a.printed_k5);
            j.add("printed_rel_dev_k1", a.rel_dev_k1);
            j.add("printed_rel_dev_k2", a.rel_dev_k2);
            j.add("printed_rel_dev_k3", a.rel_dev_k3);
            j.add("printed_rel_dev_k4", a.rel_dev_k4);
            j.add("printed_rel_dev_k5", a.rel_dev_k5);
            emit(j.str(), out_path);
        } else if (cmd_sweep_ns->parsed()) {
            const auto grid = eomt::analysis::log_grid(sns_min, sns_max, sns_points);
            const auto sweep = eomt::analysis::sweep_ln_vs_ns(d, grid, sns_omega);
            std::vector<std::vector<double>> rows;
            rows.reserve(sweep.rows.size());
            for (const auto& r : sweep.rows)
                rows.push_back({r.ns, r.ln_tmsv, r.ln_ctmg, r.ratio});
            emit(table_output(format, {"ns", "ln_tmsv", "ln_ctmg", "ratio"}, rows), out_path);
        } else if (cmd_sweep_loss->parsed()) {
            const auto grid = eomt::analysis::log_grid(sl_min, sl_max, sl_points);
            const auto objective = sl_objective == "efficiency"
                ? eomt::analysis::LossObjective::efficiency
                : eomt::analysis::LossObjective::log_negativity;
            const auto sweep = eomt::analysis::sweep_loss_rates(p, grid, grid, objective, sl_ns, sl_omega);
            std::vector<std::vector<double>> rows;
            rows.reserve(sweep.rows.size());
            for (const auto& r : sweep.rows)
                rows.push_back({r.gamma_o, r.gamma_e, r.value});
            emit(table_output(format, {"gamma_o_hz", "gamma_e_hz", "value"}, rows), out_path);
        } else if (cmd_opt_eff->parsed()) {
            require_json_format(format);
            const auto numeric = eomt::analysis::maximize_efficiency_numeric(p, oe_min, oe_max);
            const auto closed = eomt::scattering::optimal_input_loss_rates(p);
            eomt::params::SystemParams at = p;
            at.gamma_o = closed.first;
            at.gamma_e = closed.second;
            const double r_closed = eomt::scattering::efficiency_closed_form(eomt::params::derive(at));
            const double pos_dev = std::max(
                std::abs(numeric.argmax[0] - closed.first) / closed.first,
                std::abs(numeric.argmax[1] - closed.second) / closed.second);
            JsonObject j;
            j.add("gamma_o_numeric_hz", numeric.argmax[0]);
            j.add("gamma_e_numeric_hz", numeric.argmax[1]);
            j.add("r_numeric", numeric.objective);
            j.add("gamma_o_closed_hz", closed.first);
            j.add("gamma_e_closed_hz", closed.second);
            j.add("r_closed", r_closed);
            j.add("position_rel_dev", pos_dev);
            j.add("iterations", numeric.iterations);
            j.add("converged", numeric.converged);
            emit(j.str(), out_path);
        } else if (cmd_opt_ln->parsed()) {
            require_json_format(format);
            const auto best = eomt::analysis::maximize_ln_over_loss_rates(p, ol_ns, ol_min, ol_max);
            JsonObject j;
            j.add("gamma_o_hz", best.argmax[0]);
            j.add("gamma_e_hz", best.argmax[1]);
            j.add("ln_value", best.objective);
            j.add("efficiency_at_argmax", best.auxiliary);
            j.add("ns", ol_ns);
            j.add("iterations", best.iterations);
            j.add("converged", best.converged);
            emit(j.str(), out_path);
        }
        return 0;
    } catch (const eomt::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const eomt::numerical_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
