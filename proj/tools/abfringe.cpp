// abfringe: fringe shifts of a two-slit interferometer around an AC solenoid.

#include "abfringe/cli_config.hpp"
#include "abfringe/phase_engine.hpp"
#include "abfringe/regime.hpp"
#include "abfringe/sweep.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

namespace {

using namespace abfringe;
using sweep::format_number;

struct Context {
    cli::ConfigMap flags;
    std::string config_path;
    std::set<std::string> given; // keys actually passed on the command line
};

cli::Settings load_settings(const Context& ctx) {
    cli::ConfigMap file;
    if (!ctx.config_path.empty()) {
        file = cli::load_config_file(ctx.config_path);
    } else if (const char* env = std::getenv("ABFRINGE_CONFIG"); env && *env) {
        file = cli::load_config_file(env);
    }
    cli::ConfigMap flags;
    for (const auto& key : ctx.given)
        flags[key] = ctx.flags.at(key);
    return cli::resolve_settings(file, flags);
}

int cmd_steady(const cli::Settings& s) {
    const auto req = cli::build_request(s);
    const double dn = phase::static_fringe_shift(req.drive(), req.constants(), req.charge());
    if (s.format == sweep::TableFormat::json) {
        nlohmann::json j = {{"lambda_flux", req.drive().lambda_flux()}, {"dn_static", dn}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "lambda_flux " << format_number(req.drive().lambda_flux()) << " Wb\n"
                  << "dn_static " << format_number(dn) << '\n';
    }
    return sweep::kExitOk;
}

int cmd_shift(const cli::Settings& s) {
    const auto req = cli::build_request(s);
    const auto r = phase::fringe_shift(req);
    if (s.format == sweep::TableFormat::json) {
        nlohmann::json j = {{"omega", req.drive().omega()}, {"phi_u", r.phi_u},
                            {"phi_l", r.phi_l},            {"dn_omega", r.dn_omega},
                            {"dn_static", r.dn_static},    {"f_ratio", r.f_ratio},
                            {"quad_error", r.quad_error},  {"converged", r.converged}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "omega " << format_number(req.drive().omega()) << '\n'
                  << "phi_u " << format_number(r.phi_u) << '\n'
                  << "phi_l " << format_number(r.phi_l) << '\n'
                  << "dn_omega " << format_number(r.dn_omega) << '\n'
                  << "dn_static " << format_number(r.dn_static) << '\n'
                  << "f_ratio " << format_number(r.f_ratio) << '\n'
                  << "quad_error " << format_number(r.quad_error) << '\n'
                  << "converged " << (r.converged ? "yes" : "no") << '\n';
    }
    return r.converged ? sweep::kExitOk : sweep::kExitNotConverged;
}

int write_rows(const std::vector<sweep::SweepRow>& rows, sweep::TableFormat format,
               const std::string& out) {
    sweep::emit_table(rows, format, out);
    int bad = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].converged) {
            std::cerr << "warning: row " << i << " (omega_t = " << rows[i].omega_t
                      << ") did not converge\n";
            ++bad;
        }
    }
    return bad ? sweep::kExitNotConverged : sweep::kExitOk;
}

int cmd_sweep(const cli::Settings& s) {
    sweep::SweepSpec spec{.request = cli::build_request(s),
                          .omega_t_min = s.omega_t_min,
                          .omega_t_max = s.omega_t_max,
                          .step = s.step,
                          .mode = s.mode,
                          .format = s.format,
                          .output_path = s.out,
                          .jobs = s.jobs};
    return write_rows(sweep::run_sweep(spec), spec.format, s.out);
}

int cmd_fig2(const cli::Settings& s, bool format_given) {
    auto spec = sweep::fig2_preset(cli::build_request(s));
    spec.jobs = s.jobs;
    if (format_given)
        spec.format = s.format;
    const int rc = write_rows(sweep::run_sweep(spec), spec.format, s.out);
    if (s.out != "-" && spec.format == sweep::TableFormat::gnuplot_dat) {
        const std::string script_path = s.out + ".gp";
        std::ofstream gp(script_path);
        gp << sweep::gnuplot_script(s.out);
        if (!gp)
            throw sweep::IoError("cannot write '" + script_path + "'");
    }
    return rc;
}

int cmd_regime(const cli::Settings& s) {
    const auto rep = regime::build_report(cli::build_request(s),
                                          {.fluctuation = s.fluct_threshold, .near_field = s.near_field_threshold});
    if (s.format == sweep::TableFormat::json) {
        nlohmann::json j;
        j["dn_static"] = rep.dn_static;
        j["near_field_ratio"] = rep.near_field_ratio;
        j["r_max_m"] = rep.r_max;
        j["r_max_cm"] = rep.r_max * regime::kCmPerMetre;
        j["geometry_clear"] = rep.geometry_clear;
        auto put = [&](const char* name, const std::optional<double>& v, double factor,
                       const char* si, const char* cgs) {
            if (v) {
                j[std::string(name) + "_" + si] = *v;
                j[std::string(name) + "_" + cgs] = *v * factor;
            }
        };
        put("momentum", rep.momentum, regime::kGramCmPerKgMetre, "kg_m_s", "g_cm_s");
        put("de_broglie", rep.de_broglie, regime::kCmPerMetre, "m", "cm");
        put("fluct_y_scale", rep.fluct_y_scale, regime::kCmPerMetre, "m", "cm");
        if (rep.fluct_ratio)
            j["fluct_ratio"] = *rep.fluct_ratio;
        for (const auto& f : rep.flags)
            j["flags"][f.name] = {{"value", f.value}, {"threshold", f.threshold}, {"pass", f.pass}};
        j["absent"] = rep.absent;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << regime::render_text(rep);
    }
    return sweep::kExitOk;
}

int cmd_oracle(const cli::Settings& s) {
    const auto req = cli::build_request(s);
    const auto primary = phase::phase_upper(req);
    const double oracle = phase::phase_oracle_time_domain(req, s.steps);
    const double diff = std::abs(primary.phi - oracle);
    const double tol = std::max(1e-8, 1e-6 * std::abs(primary.phi));
    const bool ok = diff <= tol && primary.converged;
    std::cout << "phi_u_primary " << format_number(primary.phi) << '\n'
              << "phi_u_oracle " << format_number(oracle) << '\n'
              << "discrepancy " << format_number(diff) << '\n'
              << "tolerance " << format_number(tol) << '\n'
              << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? sweep::kExitOk : sweep::kExitNotConverged;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-varying Aharonov-Bohm fringe shift calculator"};
    app.require_subcommand(1);
    Context ctx;
    for (const auto& [key, help] : cli::known_keys())
        app.add_option("--" + key, ctx.flags[key], help);
    app.add_option("--config", ctx.config_path, "key=value or JSON config file");
    auto* steady = app.add_subcommand("steady", "print the steady fringe shift dn_S");
    auto* shift = app.add_subcommand("shift", "phases and fringe shift at one omega");
    auto* sweep_cmd = app.add_subcommand("sweep", "fringe shift over an omega T grid");
    auto* fig2 = app.add_subcommand("fig2", "f(omega T) on [0, 25], step 0.05, gnuplot data");
    auto* regime_cmd = app.add_subcommand("regime", "approximation-regime diagnostics");
    auto* oracle = app.add_subcommand("oracle", "primary phase vs time-domain trapezoid oracle");
    for (auto* sub : {steady, shift, sweep_cmd, fig2, regime_cmd, oracle})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : sweep::kExitInvalidInput;
    }

    for (const auto& [key, help] : cli::known_keys()) {
        if (app.count("--" + key) > 0)
            ctx.given.insert(key);
    }

    try {
        const cli::Settings s = load_settings(ctx);
        if (*steady) return cmd_steady(s);
        if (*shift) return cmd_shift(s);
        if (*sweep_cmd) return cmd_sweep(s);
        if (*fig2) return cmd_fig2(s, ctx.given.contains("format"));
        if (*regime_cmd) return cmd_regime(s);
        if (*oracle) return cmd_oracle(s);
    } catch (const sweep::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return sweep::kExitIoError;
    } catch (const abfringe::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return sweep::kExitInvalidInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return sweep::kExitInvalidInput;
    }
    return sweep::kExitInvalidInput;
}
