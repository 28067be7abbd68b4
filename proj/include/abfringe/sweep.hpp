#pragma once

#include "abfringe/phase_engine.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace abfringe::sweep {

/// Process exit codes shared by the CLI.
enum ExitCode : int {
    kExitOk = 0,
    kExitNotConverged = 1,
    kExitIoError = 2,
    kExitInvalidInput = 3,
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SweepMode { symmetric_f, full_geometry };
enum class TableFormat { csv, json, gnuplot_dat };

SweepMode parse_mode(std::string_view s);
TableFormat parse_format(std::string_view s);
std::string_view to_string(TableFormat f);

struct SweepSpec {
    phase::PhaseRequest request;
    double omega_t_min = 0.0;
    double omega_t_max = 25.0;
    double step = 0.05;
    SweepMode mode = SweepMode::symmetric_f;
    TableFormat format = TableFormat::csv;
    std::filesystem::path output_path; // empty or "-" means stdout
    unsigned jobs = 1;

    /// Throws InvalidInput on omega_t_min < 0, step <= 0, or max < min.
    void validate() const;
};

struct SweepRow {
    double omega = 0.0;
    double omega_t = 0.0;
    double f = 0.0;
    double dn_omega = 0.0;
    double dn_static = 0.0;
    double quad_error = 0.0;
    bool converged = true; // not serialised; surfaces through the exit code
};

/// Grid points omega_t_min + i * step up to omega_t_max (inclusive, with a
/// step * 1e-9 slack). omega_t_min == omega_t_max yields the single point.
std::vector<double> make_grid(const SweepSpec& spec);

/// One row per grid point, in grid order. omega_t is converted to omega with the
/// source transit time t_s in symmetric_f mode and with max(t_s, t_d) in
/// full_geometry mode. Rows are computed on up to spec.jobs threads; the output
/// does not depend on the thread count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// The two-column gnuplot preset: symmetric_f on [0, 25] with step 0.05.
SweepSpec fig2_preset(const phase::PhaseRequest& request);

/// Serialises rows. CSV header is `omega,omega_t,f,dn_omega,dn_static,quad_error`;
/// CSV and gnuplot numbers use 17 significant digits. Throws InvalidInput on empty rows.
std::string format_table(const std::vector<SweepRow>& rows, TableFormat format);

/// Writes format_table to `path` ("-" or empty for stdout). Throws IoError naming
/// the path and cause when the file cannot be written.
void emit_table(const std::vector<SweepRow>& rows, TableFormat format,
                const std::filesystem::path& path);

/// Parses a CSV produced by format_table. Throws InvalidInput on malformed input.
std::vector<SweepRow> parse_csv_table(std::string_view text);

/// A gnuplot script that plots `data_path` as f against omega T.
std::string gnuplot_script(const std::filesystem::path& data_path);

/// "%.17g".
std::string format_number(double v);

} // namespace abfringe::sweep
