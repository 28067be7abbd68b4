#include "abfringe/sweep.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

namespace abfringe::sweep {

namespace {

constexpr std::string_view kCsvHeader = "omega,omega_t,f,dn_omega,dn_static,quad_error";

SweepRow compute_row(const SweepSpec& spec, double omega_t) {
    const auto& req = spec.request;
    const auto& g = req.geometry();
    SweepRow row;
    row.omega_t = omega_t;
    if (spec.mode == SweepMode::symmetric_f) {
        row.omega = omega_t / g.t_s;
        const auto fr = phase::f_ratio_detailed(omega_t, req.quadrature());
        row.f = fr.f;
        row.dn_static = phase::static_fringe_shift(req.drive(), req.constants(), req.charge());
        row.dn_omega = row.f * row.dn_static;
        // phi_U = -pi dn_static f
        row.quad_error = std::numbers::pi * std::abs(row.dn_static) * fr.error;
        row.converged = fr.converged;
    } else {
        row.omega = omega_t / g.max_transit();
        const auto res = phase::fringe_shift(req.with_omega(row.omega));
        row.f = res.f_ratio;
        row.dn_omega = res.dn_omega;
        row.dn_static = res.dn_static;
        row.quad_error = res.quad_error;
        row.converged = res.converged;
    }
    return row;
}

double parse_double(std::string_view field) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw InvalidInput("malformed number in table: '" + std::string(field) + "'");
    return v;
}

} // namespace

SweepMode parse_mode(std::string_view s) {
    if (s == "symmetric_f" || s == "symmetric")
        return SweepMode::symmetric_f;
    if (s == "full_geometry" || s == "full")
        return SweepMode::full_geometry;
    throw InvalidInput("unknown sweep mode: " + std::string(s));
}

TableFormat parse_format(std::string_view s) {
    if (s == "csv")
        return TableFormat::csv;
    if (s == "json")
        return TableFormat::json;
    if (s == "gnuplot" || s == "gnuplot_dat")
        return TableFormat::gnuplot_dat;
    throw InvalidInput("unknown table format: " + std::string(s));
}

std::string_view to_string(TableFormat f) {
    switch (f) {
    case TableFormat::csv:
        return "csv";
    case TableFormat::json:
        return "json";
    case TableFormat::gnuplot_dat:
        return "gnuplot";
    }
    return "csv";
}

void SweepSpec::validate() const {
    if (!(omega_t_min >= 0.0) || !std::isfinite(omega_t_min))
        throw InvalidInput("omega_t_min must be >= 0");
    if (!(step > 0.0) || !std::isfinite(step))
        throw InvalidInput("step must be > 0");
    if (!(omega_t_max >= omega_t_min) || !std::isfinite(omega_t_max))
        throw InvalidInput("omega_t_max must be >= omega_t_min");
}

std::vector<double> make_grid(const SweepSpec& spec) {
    spec.validate();
    const double span = spec.omega_t_max - spec.omega_t_min;
    const auto n = static_cast<long>(std::floor(span / spec.step + 1e-9));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i)
        grid.push_back(spec.omega_t_min + static_cast<double>(i) * spec.step);
    return grid;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    const std::vector<double> grid = make_grid(spec);
    std::vector<SweepRow> rows(grid.size());

    const unsigned workers =
        std::max(1u, std::min<unsigned>(spec.jobs, static_cast<unsigned>(grid.size())));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    // Each worker owns the slots it claims; no shared accumulation.
    auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                rows[i] = compute_row(spec, grid[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

SweepSpec fig2_preset(const phase::PhaseRequest& request) {
    return SweepSpec{.request = request,
                     .omega_t_min = 0.0,
                     .omega_t_max = 25.0,
                     .step = 0.05,
                     .mode = SweepMode::symmetric_f,
                     .format = TableFormat::gnuplot_dat,
                     .output_path = {},
                     .jobs = 1};
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_table(const std::vector<SweepRow>& rows, TableFormat format) {
    if (rows.empty())
        throw InvalidInput("no rows to emit");
    std::ostringstream os;
    switch (format) {
    case TableFormat::csv:
        os << kCsvHeader << '\n';
        for (const auto& r : rows) {
            os << format_number(r.omega) << ',' << format_number(r.omega_t) << ','
               << format_number(r.f) << ',' << format_number(r.dn_omega) << ','
               << format_number(r.dn_static) << ',' << format_number(r.quad_error) << '\n';
        }
        break;
    case TableFormat::gnuplot_dat:
        os << "# omega_t f\n";
        for (const auto& r : rows)
            os << format_number(r.omega_t) << ' ' << format_number(r.f) << '\n';
        break;
    case TableFormat::json: {
        auto arr = nlohmann::json::array();
        for (const auto& r : rows) {
            arr.push_back({{"omega", r.omega},
                           {"omega_t", r.omega_t},
                           {"f", r.f},
                           {"dn_omega", r.dn_omega},
                           {"dn_static", r.dn_static},
                           {"quad_error", r.quad_error}});
        }
        os << arr.dump(2) << '\n';
        break;
    }
    }
    return os.str();
}

void emit_table(const std::vector<SweepRow>& rows, TableFormat format,
                const std::filesystem::path& path) {
    const std::string text = format_table(rows, format);
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout)
            throw IoError("failed writing table to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing: " + std::strerror(errno));
    out << text;
    out.close();
    if (!out)
        throw IoError("failed writing '" + path.string() + "': " + std::strerror(errno));
}

std::vector<SweepRow> parse_csv_table(std::string_view text) {
    std::vector<SweepRow> rows;
    std::size_t pos = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        if (!header_seen) {
            if (line != kCsvHeader)
                throw InvalidInput("unexpected CSV header: " + std::string(line));
            header_seen = true;
            continue;
        }
        double v[6];
        std::size_t start = 0;
        for (int i = 0; i < 6; ++i) {
            const std::size_t comma = line.find(',', start);
            if ((i < 5) == (comma == std::string_view::npos))
                throw InvalidInput("expected 6 CSV fields: " + std::string(line));
            v[i] = parse_double(line.substr(start, i < 5 ? comma - start : std::string_view::npos));
            start = comma + 1;
        }
        rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5], true});
    }
    if (!header_seen)
        throw InvalidInput("empty CSV table");
    return rows;
}

std::string gnuplot_script(const std::filesystem::path& data_path) {
    std::ostringstream os;
    os << "set xlabel 'omega T'\n"
       << "set ylabel 'f(omega T)'\n"
       << "set xrange [0:25]\n"
       << "set grid\n"
       << "set zeroaxis\n"
       << "plot '" << data_path.generic_string() << "' using 1:2 with lines title 'f(omega T)'\n"
       << "pause -1\n";
    return os.str();
}

} // namespace abfringe::sweep
