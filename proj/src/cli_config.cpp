#include "abfringe/cli_config.hpp"

#include <nlohmann/json.hpp>

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

namespace abfringe::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

void require_known(const std::string& key) {
    if (!known_keys().contains(key))
        throw InvalidInput("unknown configuration key: " + key);
}

double to_double(const std::string& key, const std::string& text) {
    const std::string_view t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        throw InvalidInput("invalid number for '" + key + "': '" + text + "'");
    return v;
}

long to_long(const std::string& key, const std::string& text) {
    const double v = to_double(key, text);
    if (v != static_cast<double>(static_cast<long>(v)))
        throw InvalidInput("expected an integer for '" + key + "': '" + text + "'");
    return static_cast<long>(v);
}

double positive(const std::string& key, const std::string& text) {
    const double v = to_double(key, text);
    if (!(v > 0.0))
        throw InvalidInput(key + " must be positive");
    return v;
}

void apply(Settings& s, const std::string& key, const std::string& value) {
    require_known(key);
    if (key == "l1") s.l1 = to_double(key, value);
    else if (key == "l2") s.l2 = to_double(key, value);
    else if (key == "b") s.b = to_double(key, value);
    else if (key == "ts") s.ts = to_double(key, value);
    else if (key == "td") s.td = to_double(key, value);
    else if (key == "i0") s.i0 = to_double(key, value);
    else if (key == "radius") s.radius = to_double(key, value);
    else if (key == "omega") s.omega = to_double(key, value);
    else if (key == "lambda") s.lambda = to_double(key, value);
    else if (key == "flux") s.flux = to_double(key, value);
    else if (key == "energy-ev") s.energy_ev = to_double(key, value);
    else if (key == "mass") s.mass = to_double(key, value);
    else if (key == "charge") s.charge = to_double(key, value);
    else if (key == "omega-t-min") s.omega_t_min = to_double(key, value);
    else if (key == "omega-t-max") s.omega_t_max = to_double(key, value);
    else if (key == "step") s.step = to_double(key, value);
    else if (key == "format") s.format = sweep::parse_format(trim(value));
    else if (key == "mode") s.mode = sweep::parse_mode(trim(value));
    else if (key == "out") s.out = std::string(trim(value));
    else if (key == "rel-tol") s.rel_tol = to_double(key, value);
    else if (key == "abs-tol") s.abs_tol = to_double(key, value);
    else if (key == "steps") s.steps = to_long(key, value);
    else if (key == "fluct-threshold") s.fluct_threshold = positive(key, value);
    else if (key == "near-field-threshold") s.near_field_threshold = positive(key, value);
    else if (key == "jobs") {
        const long j = to_long(key, value);
        if (j < 1)
            throw InvalidInput("jobs must be >= 1");
        s.jobs = static_cast<unsigned>(j);
    }
}

} // namespace

const std::map<std::string, std::string>& known_keys() {
    static const std::map<std::string, std::string> keys = {
        {"l1", "source-to-barrier distance (m)"},
        {"l2", "barrier-to-screen distance (m)"},
        {"b", "slit half-separation (m)"},
        {"ts", "source-to-slit transit time (s)"},
        {"td", "slit-to-screen transit time (s)"},
        {"i0", "surface current amplitude per unit length (A/m)"},
        {"radius", "solenoid radius (m)"},
        {"omega", "drive angular frequency (rad/s)"},
        {"lambda", "order parameter in (0, 1]"},
        {"flux", "lambda * Phi_s override (Wb)"},
        {"energy-ev", "particle kinetic energy (eV)"},
        {"mass", "particle mass (kg)"},
        {"charge", "particle charge (C)"},
        {"omega-t-min", "sweep lower bound of omega T"},
        {"omega-t-max", "sweep upper bound of omega T"},
        {"step", "sweep step in omega T"},
        {"format", "csv | json | gnuplot"},
        {"mode", "symmetric_f | full_geometry"},
        {"out", "output path, '-' for stdout"},
        {"jobs", "worker threads for sweeps"},
        {"rel-tol", "quadrature relative tolerance"},
        {"abs-tol", "quadrature absolute tolerance"},
        {"steps", "trapezoid steps for the time-domain oracle"},
        {"fluct-threshold", "regime: warn when the fluctuation ratio reaches this"},
        {"near-field-threshold", "regime: warn when omega r_max / c reaches this"},
    };
    return keys;
}

ConfigMap parse_config(std::string_view text) {
    ConfigMap out;
    const std::string_view body = trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(body);
        } catch (const nlohmann::json::parse_error& e) {
            throw InvalidInput(std::string("malformed JSON config: ") + e.what());
        }
        for (const auto& [key, val] : j.items()) {
            require_known(key);
            if (val.is_string())
                out[key] = val.get<std::string>();
            else if (val.is_number_integer())
                out[key] = std::to_string(val.get<long long>());
            else if (val.is_number())
                out[key] = sweep::format_number(val.get<double>());
            else
                throw InvalidInput("config value for '" + key + "' must be a number or string");
        }
        return out;
    }

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw InvalidInput("config line " + std::to_string(line_no) + ": expected key = value");
        std::string key{trim(line.substr(0, eq))};
        if (key.starts_with("--"))
            key.erase(0, 2);
        require_known(key);
        out[key] = std::string(trim(line.substr(eq + 1)));
    }
    return out;
}

ConfigMap load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw sweep::IoError("cannot read config '" + path.string() + "': " + std::strerror(errno));
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

Settings resolve_settings(const ConfigMap& file, const ConfigMap& flags) {
    Settings s;
    for (const auto& [k, v] : file)
        apply(s, k, v);
    for (const auto& [k, v] : flags)
        apply(s, k, v);
    return s;
}

phase::PhaseRequest build_request(const Settings& s) {
    const auto k = PhysicalConstants::codata2018();
    const auto geom = make_geometry(s.l1, s.l2, s.b, s.ts, s.td);
    const auto drive = s.flux ? drive_from_flux(*s.flux, s.radius, s.omega, s.lambda, k)
                              : make_drive(s.i0, s.radius, s.omega, s.lambda, k);
    const auto particle = make_particle(s.mass.value_or(k.m_electron), s.charge.value_or(k.e_charge),
                                        s.energy_ev * k.e_charge, k);
    quad::QuadratureSpec q;
    q.rel_tol = s.rel_tol;
    q.abs_tol = s.abs_tol;
    return phase::PhaseRequest::create(geom, drive, particle, q, k);
}

} // namespace abfringe::cli
