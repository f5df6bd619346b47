#include "fibercav/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>

#include "fibercav/constants.hpp"

namespace fibercav {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& value, int line) {
    const char* begin = value.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || trim(end)[0] != '\0')
        throw ConfigError(line, "not a number: '" + value + "'");
    return v;
}

int parse_int(const std::string& value, int line) {
    const double v = parse_number(value, line);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError(line, "not an integer: '" + value + "'");
    return i;
}

struct AtomComponents {
    double wavelength_nm;
    double linewidth_mhz;
    double c3g;
    double c3e;
};

AtomComponents atom_components(const AtomSpec& atom) {
    return {2.0 * kPi * kSpeedOfLight / atom.bare_frequency / 1e-9,
            atom.natural_linewidth / (2.0 * kPi * 1e6),
            atom.c3_ground / (2.0 * kPi * 1e-15),
            atom.c3_excited / (2.0 * kPi * 1e-15)};
}

struct Pending {
    double value = 0.0;
    int line = 0;
    bool set = false;
};

struct ParseState {
    Scenario scenario;
    bool has_base = false;
    Pending start, stop;
};

void apply_setting(ParseState& st, const std::string& key, const std::string& value,
                   int line) {
    Scenario& s = st.scenario;
    if (key == "fiber.core_radius_nm") {
        const double v = parse_number(value, line);
        if (v <= 0.0) throw ConfigError(line, "fiber.core_radius_nm must be > 0");
        s.fiber.core_radius = v * 1e-9;
    } else if (key == "fiber.core_index") {
        const double v = parse_number(value, line);
        if (v <= 1.0) throw ConfigError(line, "fiber.core_index must be > 1");
        s.fiber.core_index = v;
    } else if (key == "fiber.clad_index") {
        const double v = parse_number(value, line);
        if (v < 1.0) throw ConfigError(line, "fiber.clad_index must be >= 1");
        s.fiber.clad_index = v;
    } else if (key == "cavity.length_m") {
        const double v = parse_number(value, line);
        if (v <= 0.0) throw ConfigError(line, "cavity.length_m must be > 0");
        s.cavity.length = v;
    } else if (key == "cavity.reflectivity_sq") {
        const double v = parse_number(value, line);
        if (!(v > 0.0 && v < 1.0))
            throw ConfigError(line, "cavity.reflectivity_sq must lie in (0, 1)");
        s.cavity.reflectivity = std::sqrt(v);
    } else if (key == "cavity.resonance_order") {
        s.cavity.resonance_order = parse_int(value, line);
    } else if (key == "atom.wavelength_nm" || key == "atom.linewidth_MHz" ||
               key == "atom.C3g_kHz_um3" || key == "atom.C3e_kHz_um3") {
        AtomComponents c = atom_components(s.atom);
        const double v = parse_number(value, line);
        if (key == "atom.wavelength_nm") {
            if (v <= 0.0) throw ConfigError(line, "atom.wavelength_nm must be > 0");
            c.wavelength_nm = v;
        } else if (key == "atom.linewidth_MHz") {
            if (v <= 0.0) throw ConfigError(line, "atom.linewidth_MHz must be > 0");
            c.linewidth_mhz = v;
        } else if (key == "atom.C3g_kHz_um3") {
            if (v <= 0.0) throw ConfigError(line, "atom.C3g_kHz_um3 must be > 0");
            c.c3g = v;
        } else {
            if (v <= 0.0) throw ConfigError(line, "atom.C3e_kHz_um3 must be > 0");
            c.c3e = v;
        }
        s.atom = AtomSpec::make(c.wavelength_nm * 1e-9, c.linewidth_mhz, c.c3g, c.c3e);
        s.cavity.resonance_frequency = s.atom.bare_frequency;
    } else if (key == "drive.power_pW") {
        const double v = parse_number(value, line);
        if (v < 0.0) throw ConfigError(line, "drive.power_pW must be >= 0");
        s.input_power = v * 1e-12;
    } else if (key == "drive.detuning_MHz") {
        s.detuning = 2.0 * kPi * parse_number(value, line) * 1e6;
    } else if (key == "scan.axis") {
        if (value == "radial") s.axis = ScanAxis::radial;
        else if (value == "axial") s.axis = ScanAxis::axial;
        else if (value == "spectral") s.axis = ScanAxis::spectral;
        else throw ConfigError(line, "scan.axis must be radial, axial or spectral");
    } else if (key == "scan.start") {
        st.start = {parse_number(value, line), line, true};
    } else if (key == "scan.stop") {
        st.stop = {parse_number(value, line), line, true};
    } else if (key == "scan.points") {
        const int v = parse_int(value, line);
        if (v < 2) throw ConfigError(line, "scan.points must be >= 2");
        s.points = v;
    } else if (key == "position.radial_nm") {
        const double v = parse_number(value, line);
        if (v * 1e-9 < kSurfaceCutoff)
            throw ConfigError(line, "position.radial_nm must be >= 5 (surface cutoff)");
        s.radial_position = v * 1e-9;
    } else if (key == "position.axial_nm") {
        s.axial_position = parse_number(value, line) * 1e-9;
    } else if (key == "solver") {
        if (value == "exact") s.solver = SolverPath::exact;
        else if (value == "analytic") s.solver = SolverPath::analytic;
        else if (value == "both") s.solver = SolverPath::both;
        else throw ConfigError(line, "solver must be exact, analytic or both");
    } else {
        throw ConfigError(line, "unknown key: '" + key + "'");
    }
}

double to_scan_units(const Scenario& s, double display) {
    return s.axis == ScanAxis::spectral ? 2.0 * kPi * display * 1e6 : display * 1e-9;
}

double from_scan_units(const Scenario& s, double value) {
    return s.axis == ScanAxis::spectral ? value / (2.0 * kPi * 1e6) : value / 1e-9;
}

void finalize(ParseState& st) {
    Scenario& s = st.scenario;
    if (!st.has_base) {
        if (!st.start.set) throw ConfigError(0, "missing required key: scan.start");
        if (!st.stop.set) throw ConfigError(0, "missing required key: scan.stop");
        if (s.points == 0) throw ConfigError(0, "missing required key: scan.points");
        s.name = "custom";
    }
    if (st.start.set) s.scan_start = to_scan_units(s, st.start.value);
    if (st.stop.set) s.scan_stop = to_scan_units(s, st.stop.value);
    if (!(s.scan_start < s.scan_stop))
        throw ConfigError(std::max(st.start.line, st.stop.line),
                          "scan range needs start < stop");
    if (s.axis == ScanAxis::radial && s.scan_start < kSurfaceCutoff)
        throw ConfigError(st.start.line, "radial scans must start at least 5 nm "
                                         "above the surface");
    if (s.fiber.core_index <= s.fiber.clad_index)
        throw ConfigError(0, "fiber.core_index must exceed fiber.clad_index");
    if (s.atom.c3_excited <= s.atom.c3_ground)
        throw ConfigError(0, "atom.C3e_kHz_um3 must exceed atom.C3g_kHz_um3");
}

struct Line {
    std::string key, value;
    int number;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream stream(text);
    std::string raw;
    int number = 0;
    while (std::getline(stream, raw)) {
        ++number;
        const std::string stripped = trim(raw);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(number, "expected key=value");
        lines.push_back({trim(stripped.substr(0, eq)),
                         trim(stripped.substr(eq + 1)), number});
    }
    return lines;
}

const char* axis_name(ScanAxis axis) {
    switch (axis) {
        case ScanAxis::radial: return "radial";
        case ScanAxis::axial: return "axial";
        default: return "spectral";
    }
}

const char* solver_name(SolverPath solver) {
    switch (solver) {
        case SolverPath::exact: return "exact";
        case SolverPath::analytic: return "analytic";
        default: return "both";
    }
}

std::string sanitize(std::string text) {
    std::replace(text.begin(), text.end(), ',', ';');
    std::replace(text.begin(), text.end(), '\n', ' ');
    return text;
}

}  // namespace

Scenario parse_config(const std::string& text,
                      const std::vector<std::string>& overrides) {
    std::vector<Line> lines = tokenize(text);
    for (const std::string& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ConfigError(0, "expected key=value, got '" + item + "'");
        lines.push_back({trim(item.substr(0, eq)), trim(item.substr(eq + 1)), 0});
    }

    ParseState st;
    for (const Line& line : lines) {
        if (line.key != "scenario") continue;
        if (st.has_base)
            throw ConfigError(line.number, "duplicate scenario key");
        try {
            st.scenario = find_scenario(line.value);
        } catch (const SimulationError& err) {
            throw ConfigError(line.number, err.what());
        }
        st.has_base = true;
    }
    if (!st.has_base) {
        if (std::none_of(lines.begin(), lines.end(),
                         [](const Line& l) { return l.key == "drive.power_pW"; }))
            throw ConfigError(0, "missing required key: drive.power_pW (or a "
                                 "scenario= base)");
        st.scenario = scenario_defaults();
        st.scenario.points = 0;
    }
    for (const Line& line : lines) {
        if (line.key == "scenario") continue;
        apply_setting(st, line.key, line.value, line.number);
    }
    finalize(st);
    return st.scenario;
}

std::string format_value(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const SweepResult& result) {
    const Scenario& s = result.scenario;
    const AtomComponents atom = atom_components(s.atom);
    const bool both = s.solver == SolverPath::both;
    const double r2 = s.cavity.reflectivity * s.cavity.reflectivity;

    os << "## fibercav " << result.code_version << "\n";
    os << "## generated " << result.timestamp << "\n";
    os << "## frequencies in this block are ordinary (MHz); CSV rate columns are "
          "angular (rad/s)\n";
    os << "## columns: coord ["
       << (s.axis == ScanAxis::spectral ? "MHz" : "nm")
       << "], G gamma delta_a delta_c [rad/s], P_out [W]\n";
    const bool builtin_name = [&] {
        try {
            find_scenario(s.name);
            return true;
        } catch (const SimulationError&) {
            return false;
        }
    }();
    if (builtin_name) os << "# scenario = " << s.name << "\n";
    os << "# fiber.core_radius_nm = " << format_value(s.fiber.core_radius / 1e-9) << "\n";
    os << "# fiber.core_index = " << format_value(s.fiber.core_index) << "\n";
    os << "# fiber.clad_index = " << format_value(s.fiber.clad_index) << "\n";
    os << "# cavity.length_m = " << format_value(s.cavity.length) << "\n";
    os << "# cavity.reflectivity_sq = " << format_value(r2) << "\n";
    os << "# cavity.resonance_order = " << s.cavity.resonance_order << "\n";
    os << "# atom.wavelength_nm = " << format_value(atom.wavelength_nm) << "\n";
    os << "# atom.linewidth_MHz = " << format_value(atom.linewidth_mhz) << "\n";
    os << "# atom.C3g_kHz_um3 = " << format_value(atom.c3g) << "\n";
    os << "# atom.C3e_kHz_um3 = " << format_value(atom.c3e) << "\n";
    os << "# drive.power_pW = " << format_value(s.input_power / 1e-12) << "\n";
    os << "# drive.detuning_MHz = " << format_value(s.detuning / (2.0 * kPi * 1e6))
       << "\n";
    os << "# scan.axis = " << axis_name(s.axis) << "\n";
    os << "# scan.start = " << format_value(from_scan_units(s, s.scan_start)) << "\n";
    os << "# scan.stop = " << format_value(from_scan_units(s, s.scan_stop)) << "\n";
    os << "# scan.points = " << s.points << "\n";
    os << "# position.radial_nm = " << format_value(s.radial_position / 1e-9) << "\n";
    os << "# position.axial_nm = " << format_value(s.axial_position / 1e-9) << "\n";
    os << "# solver = " << solver_name(s.solver) << "\n";

    os << "coord,G,gamma,delta_a,delta_c,N_cav,g2,P_e,P_out,n_max,path";
    if (both) os << ",N_cav_analytic,g2_analytic,P_e_analytic,P_out_analytic";
    os << "\n";

    for (const SweepRecord& rec : result.records) {
        const PathObservables* primary =
            rec.exact ? &*rec.exact : (rec.analytic ? &*rec.analytic : nullptr);
        os << format_value(from_scan_units(s, rec.coord)) << ','
           << format_value(rec.G) << ',' << format_value(rec.gamma) << ','
           << format_value(rec.delta_a) << ',' << format_value(rec.delta_c) << ',';
        if (primary) {
            os << format_value(primary->n_cav) << ',' << format_value(primary->g2)
               << ',' << format_value(primary->p_e) << ','
               << format_value(primary->p_out) << ',' << primary->n_max << ',';
        } else {
            os << "0,0,0,0,0,";
        }
        if (!rec.error.empty())
            os << "error:" << sanitize(rec.error);
        else if (rec.exact && rec.analytic)
            os << "both";
        else if (rec.exact)
            os << "exact";
        else
            os << "analytic";
        if (both) {
            if (rec.analytic && rec.exact) {
                os << ',' << format_value(rec.analytic->n_cav) << ','
                   << format_value(rec.analytic->g2) << ','
                   << format_value(rec.analytic->p_e) << ','
                   << format_value(rec.analytic->p_out);
            } else {
                os << ",0,0,0,0";
            }
        }
        os << "\n";
    }
}

void write_plot_script(std::ostream& os, const std::string& csv_path,
                       const SweepResult& result) {
    const Scenario& s = result.scenario;
    const char* xlabel = s.axis == ScanAxis::spectral
                             ? "Delta_c / 2pi  [MHz]"
                             : (s.axis == ScanAxis::radial ? "r - a  [nm]" : "z  [nm]");
    os << "# gnuplot script for " << csv_path << "\n"
       << "set datafile separator ','\n"
       << "set datafile commentschars '#'\n"
       << "set xlabel '" << xlabel << "'\n"
       << "set terminal pngcairo size 900,900\n"
       << "set output '" << s.name << ".png'\n"
       << "set multiplot layout 3,1 title '" << s.name << "'\n"
       << "set ylabel 'N_cav'\n"
       << "plot '" << csv_path << "' using 1:6 with lines notitle\n"
       << "set ylabel 'g2'\n"
       << "plot '" << csv_path << "' using 1:7 with lines notitle\n"
       << "set ylabel 'P_e'\n"
       << "plot '" << csv_path << "' using 1:8 with lines notitle\n"
       << "unset multiplot\n";
}

double max_exact_analytic_gap(const SweepResult& result) {
    double gap = 0.0;
    for (const SweepRecord& rec : result.records) {
        if (!rec.exact || !rec.analytic || !rec.error.empty()) continue;
        const auto rel = [](double exact, double approx) {
            return std::abs(exact - approx) / std::max(std::abs(exact), 1e-300);
        };
        gap = std::max({gap, rel(rec.exact->n_cav, rec.analytic->n_cav),
                        rel(rec.exact->p_e, rec.analytic->p_e)});
    }
    return gap;
}

}  // namespace fibercav
