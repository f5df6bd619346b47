#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibercav/atom_field.hpp"
#include "fibercav/steady_state.hpp"

namespace fibercav {

inline constexpr const char* kCodeVersion = "0.1.0";

enum class ScanAxis { radial, axial, spectral };
enum class SolverPath { exact, analytic, both };

// One declarative parameter scan: a figure scenario or a user-defined sweep.
// Scan coordinate units: radial scans use the surface gap r - a (m), axial
// scans the position z (m), spectral scans the detuning Delta_c (rad/s).
struct Scenario {
    std::string name;
    FiberSpec fiber;
    CavitySpec cavity;
    AtomSpec atom;
    double input_power = 0.0;      // W
    double detuning = 0.0;         // Delta_c (rad/s), fixed unless axis == spectral
    ScanAxis axis = ScanAxis::radial;
    double scan_start = 0.0;
    double scan_stop = 0.0;
    int points = 0;
    double radial_position = 0.0;  // r - a (m), used when axis != radial
    double axial_position = 0.0;   // z (m), used when axis != axial
    SolverPath solver = SolverPath::exact;
};

struct PathObservables {
    double n_cav = 0.0;
    double g2 = 0.0;  // NaN when undefined
    double p_e = 0.0;
    double p_out = 0.0;
    int n_max = 0;    // 0 on the analytic path
};

struct SweepRecord {
    double coord = 0.0;
    double G = 0.0;
    double gamma = 0.0;
    double delta_a = 0.0;
    double delta_c = 0.0;
    std::optional<PathObservables> exact;
    std::optional<PathObservables> analytic;
    std::string error;  // nonempty when this point failed; the sweep continues
};

struct SweepResult {
    Scenario scenario;
    std::vector<SweepRecord> records;
    std::string code_version;
    std::string timestamp;
};

// Scenario with its fiber mode solved once at omega_c.
struct ScenarioContext {
    Scenario scenario;
    GuidedModeSolution mode;
};

struct SystemPoint {
    SystemParams params;
    double probe_frequency = 0.0;
};

ScenarioContext prepare_scenario(const Scenario& s);

// Assembles the master-equation parameters for one atom position and detuning.
SystemPoint system_at(const ScenarioContext& ctx, double r_gap, double z,
                      double delta_c);

SweepResult run_scenario(const Scenario& s, int jobs = 0);

// The nine figure scenarios fig2..fig10 with caption-faithful parameters.
const std::vector<Scenario>& builtin_scenarios();

// Shared caption parameters (fiber, cesium atom, 10 cm cavity) with no scan.
Scenario scenario_defaults();

// Resolves a scenario by name; also accepts the fig2 panel aliases
// fig2a (1 pW) and fig2b (5 pW). Throws SimulationError for unknown names.
Scenario find_scenario(const std::string& name);

}  // namespace fibercav
