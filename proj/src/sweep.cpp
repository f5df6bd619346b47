#include "fibercav/sweep.hpp"

#include <atomic>
#include <functional>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "fibercav/constants.hpp"
#include "fibercav/weak_drive.hpp"

namespace fibercav {

namespace {

void parallel_for(int n, int jobs, const std::function<void(int)>& body) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min(jobs, n));
    if (jobs == 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (int i; (i = next.fetch_add(1)) < n;) body(i);
        });
    for (auto& th : pool) th.join();
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ",
                  tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                  tm.tm_min, tm.tm_sec);
    return buf;
}

PathObservables to_path_observables(const Observables& obs, int n_max) {
    PathObservables p;
    p.n_cav = obs.n_cav;
    p.g2 = obs.g2 ? *obs.g2 : std::numeric_limits<double>::quiet_NaN();
    p.p_e = obs.p_e;
    p.p_out = obs.p_out;
    p.n_max = n_max;
    return p;
}

Scenario common_base() {
    Scenario s;
    s.fiber = FiberSpec{200e-9, 1.45, 1.0};
    s.atom = AtomSpec::cesium_d2();
    s.cavity = CavitySpec::make(0.9, 0.1, s.atom.bare_frequency, 0);
    s.points = 200;
    s.axial_position = 0.0;  // antinode for even resonance order
    s.radial_position = 200e-9;
    s.solver = SolverPath::exact;
    return s;
}

}  // namespace

ScenarioContext prepare_scenario(const Scenario& s) {
    return {s, solve_dispersion(s.fiber, s.cavity.resonance_frequency)};
}

SystemPoint system_at(const ScenarioContext& ctx, double r_gap, double z,
                      double delta_c) {
    const Scenario& s = ctx.scenario;
    const AtomPosition pos{s.fiber.core_radius + r_gap, 0.0, z};
    const DriveSpec drive{s.cavity.resonance_frequency + delta_c, s.input_power};
    const double vg = ctx.mode.group_velocity();

    SystemPoint point;
    point.probe_frequency = drive.probe_frequency;
    point.params.G = coupling_strength(ctx.mode, s.cavity, s.atom, pos);
    point.params.gamma = total_decay_rate(ctx.mode, s.atom, pos.r);
    point.params.kappa = damping_rate(s.cavity, vg);
    point.params.eta = pumping_rate(s.cavity, drive, vg);
    point.params.delta_a = detuning_atom(drive, s.atom, s.fiber, pos);
    point.params.delta_c = delta_c;
    return point;
}

SweepResult run_scenario(const Scenario& s, int jobs) {
    if (s.points < 2 || !(s.scan_start < s.scan_stop))
        throw SimulationError("scan range needs start < stop and at least 2 points");

    const ScenarioContext ctx = prepare_scenario(s);
    SweepResult result;
    result.scenario = s;
    result.code_version = kCodeVersion;
    result.timestamp = utc_timestamp();
    result.records.resize(s.points);

    const double step = (s.scan_stop - s.scan_start) / (s.points - 1);
    parallel_for(s.points, jobs, [&](int i) {
        SweepRecord& rec = result.records[i];
        rec.coord = s.scan_start + i * step;
        const double r_gap = s.axis == ScanAxis::radial ? rec.coord : s.radial_position;
        const double z = s.axis == ScanAxis::axial ? rec.coord : s.axial_position;
        const double delta_c = s.axis == ScanAxis::spectral ? rec.coord : s.detuning;
        try {
            const SystemPoint point = system_at(ctx, r_gap, z, delta_c);
            rec.G = point.params.G;
            rec.gamma = point.params.gamma;
            rec.delta_a = point.params.delta_a;
            rec.delta_c = point.params.delta_c;
            if (s.solver != SolverPath::analytic) {
                const SteadyStateResult ss =
                    solve_steady_auto(point.params, point.probe_frequency);
                rec.exact = to_path_observables(ss.obs, ss.n_max_used);
            }
            if (s.solver != SolverPath::exact) {
                const WeakDriveSolution wd = weak_drive_solution(point.params);
                PathObservables p;
                p.n_cav = wd.n_cav;
                p.g2 = 1.0;  // the linearized state is coherent
                p.p_e = wd.p_e;
                p.p_out = transmitted_power(point.params.kappa,
                                            point.probe_frequency, wd.n_cav);
                p.n_max = 0;
                rec.analytic = p;
            }
        } catch (const SimulationError& err) {
            rec.error = err.what();
        }
    });
    return result;
}

const std::vector<Scenario>& builtin_scenarios() {
    static const std::vector<Scenario> catalog = [] {
        const Scenario base = common_base();
        const double gamma0 = base.atom.natural_linewidth;
        const double beta =
            solve_dispersion(base.fiber, base.cavity.resonance_frequency)
                .propagation_constant();
        const double period = kPi / beta;  // intensity period of the standing wave
        const double detuned = 2.0 * kPi * 30e6;

        std::vector<Scenario> list;
        auto radial = [&](std::string name, double power_pw) {
            Scenario s = base;
            s.name = std::move(name);
            s.input_power = power_pw * 1e-12;
            s.axis = ScanAxis::radial;
            s.scan_start = 5e-9;
            s.scan_stop = 600e-9;
            return s;
        };
        auto axial = [&](std::string name) {
            Scenario s = base;
            s.name = std::move(name);
            s.input_power = 10e-12;
            s.axis = ScanAxis::axial;
            s.scan_start = 0.0;
            s.scan_stop = period;
            return s;
        };
        auto spectral = [&](std::string name) {
            Scenario s = base;
            s.name = std::move(name);
            s.input_power = 10e-12;
            s.axis = ScanAxis::spectral;
            s.scan_start = -8.0 * gamma0;
            s.scan_stop = 8.0 * gamma0;
            return s;
        };

        Scenario fig2 = radial("fig2", 1.0);
        fig2.solver = SolverPath::both;
        list.push_back(fig2);
        list.push_back(radial("fig3", 10.0));
        list.push_back(axial("fig4"));
        list.push_back(spectral("fig5"));

        Scenario fig6 = radial("fig6", 10.0);
        fig6.detuning = detuned;
        list.push_back(fig6);
        Scenario fig7 = axial("fig7");
        fig7.detuning = detuned;
        list.push_back(fig7);

        Scenario fig8 = radial("fig8", 10.0);
        fig8.cavity.length = 1e-3;
        list.push_back(fig8);
        Scenario fig9 = axial("fig9");
        fig9.cavity.length = 1e-3;
        list.push_back(fig9);
        Scenario fig10 = spectral("fig10");
        fig10.cavity.length = 1e-3;
        list.push_back(fig10);
        return list;
    }();
    return catalog;
}

Scenario scenario_defaults() {
    return common_base();
}

Scenario find_scenario(const std::string& name) {
    std::string base = name;
    double power_override = -1.0;
    if (name == "fig2a") {
        base = "fig2";
        power_override = 1e-12;
    } else if (name == "fig2b") {
        base = "fig2";
        power_override = 5e-12;
    }
    for (const Scenario& s : builtin_scenarios()) {
        if (s.name == base) {
            Scenario out = s;
            out.name = name;
            if (power_override > 0.0) out.input_power = power_override;
            return out;
        }
    }
    throw SimulationError("unknown scenario: " + name);
}

}  // namespace fibercav
