#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fibercav/sweep.hpp"

namespace fibercav {

// Parses key=value configuration text (one key per line, dotted keys, '#'
// comments). A `scenario=` line selects a builtin base; the remaining keys
// overlay it. `overrides` are applied after the text, reported as line 0.
// User-facing frequencies are ordinary (MHz), lengths nm unless the key says
// otherwise; see the README for the key list.
Scenario parse_config(const std::string& text,
                      const std::vector<std::string>& overrides = {});

// CSV with a '#' metadata block naming every resolved parameter; a run is
// reproducible from its own output file. 17 significant digits, '.' decimal
// point, LF line endings.
void write_csv(std::ostream& os, const SweepResult& result);

// gnuplot script plotting the observables of an already-written CSV.
void write_plot_script(std::ostream& os, const std::string& csv_path,
                       const SweepResult& result);

// Locale-independent shortest-faithful float formatting (17 significant digits).
std::string format_value(double v);

// Largest relative gap between the exact and analytic observables of a
// solver=both sweep, taken over N_cav and P_e.
double max_exact_analytic_gap(const SweepResult& result);

}  // namespace fibercav
