#pragma once

#include <stdexcept>
#include <string>

namespace fibercav {

struct SimulationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// fiber_mode
struct NoGuidedMode : SimulationError {
    using SimulationError::SimulationError;
};
struct MultiMode : SimulationError {
    using SimulationError::SimulationError;
};

// atom_field
struct SurfaceCutoff : SimulationError {
    using SimulationError::SimulationError;
};

// liouvillian / steady_state
struct TruncationTooSmall : SimulationError {
    using SimulationError::SimulationError;
};
struct TruncationNotConverged : SimulationError {
    using SimulationError::SimulationError;
};
struct SingularSystem : SimulationError {
    using SimulationError::SimulationError;
};
struct StepTooLarge : SimulationError {
    using SimulationError::SimulationError;
};

// weak_drive
struct DegenerateDenominator : SimulationError {
    using SimulationError::SimulationError;
};

// cli / config
// line 0 marks a command-line override or a whole-config check.
struct ConfigError : SimulationError {
    ConfigError(int line, const std::string& what)
        : SimulationError((line > 0 ? "line " + std::to_string(line) + ": " : "") + what),
          line_number(line) {}
    int line_number;
};

}  // namespace fibercav
