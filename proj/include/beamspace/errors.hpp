#pragma once

#include <stdexcept>
#include <string>

namespace beamspace {

// Invalid sizes of vector/matrix arguments.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Out-of-range or inconsistent scalar parameters (K, rho, B not a power of two, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A channel matrix was used in the wrong domain (antenna vs beamspace).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Pilot matrix is not unitary.
struct PilotError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// User angles cannot be placed in the configured sector.
struct PlacementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cholesky factorization hit a non-positive pivot.
struct NotPositiveDefiniteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rank-one inverse update denominator vanished.
struct DegenerateUpdateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Greedy selection was asked for a beam when all beams are already selected.
struct SupportExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unregularized system is singular.
struct RankError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed data file (channel matrix files).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed run configuration; message names the offending field/line.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace beamspace
