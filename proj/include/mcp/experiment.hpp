#pragma once

// Batch experiments over generated families with optional oracle
// cross-checking and the search for colourings that need four cycles.

#include "mcp/core.hpp"
#include "mcp/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mcp {

enum class Family { Random, Exhaustive, Proposition7, Split };

std::optional<Family> parse_family(std::string_view name); // "random", "exhaustive", "prop7", "split"
std::string_view family_name(Family f) noexcept;

struct ExperimentSpec {
    Family family = Family::Random;
    int n_min = 1;
    int n_max = 1;
    std::size_t count = 1;    // per n; ignored by exhaustive, prop7 and split
    std::uint64_t seed = 0;
    double p_red = 0.5;
    bool oracle_cross_check = false;
    bool hunt_four = false;   // implies the cross-check
    int workers = 1;
    std::string witness_dir;  // empty: witnesses are reported but not written
};

struct ExperimentOutcome {
    Json summary;           // deterministic for a fixed spec
    double seconds = 0.0;   // wall time, kept out of the summary
    bool failures = false;  // some solver run failed or exceeded four cycles
};

/// Throws std::invalid_argument on an invalid spec.
void validate(const ExperimentSpec& spec);

ExperimentOutcome run_experiment(const ExperimentSpec& spec);

/// Instance seed for the i-th random colouring of size n.
std::uint64_t instance_seed(std::uint64_t seed, int n, std::size_t i) noexcept;

} // namespace mcp
