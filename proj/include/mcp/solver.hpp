#pragma once

// Partition of any colouring into at most four monochromatic cycles: split
// colourings directly, everything else through a Hamiltonian simple path, a
// cycle-plus-path decomposition and the zigzag construction on the path.

#include "mcp/core.hpp"
#include "mcp/simplepath.hpp"
#include "mcp/zigzag.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcp {

enum class Route { Split, NonSplit };

std::string_view route_name(Route r) noexcept; // "split" / "nonsplit"

struct SolveTrace {
    std::optional<SplitCertificate> certificate;       // split route
    std::optional<SimplePath> simple_path;             // non-split route
    std::optional<PathCycleDecomposition> decomposition;
    std::optional<ZigzagTrace> zigzag;                 // path of at least four vertices
    EngineStats engine;
};

struct Solution {
    Partition partition; // base coordinates
    Route route = Route::NonSplit;
    SolveTrace trace;
};

/// Thrown when a postcondition fails; carries the partial trace for a bundle.
class SolverInvariantError : public std::logic_error {
public:
    SolverInvariantError(const std::string& what, SolveTrace trace)
        : std::logic_error(what), trace_(std::move(trace)) {}
    const SolveTrace& trace() const noexcept { return trace_; }

private:
    SolveTrace trace_;
};

/// Verifying partition with at most four cycles (three on the split route).
/// Throws SolverInvariantError only on an implementation bug.
Solution partition_le4(const Colouring& c);

struct SolutionSummary {
    int n = 0;
    Route route = Route::NonSplit;
    std::size_t cycles = 0;
    bool ok = false;
    double seconds = 0.0;
    std::string error; // empty unless partition_le4 threw
};

/// Order-preserving; instances run concurrently on up to `parallelism` threads.
std::vector<SolutionSummary> batch_solve(std::span<const Colouring> cs, int parallelism);
/// Single-threaded reference for batch_solve.
std::vector<SolutionSummary> batch_solve_serial(std::span<const Colouring> cs);

} // namespace mcp
