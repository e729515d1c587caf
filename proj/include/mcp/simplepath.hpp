#pragma once

// Hamiltonian simple paths (a blue path followed by a red path) and their
// conversion into one monochromatic cycle plus a path of the other colour.

#include "mcp/core.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace mcp {

/// Edges before position `turning` are blue, edges after it are red.
struct SimplePath {
    std::vector<Vertex> vertices;
    std::size_t turning = 0;
};

struct PathCycleDecomposition {
    Cycle cycle;
    MonoPath path; // possibly empty; colour differs from the cycle when nonempty
};

struct EngineStats {
    std::size_t extensions = 0;   // steps that covered one more vertex
    std::size_t rewrites = 0;     // same-size re-rootings of the path
    std::size_t loop_steps = 0;   // rotations inside the path-plus-cycle loop
    std::size_t scans = 0;        // full scans of the candidate split blocks
    std::size_t repairs = 0;      // scans that found a wrong-coloured edge
};

using EngineResult = std::variant<SimplePath, SplitCertificate>;

/// A Hamiltonian simple path, or a verified split certificate when none exists.
/// Throws std::logic_error if an internal step fails (an implementation bug).
EngineResult find_hamiltonian_simple_path(const Colouring& c, EngineStats* stats = nullptr);

/// Splits a Hamiltonian simple path into a monochromatic cycle and a path of
/// the other colour, both of even size. Throws std::invalid_argument if sp
/// does not verify or is not Hamiltonian.
PathCycleDecomposition decompose_path_and_cycle(const Colouring& c, const SimplePath& sp);

} // namespace mcp
