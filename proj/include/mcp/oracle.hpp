#pragma once

// Exact minimum monochromatic cycle partition by exhaustive search over vertex
// subsets. Exponential; intended for n <= 6.

#include "mcp/core.hpp"

#include <optional>
#include <span>
#include <stdexcept>

namespace mcp {

inline constexpr int kOracleDefaultLimit = 6;
inline constexpr int kOracleHardCap = 10;

class OracleRefusal : public std::runtime_error {
public:
    OracleRefusal(int n, int limit)
        : std::runtime_error("oracle refuses n=" + std::to_string(n) + " (limit " +
                             std::to_string(limit) + ")"),
          n_(n), limit_(limit) {}
    int n() const noexcept { return n_; }
    int limit() const noexcept { return limit_; }

private:
    int n_;
    int limit_;
};

struct OracleResult {
    int minimum = 0;
    Partition witness;
};

/// Exact optimum with a witness. Throws OracleRefusal when n exceeds limit_n
/// or the hard cap.
OracleResult min_cycle_partition(const Colouring& c, int limit_n = kOracleDefaultLimit);

/// True iff some valid two-cycle partition has one red and one blue cycle;
/// singletons match either colour.
bool exists_two_cycle_bicolour_partition(const Colouring& c,
                                         int limit_n = kOracleDefaultLimit);

/// Backtracking search for a cycle of the given colour spanning exactly
/// xs and ys. Throws std::invalid_argument when unbalanced or empty.
std::optional<Cycle> mono_hamiltonian_cycle_on(const Colouring& c, std::span<const int> xs,
                                               std::span<const int> ys, Colour colour);

} // namespace mcp
