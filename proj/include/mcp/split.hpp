#pragma once

// Split colourings: detection and partitions into at most three cycles.

#include "mcp/core.hpp"

#include <optional>

namespace mcp {

/// Certificate iff the colouring is split. X1 is the block containing x1.
std::optional<SplitCertificate> detect_split(const Colouring& c);

/// At most three cycles; exactly two when split_two_cycle_feasible(cert).
/// Throws std::invalid_argument if cert does not verify.
Partition partition_split(const Colouring& c, const SplitCertificate& cert);

bool split_two_cycle_feasible(const SplitCertificate& cert) noexcept;

} // namespace mcp
