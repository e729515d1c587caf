#pragma once

// JSON encodings of solutions, traces, oracle results and certificates.
// Key order is fixed so that equal inputs serialize byte-identically.

#include "mcp/core.hpp"
#include "mcp/oracle.hpp"
#include "mcp/solver.hpp"

#include <json.hpp>

namespace mcp {

using Json = nlohmann::ordered_json;

Json cycle_json(const Cycle& c);
Json partition_json(const Partition& p);
Json certificate_json(const SplitCertificate& cert);
Json trace_json(const SolveTrace& t);

/// {"n", "route", "cycles", "verified"}, plus "trace" when with_trace.
Json solution_json(int n, const Solution& s, bool verified, bool with_trace);

/// {"n", "minimum", "cycles", "verified"}
Json oracle_json(int n, const OracleResult& r, bool verified);

/// Accepts a solution object (reads "cycles") or a bare cycle array.
/// Throws std::invalid_argument on a malformed document.
Partition parse_partition_json(const Json& doc);

} // namespace mcp
