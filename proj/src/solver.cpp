#include "mcp/solver.hpp"

#include "mcp/split.hpp"
#include "mcp/verify.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

namespace mcp {

std::string_view route_name(Route r) noexcept {
    return r == Route::Split ? "split" : "nonsplit";
}

namespace {

// Zigzag construction on the vertex set of a path of at least four vertices.
Partition cover_path(const Colouring& c, const MonoPath& path, ZigzagTrace* trace) {
    std::vector<int> xs, ys;
    for (Vertex v : path.vertices)
        (v.side == Side::X ? xs : ys).push_back(v.index);
    const bool flip = path.colour == Colour::Blue;
    const ColouringView view = make_view(c, xs, ys, flip);

    // Path in view coordinates: view index of base index b is its slot in xs / ys.
    std::vector<int> slot_x(static_cast<std::size_t>(c.size()) + 1, 0);
    std::vector<int> slot_y(static_cast<std::size_t>(c.size()) + 1, 0);
    for (std::size_t i = 0; i < xs.size(); ++i)
        slot_x[static_cast<std::size_t>(xs[i])] = static_cast<int>(i) + 1;
    for (std::size_t i = 0; i < ys.size(); ++i)
        slot_y[static_cast<std::size_t>(ys[i])] = static_cast<int>(i) + 1;
    MonoPath local{{}, Colour::Red};
    local.vertices.reserve(path.size());
    for (Vertex v : path.vertices)
        local.vertices.push_back(v.side == Side::X ? xv(slot_x[static_cast<std::size_t>(v.index)])
                                                   : yv(slot_y[static_cast<std::size_t>(v.index)]));

    const ZigzagView z = zigzag_labelling(view, local);
    return z.view.translate_back(partition_three(z, trace));
}

// Fills s in place so a failure still leaves the partial trace behind.
void solve(const Colouring& c, Solution& s) {
    if (auto cert = detect_split(c)) {
        s.route = Route::Split;
        s.partition = partition_split(c, *cert);
        s.trace.certificate = std::move(cert);
        if (s.partition.count() > 3)
            throw SolverInvariantError("split route produced more than three cycles", s.trace);
        return;
    }

    s.route = Route::NonSplit;
    EngineResult found = find_hamiltonian_simple_path(c, &s.trace.engine);
    if (auto* cert = std::get_if<SplitCertificate>(&found)) {
        s.trace.certificate = *cert;
        throw SolverInvariantError("engine returned a split certificate on a non-split colouring",
                                   s.trace);
    }
    s.trace.simple_path = std::get<SimplePath>(std::move(found));
    PathCycleDecomposition d = decompose_path_and_cycle(c, *s.trace.simple_path);
    s.trace.decomposition = d;

    if (d.path.empty()) {
        s.partition.cycles = {d.cycle};
    } else if (d.path.size() == 2) {
        const Colour edge = colour_between(c, d.path.vertices[0], d.path.vertices[1]);
        s.partition.cycles = {d.cycle, Cycle::make(d.path.vertices, edge)};
    } else {
        ZigzagTrace zt;
        s.partition = cover_path(c, d.path, &zt);
        s.trace.zigzag = std::move(zt);
        s.partition.cycles.push_back(d.cycle);
    }
}

} // namespace

Solution partition_le4(const Colouring& c) {
    Solution s;
    try {
        solve(c, s);
    } catch (const SolverInvariantError&) {
        throw;
    } catch (const std::exception& e) {
        throw SolverInvariantError(e.what(), s.trace);
    }
    const VerifyReport rep = verify_partition(c, s.partition);
    if (!rep.valid)
        throw SolverInvariantError("partition fails verification: " + rep.failure->reason,
                                   s.trace);
    if (s.partition.count() > 4)
        throw SolverInvariantError("more than four cycles", s.trace);
    return s;
}

namespace {

SolutionSummary summarize(const Colouring& c) {
    SolutionSummary out;
    out.n = c.size();
    const auto start = std::chrono::steady_clock::now();
    try {
        const Solution s = partition_le4(c);
        out.route = s.route;
        out.cycles = s.partition.count();
        out.ok = verify_partition(c, s.partition).valid && out.cycles <= 4;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

} // namespace

std::vector<SolutionSummary> batch_solve(std::span<const Colouring> cs, int parallelism) {
    if (parallelism < 1)
        throw std::invalid_argument("batch_solve: parallelism must be positive");
    std::vector<SolutionSummary> out(cs.size());
    const auto count = static_cast<std::ptrdiff_t>(cs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(parallelism)
    for (std::ptrdiff_t i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = summarize(cs[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<SolutionSummary> batch_solve_serial(std::span<const Colouring> cs) {
    std::vector<SolutionSummary> out;
    out.reserve(cs.size());
    for (const Colouring& c : cs)
        out.push_back(summarize(c));
    return out;
}

} // namespace mcp
