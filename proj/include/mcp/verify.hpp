#pragma once

// Independent validation of partitions, simple paths and split certificates.
// Nothing here consults solver state.

#include "mcp/core.hpp"

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mcp {

/// Anything that answers colour(i, j) for 1 <= i, j <= size().
template <class S>
concept ColourSource = requires(const S& s, int i, int j) {
    { s.size() } -> std::convertible_to<int>;
    { s.colour(i, j) } -> std::same_as<Colour>;
};

template <ColourSource S>
Colour colour_between(const S& src, Vertex a, Vertex b) {
    return a.side == Side::X ? src.colour(a.index, b.index) : src.colour(b.index, a.index);
}

struct VerifyFailure {
    std::string reason;
    std::optional<Vertex> vertex;
    std::optional<std::pair<Vertex, Vertex>> edge;
    std::optional<std::size_t> cycle_index;
};

struct VerifyReport {
    bool valid = false;
    std::size_t cycle_count = 0;
    std::size_t red = 0;
    std::size_t blue = 0;
    std::size_t untagged = 0;
    std::optional<VerifyFailure> failure;
};

namespace detail {

template <ColourSource S>
std::optional<VerifyFailure> check_cycle(const S& src, const Cycle& cyc, std::size_t idx) {
    const int n = src.size();
    auto fail = [&](std::string why) {
        return VerifyFailure{std::move(why), std::nullopt, std::nullopt, idx};
    };
    for (Vertex v : cyc.vertices)
        if (v.index < 1 || v.index > n) {
            auto f = fail("vertex " + to_string(v) + " out of range");
            f.vertex = v;
            return f;
        }
    const std::size_t len = cyc.vertices.size();
    if (len == 0)
        return fail("cycle " + std::to_string(idx) + " is empty");
    const CycleKind expected = len == 1   ? CycleKind::Singleton
                               : len == 2 ? CycleKind::Edge
                                          : CycleKind::Proper;
    if (cyc.kind != expected)
        return fail("cycle " + std::to_string(idx) + " has " + std::to_string(len) +
                    " vertices but kind " + std::string(kind_name(cyc.kind)));
    if (cyc.kind == CycleKind::Singleton) {
        if (cyc.colour)
            return fail("singleton " + to_string(cyc.vertices[0]) + " carries a colour tag");
        return std::nullopt;
    }
    if (!cyc.colour)
        return fail("cycle " + std::to_string(idx) + " has no colour tag");
    if (cyc.kind == CycleKind::Proper && len % 2 != 0)
        return fail("cycle " + std::to_string(idx) + " has odd length " + std::to_string(len));
    const std::size_t edges = cyc.kind == CycleKind::Edge ? 1 : len;
    for (std::size_t k = 0; k < edges; ++k) {
        Vertex a = cyc.vertices[k];
        Vertex b = cyc.vertices[(k + 1) % len];
        if (a.side == b.side) {
            auto f = fail(to_string(a) + " and " + to_string(b) + " are on the same side");
            f.edge = std::pair{a, b};
            return f;
        }
        Colour got = colour_between(src, a, b);
        if (got != *cyc.colour) {
            auto f = fail("edge " + to_string(a) + to_string(b) + " is " +
                          std::string(colour_name(got)) + ", tag " +
                          std::string(colour_name(*cyc.colour)));
            f.edge = std::pair{a, b};
            return f;
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Cycles are scanned in order, then coverage x1..xn, y1..yn.
template <ColourSource S>
VerifyReport verify_partition_in(const S& src, const Partition& p) {
    VerifyReport rep;
    rep.cycle_count = p.cycles.size();
    const int n = src.size();
    std::vector<char> seen(2 * static_cast<std::size_t>(n), 0);
    auto slot = [n](Vertex v) {
        return static_cast<std::size_t>(v.index - 1) +
               (v.side == Side::Y ? static_cast<std::size_t>(n) : 0);
    };
    for (std::size_t idx = 0; idx < p.cycles.size(); ++idx) {
        const Cycle& cyc = p.cycles[idx];
        if (auto f = detail::check_cycle(src, cyc, idx)) {
            rep.failure = std::move(f);
            return rep;
        }
        for (Vertex v : cyc.vertices) {
            if (seen[slot(v)]++) {
                rep.failure = VerifyFailure{to_string(v) + " covered twice", v, std::nullopt, idx};
                return rep;
            }
        }
        if (!cyc.colour)
            ++rep.untagged;
        else if (*cyc.colour == Colour::Red)
            ++rep.red;
        else
            ++rep.blue;
    }
    for (Side s : {Side::X, Side::Y})
        for (int i = 1; i <= n; ++i) {
            Vertex v{s, i};
            if (!seen[slot(v)]) {
                rep.failure = VerifyFailure{to_string(v) + " uncovered", v, std::nullopt, std::nullopt};
                return rep;
            }
        }
    rep.valid = true;
    return rep;
}

/// Cycle valid on its own (no coverage requirement).
template <ColourSource S>
bool verify_cycle_in(const S& src, const Cycle& cyc) {
    if (detail::check_cycle(src, cyc, 0))
        return false;
    std::vector<Vertex> vs = cyc.vertices;
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

/// Sides alternate and every edge matches the tag; paths of <= 2 vertices
/// accept either tag.
template <ColourSource S>
bool verify_mono_path_in(const S& src, const MonoPath& path) {
    const int n = src.size();
    std::vector<Vertex> vs = path.vertices;
    for (Vertex v : vs)
        if (v.index < 1 || v.index > n)
            return false;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        return false;
    for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k) {
        Vertex a = path.vertices[k], b = path.vertices[k + 1];
        if (a.side == b.side)
            return false;
        if (path.vertices.size() > 2 && (!path.colour || colour_between(src, a, b) != *path.colour))
            return false;
    }
    return true;
}

/// turning is the 0-based position of the turning point: edges before it are
/// blue, edges after it red.
template <ColourSource S>
bool verify_simple_path_in(const S& src, std::span<const Vertex> seq, std::size_t turning) {
    const int n = src.size();
    std::vector<Vertex> vs(seq.begin(), seq.end());
    for (Vertex v : vs)
        if (v.index < 1 || v.index > n)
            return false;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        return false;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
        if (seq[k].side == seq[k + 1].side)
            return false;
    if (seq.size() <= 2)
        return true;
    if (turning >= seq.size())
        return false;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        Colour want = k < turning ? Colour::Blue : Colour::Red;
        if (colour_between(src, seq[k], seq[k + 1]) != want)
            return false;
    }
    return true;
}

VerifyReport verify_partition(const Colouring& c, const Partition& p);
bool verify_cycle(const Colouring& c, const Cycle& cyc);
bool verify_mono_path(const Colouring& c, const MonoPath& path);
bool verify_simple_path(const Colouring& c, std::span<const Vertex> seq, std::size_t turning);
bool verify_split(const Colouring& c, const SplitCertificate& cert);

} // namespace mcp
