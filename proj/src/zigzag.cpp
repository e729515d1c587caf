#include "mcp/zigzag.hpp"

#include "mcp/oracle.hpp"
#include "mcp/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace mcp {

Colour ZigzagView::colour(Vertex a, Vertex b) const { return colour_between(view, a, b); }

// ---------------------------------------------------------------- labelling

int path_position(int m, Vertex v) {
    const int i = v.index;
    if (i < 1 || i > m)
        throw std::out_of_range("zigzag label " + to_string(v) + " outside 1.." + std::to_string(m));
    const bool front = (v.side == Side::X) == (i % 2 == 1);
    return front ? i : 2 * m + 1 - i;
}

Vertex path_vertex(int m, int position) {
    if (position < 1 || position > 2 * m)
        throw std::out_of_range("path position " + std::to_string(position) + " out of range");
    if (position <= m)
        return position % 2 == 1 ? xv(position) : yv(position);
    const int q = 2 * m + 1 - position;
    return q % 2 == 1 ? yv(q) : xv(q);
}

std::vector<Vertex> canonical_path(int m) {
    std::vector<Vertex> out;
    out.reserve(2 * static_cast<std::size_t>(m));
    for (int p = 1; p <= 2 * m; ++p)
        out.push_back(path_vertex(m, p));
    return out;
}

std::vector<Vertex> path_segment(int m, Vertex u, Vertex v) {
    const int pu = path_position(m, u);
    const int pv = path_position(m, v);
    const int step = pu <= pv ? 1 : -1;
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(std::abs(pv - pu) + 1));
    for (int p = pu;; p += step) {
        out.push_back(path_vertex(m, p));
        if (p == pv)
            break;
    }
    return out;
}

ZigzagView zigzag_labelling(const ColouringView& base, const MonoPath& ham) {
    const int m = base.size();
    const auto& vs = ham.vertices;
    if (vs.size() != 2 * static_cast<std::size_t>(m))
        throw std::invalid_argument("zigzag labelling needs a Hamiltonian path on " +
                                    std::to_string(2 * m) + " vertices, got " +
                                    std::to_string(vs.size()));
    if (!verify_mono_path_in(base, ham))
        throw std::invalid_argument("zigzag labelling needs a monochromatic path");
    Colour path_colour = ham.colour.value_or(Colour::Red);
    if (vs.size() == 2)
        path_colour = colour_between(base, vs[0], vs[1]);
    const bool reversed = vs.front().side != Side::X;
    std::vector<int> lx(static_cast<std::size_t>(m)), ly(static_cast<std::size_t>(m));
    for (int p = 1; p <= 2 * m; ++p) {
        const Vertex at = vs[static_cast<std::size_t>(reversed ? 2 * m - p : p - 1)];
        const Vertex label = path_vertex(m, p);
        const int target = base.translate_back(at).index;
        (label.side == Side::X ? lx : ly)[static_cast<std::size_t>(label.index - 1)] = target;
    }
    const bool flip = base.flipped() != (path_colour == Colour::Blue);
    return ZigzagView{ColouringView(base.base(), std::move(lx), std::move(ly), flip)};
}

ZigzagView zigzag_labelling(const Colouring& c, const MonoPath& ham) {
    return zigzag_labelling(identity_view(c), ham);
}

// ---------------------------------------------------------------- side paths

std::vector<Vertex> plait_side_path(int k, PlaitSide side, Vertex start, Vertex end,
                                    std::span<const Vertex> excluded,
                                    std::span<const std::pair<Vertex, Vertex>> required) {
    const int parity = side == PlaitSide::Odd ? 1 : 0;
    auto member = [&](Vertex v) { return v.index >= 1 && v.index <= k && v.index % 2 == parity; };
    auto is_excluded = [&](Vertex v) {
        return std::find(excluded.begin(), excluded.end(), v) != excluded.end();
    };
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("side path " + to_string(start) + "->" + to_string(end) +
                                     ": " + why);
    };
    if (!member(start) || !member(end) || start == end)
        throw bad("endpoints must be distinct members of the side");
    if (is_excluded(start) || is_excluded(end))
        throw bad("endpoint excluded");
    for (Vertex v : excluded)
        if (!member(v))
            throw bad(to_string(v) + " is not on the side");

    std::vector<Vertex> pinned{start, end};
    for (const auto& [p, q] : required) {
        if (p.side == q.side || !member(p) || !member(q) || is_excluded(p) || is_excluded(q))
            throw bad("required edge " + to_string(p) + to_string(q) + " unusable");
        for (Vertex v : {p, q}) {
            if (std::find(pinned.begin(), pinned.end(), v) != pinned.end())
                throw bad("required edge " + to_string(p) + to_string(q) + " overlaps");
            pinned.push_back(v);
        }
    }

    std::vector<Vertex> pool_x, pool_y;
    int total = 0;
    for (int i = parity == 1 ? 1 : 2; i <= k; i += 2)
        for (Vertex v : {xv(i), yv(i)}) {
            if (is_excluded(v))
                continue;
            ++total;
            if (std::find(pinned.begin(), pinned.end(), v) == pinned.end())
                (v.side == Side::X ? pool_x : pool_y).push_back(v);
        }
    auto slot_side = [&](int t) { return t % 2 == 0 ? start.side : other(start.side); };
    if (slot_side(total - 1) != end.side)
        throw bad("endpoint classes do not match the vertex count");
    int x_slots = 0;
    for (int t = 0; t < total; ++t)
        x_slots += slot_side(t) == Side::X;
    int x_count = 0;
    for (Vertex v : pinned)
        x_count += v.side == Side::X;
    if (x_slots != x_count + static_cast<int>(pool_x.size()))
        throw bad("class sizes admit no spanning path");

    std::vector<std::optional<Vertex>> seq(static_cast<std::size_t>(total));
    seq.front() = start;
    seq.back() = end;
    int cursor = 1;
    for (const auto& [p, q] : required) {
        if (cursor + 1 > total - 2)
            throw bad("no room for required edges");
        const bool p_first = slot_side(cursor) == p.side;
        seq[static_cast<std::size_t>(cursor)] = p_first ? p : q;
        seq[static_cast<std::size_t>(cursor + 1)] = p_first ? q : p;
        cursor += 2;
    }
    std::size_t next_x = 0, next_y = 0;
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(total));
    for (int t = 0; t < total; ++t) {
        auto& cell = seq[static_cast<std::size_t>(t)];
        if (!cell)
            cell = slot_side(t) == Side::X ? pool_x.at(next_x++) : pool_y.at(next_y++);
        out.push_back(*cell);
    }
    return out;
}

// ---------------------------------------------------------------- cycle surgery

namespace {

/// c rotated (and reversed if needed) to start at v and end at u, so that the
/// closing hop is u -> v. Throws unless u and v are adjacent on c.
std::vector<Vertex> open_at(const Cycle& c, Vertex u, Vertex v) {
    const auto& vs = c.vertices;
    const std::size_t len = vs.size();
    auto it = std::find(vs.begin(), vs.end(), v);
    if (len < 2 || it == vs.end() || !c.uses_edge(u, v))
        throw std::invalid_argument("edge " + to_string(u) + to_string(v) + " is not on the cycle");
    const std::size_t iv = static_cast<std::size_t>(it - vs.begin());
    std::vector<Vertex> out;
    out.reserve(len);
    const bool forward = vs[(iv + len - 1) % len] == u; // u precedes v
    for (std::size_t t = 0; t < len; ++t)
        out.push_back(forward ? vs[(iv + t) % len] : vs[(iv + len - t) % len]);
    return out;
}

/// Replaces the edge uv of c by the path (u, ..., v).
Cycle replace_edge(const Cycle& c, Vertex u, Vertex v, const std::vector<Vertex>& path) {
    if (path.size() < 2 || path.front() != u || path.back() != v)
        throw std::logic_error("replacement path must run from " + to_string(u) + " to " +
                               to_string(v));
    std::vector<Vertex> vs = open_at(c, u, v);
    vs.insert(vs.end(), path.begin() + 1, path.end() - 1);
    return Cycle::make(std::move(vs), c.colour);
}

void append(std::vector<Vertex>& out, Vertex v) { out.push_back(v); }
void append(std::vector<Vertex>& out, const std::vector<Vertex>& vs) {
    out.insert(out.end(), vs.begin(), vs.end());
}

template <class... Parts>
std::vector<Vertex> walk(const Parts&... parts) {
    std::vector<Vertex> out;
    (append(out, parts), ...);
    return out;
}

constexpr Vertex X(int i) noexcept { return xv(i); }
constexpr Vertex Y(int i) noexcept { return yv(i); }

PlaitSide side_of(int index) { return index % 2 == 1 ? PlaitSide::Odd : PlaitSide::Even; }

/// Orientation of the zigzag: the transposed frame swaps the roles of X and
/// Y, which reverses P and keeps every zigzag property.
struct Frame {
    const ZigzagView* z = nullptr;
    bool transposed = false;

    int m() const noexcept { return z->size(); }
    Vertex real(Vertex v) const noexcept {
        return transposed ? Vertex{other(v.side), v.index} : v;
    }
    Colour colour(Vertex a, Vertex b) const { return z->colour(real(a), real(b)); }
    Frame swapped() const noexcept { return {z, !transposed}; }
    std::vector<Vertex> seg(Vertex u, Vertex v) const { return path_segment(m(), u, v); }
};

Cycle to_real(const Frame& f, Cycle c) {
    for (auto& v : c.vertices)
        v = f.real(v);
    return c;
}

std::pair<Vertex, Vertex> edge_key(Vertex a, Vertex b) {
    return a.side == Side::X ? std::pair{a, b} : std::pair{b, a};
}

/// Records every probed edge; constructions are checked against the record.
class Prober {
public:
    explicit Prober(ZigzagTrace* trace) : trace_(trace) {}

    Colour probe(const Frame& f, Vertex a, Vertex b, std::string_view step) {
        const auto [x, y] = edge_key(f.real(a), f.real(b));
        const Colour c = f.z->colour(x, y);
        known_[{x, y}] = c;
        if (trace_)
            trace_->probes.push_back({x, y, c, step});
        return c;
    }

    void outcome(std::string_view what) {
        if (trace_)
            trace_->outcome = what;
    }

    void level(int k) {
        if (trace_)
            trace_->plait_level = k;
    }

    ZigzagTrace* trace() const noexcept { return trace_; }

    /// Converts frame cycles to view labels, verifies them, and checks that
    /// no edge used by a cycle contradicts a recorded probe.
    Partition finish(const Frame& f, std::vector<Cycle> cycles, std::string_view step) {
        Partition p;
        for (auto& c : cycles)
            p.cycles.push_back(to_real(f, std::move(c)));
        const VerifyReport rep = verify_partition_in(f.z->view, p);
        if (!rep.valid)
            throw std::logic_error(std::string("zigzag construction '") + std::string(step) +
                                   "' failed to verify: " + rep.failure->reason);
        if (p.count() > 3)
            throw std::logic_error(std::string("zigzag construction '") + std::string(step) +
                                   "' used " + std::to_string(p.count()) + " cycles");
        for (const auto& c : p.cycles) {
            const std::size_t len = c.size();
            const std::size_t hops = c.kind == CycleKind::Proper ? len : (len == 2 ? 1 : 0);
            for (std::size_t t = 0; t < hops; ++t) {
                auto it = known_.find(edge_key(c.vertices[t], c.vertices[(t + 1) % len]));
                if (it != known_.end() && c.colour && it->second != *c.colour)
                    throw std::logic_error("construction '" + std::string(step) +
                                           "' contradicts a probed edge");
            }
        }
        outcome(step);
        return p;
    }

private:
    ZigzagTrace* trace_;
    std::map<std::pair<Vertex, Vertex>, Colour> known_;
};

Cycle red_cycle(std::vector<Vertex> vs) { return Cycle::make(std::move(vs), Colour::Red); }
Cycle blue_cycle(std::vector<Vertex> vs) { return Cycle::make(std::move(vs), Colour::Blue); }
Cycle edge_cycle(const Frame& f, Vertex a, Vertex b) {
    return Cycle::make({a, b}, f.colour(a, b));
}

Cycle red_on(const Frame& f, int i) { return red_cycle(f.seg(X(i), Y(i))); }

std::array<Cycle, 2> two_red(const Frame& f, int i, ChordVariant variant) {
    if (variant == ChordVariant::Forward)
        return {red_cycle(walk(X(i), f.seg(Y(i + 2), X(i + 2)), Y(i + 1))),
                edge_cycle(f, X(i + 1), Y(i))};
    return {red_cycle(walk(X(i + 1), f.seg(Y(i + 2), X(i + 2)), Y(i))),
            edge_cycle(f, X(i), Y(i + 1))};
}

Cycle side_cycle(int level, PlaitSide side) {
    const int lo = side == PlaitSide::Odd ? 1 : 2;
    return blue_cycle(plait_side_path(level, side, X(lo), Y(lo)));
}

Cycle splice_raw(const Cycle& c1, const Cycle& c2, Vertex u1, Vertex us, Vertex v1, Vertex vt) {
    std::vector<Vertex> a = open_at(c1, us, u1); // u1 .. us
    std::vector<Vertex> b = open_at(c2, vt, v1); // v1 .. vt
    a.insert(a.end(), b.begin(), b.end());
    return Cycle::make(std::move(a), Colour::Blue);
}

// ---------------------------------------------------------------- weak recursion

struct FrameWeak {
    std::vector<Cycle> cycles; // frame coordinates
    int condition = 1;
};

/// Weak partition of S_{>=s} in frame f. Iterative: walk down to the first
/// level whose shortcut applies, then unwind.
FrameWeak weak_in(const Frame& f, int s) {
    const int m = f.m();
    auto red = [&](int i, int j) { return f.colour(X(i), Y(j)) == Colour::Red; };
    int base = s;
    FrameWeak w;
    for (;; ++base) {
        const int r = m - base + 1;
        if (r == 1) {
            w.cycles = {edge_cycle(f, X(base), Y(base))};
            break;
        }
        if (red(base, base)) {
            w.cycles = {red_on(f, base)};
            break;
        }
        if (r == 2) {
            w.cycles = {edge_cycle(f, X(base), Y(base)), edge_cycle(f, X(base + 1), Y(base + 1))};
            break;
        }
        if (red(base, base + 2)) {
            auto pair = two_red(f, base, ChordVariant::Forward);
            w.cycles = {pair[0], pair[1]};
            break;
        }
        if (red(base + 2, base)) {
            auto pair = two_red(f, base, ChordVariant::Mirror);
            w.cycles = {pair[0], pair[1]};
            break;
        }
    }
    for (int t = base - 1; t >= s; --t) {
        if (w.condition < 3) {
            w.cycles.insert(w.cycles.begin(), edge_cycle(f, X(t), Y(t)));
            ++w.condition;
            continue;
        }
        auto it = std::find_if(w.cycles.begin(), w.cycles.end(), [&](const Cycle& c) {
            return c.colour == Colour::Blue && c.uses_edge(X(t + 2), Y(t + 2));
        });
        if (it == w.cycles.end())
            throw std::logic_error("weak recursion lost its blue cycle");
        *it = replace_edge(*it, X(t + 2), Y(t + 2), {X(t + 2), Y(t), X(t), Y(t + 2)});
    }
    return w;
}

// ---------------------------------------------------------------- special sets

Partition special_in(const Frame& f, const SpecialSetWitness& w, Prober& pr) {
    const int m = f.m();
    const int k = w.k;
    if (k < 2 || k > m)
        throw std::invalid_argument("special set level out of range");
    auto red = [&](int i, int j) {
        return pr.probe(f, X(i), Y(j), "special") == Colour::Red;
    };
    if (m == k)
        return pr.finish(f, {w.top}, "special");
    if (m == k + 1)
        return pr.finish(f, {w.top, edge_cycle(f, X(m), Y(m))}, "special");
    if (m >= k + 2) {
        auto with = [&](std::array<Cycle, 2> pair, const std::optional<Cycle>& extra) {
            std::vector<Cycle> cs{pair[0], pair[1]};
            if (extra)
                cs.push_back(*extra);
            return pr.finish(f, std::move(cs), "special/shortcut");
        };
        if (red(k - 1, k + 1))
            return with(two_red(f, k - 1, ChordVariant::Forward), w.below);
        if (red(k + 1, k - 1))
            return with(two_red(f, k - 1, ChordVariant::Mirror), w.below);
        if (red(k, k + 2))
            return with(two_red(f, k, ChordVariant::Forward), w.middle);
        if (red(k + 2, k))
            return with(two_red(f, k, ChordVariant::Mirror), w.middle);
    }
    FrameWeak rest = weak_in(f, k + 1);
    Cycle merged = w.top;
    auto absorb = [&](int low, int high) {
        auto it = std::find_if(rest.cycles.begin(), rest.cycles.end(), [&](const Cycle& c) {
            return c.colour == Colour::Blue && c.uses_edge(X(high), Y(high));
        });
        if (it == rest.cycles.end())
            throw std::logic_error("special set: no blue cycle through " + to_string(X(high)) +
                                   to_string(Y(high)));
        merged = splice_raw(merged, *it, X(low), Y(low), X(high), Y(high));
        rest.cycles.erase(it);
    };
    if (rest.condition >= 2)
        absorb(k - 1, k + 1);
    if (rest.condition == 3)
        absorb(k, k + 2);
    std::vector<Cycle> cs{merged};
    cs.insert(cs.end(), rest.cycles.begin(), rest.cycles.end());
    return pr.finish(f, std::move(cs), "special/weak");
}

// ---------------------------------------------------------------- plait cascade

/// Level-k cascade in one frame. Cases of both parities share this code via
/// the role map: a is the index in {1, 2} on k's side (sk), b the other one,
/// on the side of k-1 (sk1).
class Cascade {
public:
    Cascade(Frame f, int k, int j, Prober& pr)
        : f_(f), k_(k), j_(j), m_(f.m()), a_(k % 2 == 0 ? 2 : 1), b_(3 - a_),
          sk_(side_of(k)), sk1_(side_of(k - 1)), pr_(pr) {}

    /// Returns 1 if x_b y_k is red, 2 if x_{k-1} y_a is red, else a partition.
    std::variant<Partition, int> chord_pair(int l) {
        const int k = k_, a = a_, b = b_;
        if (red(X(b), Y(k), "chord-pair"))
            return 1;
        if (red(X(k - 1), Y(a), "chord-pair"))
            return 2;
        auto rim_without = [&](Vertex kx, Vertex ly) {
            return blue_cycle(walk(side(Y(a), Y(k), {kx}), side1(X(b), X(k - 1), {ly})));
        };
        auto top_through = [&](Vertex from, Vertex to) {
            return red_cycle(walk(from, f_.seg(Y(k + 1), X(k + 1)), to));
        };
        if (red(X(k), Y(l), "chord-pair/a"))
            return finish({top_through(X(k), Y(l)), rim_without(X(k), Y(l))}, "chord-pair/a");
        Cycle low = blue_cycle(walk(side(Y(k), X(k)), side1(Y(l), X(b))));
        if (red(X(k + 1), Y(k - 1), "chord-pair/b"))
            return finish({top_through(X(k), Y(k - 1)), rim_without(X(k), Y(k - 1))},
                          "chord-pair/b");
        if (red(X(l + 1), Y(k + 1), "chord-pair/c"))
            return finish({top_through(X(l + 1), Y(l)), rim_without(X(l + 1), Y(l))},
                          "chord-pair/c");
        const std::pair<Vertex, Vertex> diag{X(k), Y(k)};
        Cycle mid = blue_cycle(walk(X(k + 1), Y(k + 1), side(X(l + 1), Y(a), {}, {diag}),
                                    side1(X(k - 1), Y(k - 1))));
        if (red(X(k + 2), Y(k + 2), "chord-pair/d"))
            return finish({red_on(f_, k + 2), mid}, "chord-pair/d");
        if (red(X(k + 2), Y(k), "chord-pair/e"))
            return finish({edge_cycle(f_, X(l + 1), Y(k + 1)),
                           red_cycle(walk(X(k + 1), f_.seg(Y(k + 2), X(k + 2)), Y(k))),
                           blue_cycle(walk(side(Y(a), X(k), {X(l + 1), Y(k)}),
                                           side1(Y(l), X(k - 1))))},
                          "chord-pair/e");
        if (red(X(k), Y(k + 2), "chord-pair/f"))
            return finish({red_cycle(walk(X(k), f_.seg(Y(k + 2), X(k + 2)), Y(k + 1))),
                           edge_cycle(f_, X(k + 1), Y(k - 1)), rim_without(X(k), Y(k - 1))},
                          "chord-pair/f");
        Cycle top = replace_edge(mid, X(k), Y(k), {X(k), Y(k + 2), X(k + 2), Y(k)});
        return special(k + 2, low, mid, top, "chord-pair/special");
    }

    /// x_{k+1} y_b red.
    std::optional<Partition> corner() {
        const int k = k_, a = a_, b = b_;
        if (!red(X(k + 1), Y(b), "corner"))
            return std::nullopt;
        auto r = chord_pair(b);
        if (auto* p = std::get_if<Partition>(&r))
            return std::move(*p);
        return close_rest({red_cycle(f_.seg(X(k + 1), Y(b)))},
                          std::get<int>(r) == 1 ? std::pair{X(b), Y(k)} : std::pair{X(k - 1), Y(a)},
                          "corner");
    }

    std::optional<Partition> diag2() {
        const int k = k_, b = b_;
        if (!red(X(k + 2), Y(k + 2), "diag+2"))
            return std::nullopt;
        return finish({red_on(f_, k + 2), side_cycle(k, sk_),
                       blue_cycle(walk(side1(Y(b), X(b)), Y(k + 1), X(k + 1)))},
                      "diag+2");
    }

    /// x_{j+1} y_b and x_a y_{j+2}.
    std::optional<Partition> low_link() {
        const int k = k_, j = j_, a = a_, b = b_;
        if (red(X(j + 1), Y(b), "low-link")) {
            auto r = chord_pair(j);
            if (auto* p = std::get_if<Partition>(&r))
                return std::move(*p);
            return close_rest(
                {red_cycle(walk(f_.seg(X(k + 1), X(j + 1)), f_.seg(Y(b), Y(j))))},
                std::get<int>(r) == 1 ? std::pair{X(b), Y(k)} : std::pair{X(k - 1), Y(a)},
                "low-link/1");
        }
        if (red(X(a), Y(j + 2), "low-link")) {
            Cycle big = red_cycle(walk(f_.seg(X(k + 1), Y(j + 2)), f_.seg(X(a), Y(j))));
            if (red(X(b), Y(k), "low-link/2"))
                return close_rest({big}, {X(b), Y(k)}, "low-link/2");
            auto r = chord_pair(j);
            if (auto* p = std::get_if<Partition>(&r))
                return std::move(*p);
            return close_rest({big}, {X(k - 1), Y(a)}, "low-link/2");
        }
        return std::nullopt;
    }

    /// x_j y_{k+2} and x_{k+2} y_k.
    std::optional<Partition> high_link() {
        const int k = k_, j = j_, a = a_, b = b_;
        if (red(X(j), Y(k + 2), "high-link"))
            return finish({red_cycle(walk(f_.seg(X(j), X(k + 1)), f_.seg(Y(j), Y(k + 2)))),
                           side_cycle(j - 1, PlaitSide::Odd), side_cycle(j - 1, PlaitSide::Even)},
                          "high-link/1");
        if (red(X(k + 2), Y(k), "high-link")) {
            Cycle top = red_cycle(walk(X(k + 1), f_.seg(Y(k + 2), X(k + 2)), Y(k)));
            if (j == k - 1)
                return finish({top, blue_cycle(walk(side(X(a), X(k), {Y(k)}), side1(Y(b), X(b)),
                                                    Y(k + 1)))},
                              "high-link/2");
            return finish({top,
                           blue_cycle(walk(side(X(a), X(j + 1), {Y(k)}),
                                           side1(Y(b), Y(j + 2), {X(b)}))),
                           edge_cycle(f_, X(b), Y(k + 1))},
                          "high-link/2");
        }
        return std::nullopt;
    }

    /// Everything after the low-link steps; always ends in a partition.
    /// `other` is the same cascade in the transposed frame.
    Partition conclude(Cascade& other) {
        const int k = k_, j = j_, a = a_, b = b_;
        if (auto p = low_link())
            return std::move(*p);
        if (auto p = high_link())
            return std::move(*p);

        const Cycle c2 = blue_cycle(walk(side(X(j + 1), Y(k)), X(k + 2), Y(k + 2),
                                         side1(X(j), X(b), {Y(b)}), Y(k + 1), X(k + 1), Y(b)));
        if (red(X(k + 3), Y(k + 3), "diag+3"))
            return finish({red_on(f_, k + 3), c2}, "diag+3");

        if (red(X(j), Y(k + 1), "cross")) {
            if (auto p = other.low_link())
                return std::move(*p);
            Cycle low = blue_cycle(walk(side1(Y(b), X(b)), side(Y(j + 1), X(j + 1))));
            Cycle mid = j == k - 1
                            ? blue_cycle(walk(side(X(a), Y(a)), X(k + 1), side1(Y(b), X(b)),
                                              Y(k + 1)))
                            : replace_edge(blue_cycle(walk(side(X(a), Y(a)),
                                                           side1(X(j + 2), Y(j + 2), {},
                                                                 {{X(b), Y(b)}}))),
                                           X(b), Y(b), {X(b), Y(k + 1), X(k + 1), Y(b)});
            return special(k + 2, low, mid, c2, "cross/special");
        }

        const Cycle rim = j == k - 1
                              ? blue_cycle(walk(side(X(a), X(k), {Y(k)}), side1(Y(b), X(b)),
                                                Y(k + 1)))
                              : blue_cycle(walk(side(X(a), X(j + 1), {Y(k)}),
                                                side1(Y(b), X(b), {X(j), Y(j + 2)}), Y(k + 1),
                                                X(j), Y(j + 2)));
        if (red(X(k + 1), Y(k + 3), "skip-chord"))
            return finish({red_cycle(walk(X(k + 1), f_.seg(Y(k + 3), X(k + 3)), Y(k + 2))),
                           edge_cycle(f_, X(k + 2), Y(k)), rim},
                          "skip-chord");

        const bool first = red(X(b), Y(k), "corner-pair");
        const bool second = red(X(k + 1), Y(a), "corner-pair");
        if (!first && !second) {
            Cycle low = blue_cycle(walk(side(X(j + 1), Y(k)), side1(X(b), Y(b))));
            Cycle mid = blue_cycle(walk(side(X(j + 1), Y(a)), X(k + 1), Y(k + 1),
                                        side1(X(b), Y(b))));
            return special(k + 2, low, mid, c2, "corner-pair/special");
        }

        if (red(X(a), Y(k + 2), "far-chord"))
            return close_rest({red_cycle(f_.seg(X(a), Y(k + 2)))},
                              first ? std::pair{X(b), Y(k)} : std::pair{X(k + 1), Y(a)},
                              "far-chord");

        if (red(X(k + 3), Y(k + 1), "back-chord"))
            return finish({blue_cycle(walk(side(X(j + 1), X(a), {Y(k)}), Y(k + 2),
                                           side1(X(j), Y(b)))),
                           red_cycle(walk(X(k + 2), f_.seg(Y(k + 3), X(k + 3)), Y(k + 1))),
                           edge_cycle(f_, X(k + 1), Y(k))},
                          "back-chord");

        const Cycle c3 = replace_edge(c2, X(k + 1), Y(k + 1), {X(k + 1), Y(k + 3), X(k + 3), Y(k + 1)});
        if (red(X(k + 4), Y(k + 4), "diag+4"))
            return finish({red_on(f_, k + 4), c3}, "diag+4");

        if (red(X(k + 4), Y(k), "top-chords"))
            return finish({red_cycle(walk(X(k + 1), Y(k + 2), X(k + 3), f_.seg(Y(k + 4), X(k + 4)),
                                          Y(k))),
                           edge_cycle(f_, X(k + 2), Y(k + 3)), rim},
                          "top-chords/1");
        if (red(X(k + 2), Y(k + 4), "top-chords"))
            return finish({blue_cycle(walk(side(X(j + 1), X(a), {Y(k)}), Y(k + 2),
                                           side1(X(j), X(b), {Y(b)}), Y(k + 1), X(k + 1), Y(b))),
                           red_cycle(walk(X(k + 2), f_.seg(Y(k + 4), X(k + 4)), Y(k + 3))),
                           edge_cycle(f_, X(k + 3), Y(k))},
                          "top-chords/2");

        const Cycle c4 = replace_edge(c3, X(k + 2), Y(k), {X(k + 2), Y(k + 4), X(k + 4), Y(k)});
        return special(k + 4, c2, c3, c4, "top/special");
    }

private:
    bool red(Vertex a, Vertex b, std::string_view step) {
        return pr_.probe(f_, a, b, step) == Colour::Red;
    }

    std::vector<Vertex> side(Vertex s, Vertex t, std::vector<Vertex> excl = {},
                             std::vector<std::pair<Vertex, Vertex>> req = {}) const {
        return plait_side_path(k_, sk_, s, t, excl, req);
    }
    std::vector<Vertex> side1(Vertex s, Vertex t, std::vector<Vertex> excl = {},
                              std::vector<std::pair<Vertex, Vertex>> req = {}) const {
        return plait_side_path(k_, sk1_, s, t, excl, req);
    }

    Partition finish(std::vector<Cycle> cs, std::string_view step) {
        return pr_.finish(f_, std::move(cs), step);
    }

    Partition special(int level, Cycle below, Cycle middle, Cycle top, std::string_view step) {
        pr_.outcome(step);
        for (const Cycle* c : {&below, &middle, &top})
            if (!verify_cycle_in(f_.z->view, to_real(f_, *c)))
                throw std::logic_error("special set witness from '" + std::string(step) +
                                       "' does not verify");
        SpecialSetWitness w{level, std::move(below), std::move(middle), std::move(top)};
        return special_in(f_, w, pr_);
    }

    /// Closes the vertices not covered by `cs`: a red cycle on the P-segment
    /// between the chord's ends, plus whatever two or four vertices remain.
    Partition close_rest(std::vector<Cycle> cs, std::pair<Vertex, Vertex> chord,
                         std::string_view step) {
        const int m = m_;
        std::vector<char> covered(2 * static_cast<std::size_t>(m) + 1, 0);
        for (const auto& c : cs)
            for (Vertex v : c.vertices)
                covered[static_cast<std::size_t>(path_position(m, v))] = 1;
        std::vector<Vertex> seg = f_.seg(chord.first, chord.second);
        for (Vertex v : seg) {
            auto& slot = covered[static_cast<std::size_t>(path_position(m, v))];
            if (slot)
                throw std::logic_error("closing segment overlaps in '" + std::string(step) + "'");
            slot = 1;
        }
        cs.push_back(red_cycle(std::move(seg)));
        std::vector<Vertex> left;
        for (int p = 1; p <= 2 * m; ++p)
            if (!covered[static_cast<std::size_t>(p)])
                left.push_back(path_vertex(m, p));
        if (left.size() == 2) {
            cs.push_back(edge_cycle(f_, left[0], left[1]));
        } else if (left.size() == 4) {
            std::vector<Vertex> xs, ys;
            for (Vertex v : left)
                (v.side == Side::X ? xs : ys).push_back(v);
            if (xs.size() != 2)
                throw std::logic_error("unbalanced remainder in '" + std::string(step) + "'");
            std::optional<Cycle> quad;
            for (Colour col : {Colour::Blue, Colour::Red})
                for (int swap = 0; swap < 2 && !quad; ++swap) {
                    Cycle c = Cycle::make({xs[0], ys[swap], xs[1], ys[1 - swap]}, col);
                    if (verify_cycle_in(f_.z->view, to_real(f_, c)))
                        quad = c;
                }
            if (!quad)
                throw std::logic_error("no monochromatic 4-cycle on the remainder in '" +
                                       std::string(step) + "'");
            cs.push_back(*quad);
        } else if (!left.empty()) {
            throw std::logic_error("remainder of size " + std::to_string(left.size()) + " in '" +
                                   std::string(step) + "'");
        }
        return finish(std::move(cs), step);
    }

    Frame f_;
    int k_, j_, m_, a_, b_;
    PlaitSide sk_, sk1_;
    Prober& pr_;
};

Partition run_cascade(const ZigzagView& z, int k, int j, bool transposed, Prober& pr) {
    const Frame plain{&z, false};
    {
        Cascade n(plain, k, 0, pr), t(plain.swapped(), k, 0, pr);
        if (auto p = n.corner())
            return std::move(*p);
        if (auto p = t.corner())
            return std::move(*p);
        if (auto p = n.diag2())
            return std::move(*p);
    }
    const int b = k % 2 == 0 ? 1 : 2;
    if (j == b)
        throw std::logic_error("plait witness on the corner survived the corner checks");
    const Frame f{&z, transposed};
    Cascade main(f, k, j, pr), mirror(f.swapped(), k, j, pr);
    return main.conclude(mirror);
}

PlaitStep extend_in(const ZigzagView& z, PlaitState ps, Prober& pr) {
    const int m = z.size();
    const int k = ps.k;
    if (k < 4 || k > m - 2)
        throw std::invalid_argument("extend_plait needs 4 <= k <= m-2");
    const Frame f{&z, false};
    if (pr.probe(f, X(k + 1), Y(k + 1), "level") == Colour::Red)
        return pr.finish(f,
                         {red_on(f, k + 1), side_cycle(k, PlaitSide::Odd),
                          side_cycle(k, PlaitSide::Even)},
                         "level-diagonal");
    for (int j = (k + 1) % 2 == 1 ? 1 : 2; j < k + 1; j += 2) {
        if (pr.probe(f, X(k + 1), Y(j), "level") == Colour::Red)
            return run_cascade(z, k, j, false, pr);
        if (pr.probe(f, X(j), Y(k + 1), "level") == Colour::Red)
            return run_cascade(z, k, j, true, pr);
    }
    pr.level(k + 1);
    return PlaitState{k + 1};
}

PlaitStep base_in(const ZigzagView& z, Prober& pr) {
    const int m = z.size();
    if (m < 5)
        throw std::invalid_argument("establish_base_plait needs m >= 5");
    const Frame f{&z, false};
    auto red = [&](int i, int j) { return pr.probe(f, X(i), Y(j), "base") == Colour::Red; };
    auto done = [&](std::vector<Cycle> cs) { return pr.finish(f, std::move(cs), "base"); };
    if (red(1, 1))
        return done({red_on(f, 1)});
    if (red(2, 2))
        return done({red_on(f, 2), edge_cycle(f, X(1), Y(1))});
    if (red(1, 3)) {
        auto pair = two_red(f, 1, ChordVariant::Forward);
        return done({pair[0], pair[1]});
    }
    if (red(3, 1)) {
        auto pair = two_red(f, 1, ChordVariant::Mirror);
        return done({pair[0], pair[1]});
    }
    if (red(3, 3))
        return done({red_on(f, 3), edge_cycle(f, X(1), Y(1)), edge_cycle(f, X(2), Y(2))});
    if (red(2, 4)) {
        auto pair = two_red(f, 2, ChordVariant::Forward);
        return done({pair[0], pair[1], edge_cycle(f, X(1), Y(1))});
    }
    if (red(4, 2)) {
        auto pair = two_red(f, 2, ChordVariant::Mirror);
        return done({pair[0], pair[1], edge_cycle(f, X(1), Y(1))});
    }
    if (red(4, 4))
        return done({red_on(f, 4), side_cycle(3, PlaitSide::Odd), edge_cycle(f, X(2), Y(2))});
    pr.level(4);
    return PlaitState{4};
}

} // namespace

// ---------------------------------------------------------------- public wrappers

Cycle red_cycle_from_path(const ZigzagView& z, int i) {
    if (i < 1 || i > z.size())
        throw std::invalid_argument("index out of range");
    if (z.colour(X(i), Y(i)) != Colour::Red)
        throw std::invalid_argument("edge " + to_string(X(i)) + to_string(Y(i)) + " is not red");
    return red_on(Frame{&z, false}, i);
}

std::array<Cycle, 2> red_two_cycles_from_chord(const ZigzagView& z, int i, ChordVariant variant) {
    if (i < 1 || i + 2 > z.size())
        throw std::invalid_argument("chord index out of range");
    const bool forward = variant == ChordVariant::Forward;
    const Vertex cx = forward ? X(i) : X(i + 2);
    const Vertex cy = forward ? Y(i + 2) : Y(i);
    if (z.colour(cx, cy) != Colour::Red)
        throw std::invalid_argument("chord " + to_string(cx) + to_string(cy) + " is not red");
    return two_red(Frame{&z, false}, i, variant);
}

WeakResult weak_partition(const ZigzagView& z) {
    FrameWeak w = weak_in(Frame{&z, false}, 1);
    return {Partition{std::move(w.cycles)}, w.condition};
}

Cycle splice(const ZigzagView& z, const Cycle& c1, const Cycle& c2, Vertex u1, Vertex us,
             Vertex v1, Vertex vt) {
    if (u1.side == vt.side || v1.side == us.side)
        throw std::invalid_argument("splice chords must join opposite classes");
    for (auto [p, q] : {std::pair{u1, vt}, std::pair{v1, us}})
        if (z.colour(p, q) != Colour::Blue)
            throw std::invalid_argument("splice chord " + to_string(p) + to_string(q) +
                                        " is not blue");
    for (Vertex v : c1.vertices)
        if (c2.contains(v))
            throw std::invalid_argument("spliced cycles share " + to_string(v));
    return splice_raw(c1, c2, u1, us, v1, vt);
}

Partition special_set_partition(const ZigzagView& z, const SpecialSetWitness& w,
                                ZigzagTrace* trace) {
    const int k = w.k;
    if (k < 2 || k > z.size())
        throw std::invalid_argument("special set level out of range");
    auto spans = [&](const Cycle& c, int level, bool through_top) {
        if (!verify_cycle_in(z.view, c) || c.colour != Colour::Blue ||
            c.size() != 2 * static_cast<std::size_t>(level))
            return false;
        for (Vertex v : c.vertices)
            if (v.index > level)
                return false;
        return !through_top || (c.uses_edge(X(level - 1), Y(level - 1)) &&
                                c.uses_edge(X(level), Y(level)));
    };
    if ((k > 2 && (!w.below || !spans(*w.below, k - 2, false))) || !spans(w.middle, k - 1, false) ||
        !spans(w.top, k, true))
        throw std::invalid_argument("special set witness does not verify");
    SpecialSetWitness inner = w;
    if (k == 2)
        inner.below.reset();
    Prober pr(trace);
    return special_in(Frame{&z, false}, inner, pr);
}

PlaitStep establish_base_plait(const ZigzagView& z, ZigzagTrace* trace) {
    Prober pr(trace);
    return base_in(z, pr);
}

PlaitStep extend_plait(const ZigzagView& z, PlaitState ps, ZigzagTrace* trace) {
    Prober pr(trace);
    return extend_in(z, ps, pr);
}

Partition partition_three(const ZigzagView& z, ZigzagTrace* trace) {
    const int m = z.size();
    if (m <= kZigzagOracleThreshold) {
        OracleResult r = min_cycle_partition(z.view.materialize(), kZigzagOracleThreshold);
        if (r.minimum > 3)
            throw std::logic_error("zigzag view needs " + std::to_string(r.minimum) + " cycles");
        if (trace)
            trace->outcome = "oracle";
        return std::move(r.witness);
    }
    Prober pr(trace);
    PlaitStep step = base_in(z, pr);
    while (auto* ps = std::get_if<PlaitState>(&step)) {
        if (ps->k == m - 1) {
            const Frame f{&z, false};
            return pr.finish(f,
                             {edge_cycle(f, X(m), Y(m)), side_cycle(m - 1, PlaitSide::Odd),
                              side_cycle(m - 1, PlaitSide::Even)},
                             "plait-complete");
        }
        step = extend_in(z, *ps, pr);
    }
    return std::get<Partition>(std::move(step));
}

} // namespace mcp
