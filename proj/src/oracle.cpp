#include "mcp/oracle.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace mcp {

namespace {

using Mask = std::uint32_t;

// Bits 0..n-1 are x1..xn, bits n..2n-1 are y1..yn.
class SubsetTables {
public:
    explicit SubsetTables(const Colouring& c) : n_(c.size()), full_((Mask{1} << (2 * n_)) - 1) {
        const int v = 2 * n_;
        xmask_ = (Mask{1} << n_) - 1;
        for (int col = 0; col < 2; ++col) {
            adj_[col].assign(static_cast<std::size_t>(v), 0);
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    if (static_cast<int>(c.colour(i + 1, j + 1)) == col) {
                        adj_[col][static_cast<std::size_t>(i)] |= Mask{1} << (n_ + j);
                        adj_[col][static_cast<std::size_t>(n_ + j)] |= Mask{1} << i;
                    }
            build_paths(col);
        }
    }

    int n() const noexcept { return n_; }
    Mask full() const noexcept { return full_; }

    bool balanced(Mask s) const noexcept {
        return std::popcount(s & xmask_) == std::popcount(s & ~xmask_);
    }

    // Spanning cycle of at least four vertices in colour col.
    bool cyclable(int col, Mask s) const noexcept {
        if (std::popcount(s) < 4 || !balanced(s))
            return false;
        const int low = std::countr_zero(s);
        return (ends_[col][s] & adj_[col][static_cast<std::size_t>(low)]) != 0;
    }

    // Red-capable (col 0) or blue-capable (col 1) as a cycle of any kind.
    bool capable(int col, Mask s) const noexcept {
        const int k = std::popcount(s);
        if (k == 1)
            return true;
        if (k == 2) {
            const int a = std::countr_zero(s);
            return (adj_[col][static_cast<std::size_t>(a)] & s) != 0;
        }
        return cyclable(col, s);
    }

    Vertex vertex(int bit) const noexcept {
        return bit < n_ ? xv(bit + 1) : yv(bit - n_ + 1);
    }

    Cycle cycle_of(Mask s) const {
        const int k = std::popcount(s);
        if (k == 1)
            return Cycle::make({vertex(std::countr_zero(s))}, std::nullopt);
        if (k == 2) {
            const int a = std::countr_zero(s);
            const int b = std::countr_zero(s & (s - 1));
            const int col = (adj_[0][static_cast<std::size_t>(a)] >> b) & 1 ? 0 : 1;
            return Cycle::make({vertex(a), vertex(b)}, static_cast<Colour>(col));
        }
        const int col = cyclable(0, s) ? 0 : 1;
        const int low = std::countr_zero(s);
        Mask cur = s;
        Mask ends = ends_[col][cur] & adj_[col][static_cast<std::size_t>(low)];
        int v = std::countr_zero(ends);
        std::vector<Vertex> rev;
        while (true) {
            rev.push_back(vertex(v));
            if (v == low)
                break;
            Mask prev = cur & ~(Mask{1} << v);
            Mask cand = ends_[col][prev] & adj_[col][static_cast<std::size_t>(v)];
            cur = prev;
            v = std::countr_zero(cand);
        }
        return Cycle::make(std::vector<Vertex>(rev.rbegin(), rev.rend()), static_cast<Colour>(col));
    }

private:
    // ends_[col][s]: vertices v such that a col-path from lowest(s) to v spans s.
    void build_paths(int col) {
        auto& ends = ends_[col];
        ends.assign(static_cast<std::size_t>(full_) + 1, 0);
        for (int b = 0; b < 2 * n_; ++b)
            ends[Mask{1} << b] = Mask{1} << b;
        for (Mask s = 1; s <= full_; ++s) {
            Mask e = ends[s];
            if (e == 0)
                continue;
            const int low = std::countr_zero(s);
            const Mask above = ~((Mask{2} << low) - 1);
            while (e) {
                const int v = std::countr_zero(e);
                e &= e - 1;
                Mask nxt = adj_[col][static_cast<std::size_t>(v)] & ~s & above;
                while (nxt) {
                    const int w = std::countr_zero(nxt);
                    nxt &= nxt - 1;
                    ends[s | (Mask{1} << w)] |= Mask{1} << w;
                }
            }
            if (s == full_)
                break;
        }
    }

    int n_;
    Mask full_;
    Mask xmask_ = 0;
    std::vector<Mask> adj_[2];
    std::vector<Mask> ends_[2];
};

void check_limit(const Colouring& c, int limit_n) {
    const int limit = std::min(limit_n, kOracleHardCap);
    if (c.size() > limit)
        throw OracleRefusal(c.size(), limit);
}

} // namespace

OracleResult min_cycle_partition(const Colouring& c, int limit_n) {
    check_limit(c, limit_n);
    SubsetTables t(c);
    const Mask full = t.full();
    std::vector<std::uint8_t> valid(static_cast<std::size_t>(full) + 1, 0);
    for (Mask s = 1; s <= full; ++s) {
        valid[s] = t.capable(0, s) || t.capable(1, s);
        if (s == full)
            break;
    }

    constexpr std::uint8_t kInf = 0xff;
    std::vector<std::uint8_t> best(static_cast<std::size_t>(full) + 1, kInf);
    best[0] = 0;
    for (Mask u = 1; u <= full; ++u) {
        const Mask vbit = u & (~u + 1);
        const Mask rest = u & ~vbit;
        std::uint8_t b = kInf;
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            const Mask s = sub | vbit;
            if (valid[s] && best[u & ~s] != kInf && best[u & ~s] + 1 < b)
                b = static_cast<std::uint8_t>(best[u & ~s] + 1);
            if (sub == 0)
                break;
        }
        best[u] = b;
        if (u == full)
            break;
    }

    OracleResult res;
    res.minimum = best[full];
    Mask u = full;
    while (u) {
        const Mask vbit = u & (~u + 1);
        const Mask rest = u & ~vbit;
        // larger groups first, so a singleton is only chosen when forced
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            const Mask s = sub | vbit;
            if (valid[s] && best[u & ~s] + 1 == best[u]) {
                res.witness.cycles.push_back(t.cycle_of(s));
                u &= ~s;
                break;
            }
            if (sub == 0)
                throw std::logic_error("oracle witness reconstruction failed");
        }
    }
    return res;
}

bool exists_two_cycle_bicolour_partition(const Colouring& c, int limit_n) {
    check_limit(c, limit_n);
    SubsetTables t(c);
    const Mask full = t.full();
    const Mask rest = full & ~Mask{1};
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
        const Mask s = sub | 1;
        const Mask other = full & ~s;
        if (other != 0 && ((t.capable(0, s) && t.capable(1, other)) ||
                           (t.capable(1, s) && t.capable(0, other))))
            return true;
        if (sub == 0)
            break;
    }
    return false;
}

namespace {

struct Backtracker {
    const Colouring& c;
    std::span<const int> xs;
    std::span<const int> ys;
    Colour colour;
    std::vector<char> used_x, used_y;
    std::vector<Vertex> path;

    bool edge_ok(Vertex a, Vertex b) const {
        return (a.side == Side::X ? c.colour(a.index, b.index) : c.colour(b.index, a.index)) ==
               colour;
    }

    bool extend() {
        const std::size_t total = xs.size() + ys.size();
        if (path.size() == total)
            return edge_ok(path.back(), path.front());
        const Vertex last = path.back();
        const bool need_y = last.side == Side::X;
        auto pool = need_y ? ys : xs;
        auto& used = need_y ? used_y : used_x;
        for (std::size_t k = 0; k < pool.size(); ++k) {
            if (used[k])
                continue;
            Vertex w{need_y ? Side::Y : Side::X, pool[k]};
            if (!edge_ok(last, w))
                continue;
            used[k] = 1;
            path.push_back(w);
            if (extend())
                return true;
            path.pop_back();
            used[k] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<Cycle> mono_hamiltonian_cycle_on(const Colouring& c, std::span<const int> xs,
                                               std::span<const int> ys, Colour colour) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("mono_hamiltonian_cycle_on: need |xs| = |ys| >= 1");
    if (xs.size() == 1) {
        if (c.edge_colour(xs[0], ys[0]) != colour)
            return std::nullopt;
        return Cycle::make({xv(xs[0]), yv(ys[0])}, colour);
    }
    Backtracker bt{c, xs, ys, colour, std::vector<char>(xs.size(), 0),
                   std::vector<char>(ys.size(), 0), {}};
    bt.used_x[0] = 1;
    bt.path.push_back(xv(xs[0]));
    if (!bt.extend())
        return std::nullopt;
    return Cycle::make(std::move(bt.path), colour);
}

} // namespace mcp
