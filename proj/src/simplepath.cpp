#include "mcp/simplepath.hpp"

#include "mcp/verify.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace mcp {

namespace {

// Path (r_s, ..., r_1, x, b_1, ..., b_t): red[i-1] = r_i, blue[i-1] = b_i.
struct Chains {
    Vertex x;
    std::vector<Vertex> red;
    std::vector<Vertex> blue;

    std::size_t size() const noexcept { return 1 + red.size() + blue.size(); }
    Vertex red_end() const noexcept { return red.empty() ? x : red.back(); }
    Vertex blue_end() const noexcept { return blue.empty() ? x : blue.back(); }
};

// The same path seen with colours complemented: chains swap roles.
struct Frame {
    const Chains& p;
    bool flip;

    const std::vector<Vertex>& r() const noexcept { return flip ? p.blue : p.red; }
    const std::vector<Vertex>& b() const noexcept { return flip ? p.red : p.blue; }
};

void append(std::vector<Vertex>& out, const std::vector<Vertex>& v) {
    out.insert(out.end(), v.begin(), v.end());
}

void append_reversed(std::vector<Vertex>& out, const std::vector<Vertex>& v) {
    out.insert(out.end(), v.rbegin(), v.rend());
}

std::string describe(const std::vector<Vertex>& seq) {
    std::ostringstream os;
    for (std::size_t k = 0; k < seq.size(); ++k)
        os << (k ? "," : "") << seq[k];
    return os.str();
}

class Engine {
public:
    Engine(const Colouring& c, EngineStats* stats)
        : c_(c), n_(c.size()), stats_(stats), mark_(2 * static_cast<std::size_t>(n_), 0) {}

    EngineResult run() {
        adopt(Chains{xv(1), {}, {}});
        while (path_.size() < 2 * static_cast<std::size_t>(n_)) {
            if (trivial_extend())
                continue;
            std::optional<Chains> next = step();
            if (!next) {
                if (auto cert = certificate_or_violation())
                    return *cert;
                continue; // the scan adopted an improvement
            }
            adopt(std::move(*next));
        }
        return to_simple_path(path_);
    }

private:
    Colour col(Vertex a, Vertex b) const { return colour_between(c_, a, b); }

    std::size_t slot(Vertex v) const {
        return static_cast<std::size_t>(v.index - 1) +
               (v.side == Side::Y ? static_cast<std::size_t>(n_) : 0);
    }

    void note_size(std::size_t before, std::size_t after) {
        if (!stats_)
            return;
        if (after > before)
            ++stats_->extensions;
        else
            ++stats_->rewrites;
    }

    void adopt(Chains p) {
        if (covered_count_ > 0)
            note_size(covered_count_, p.size());
        covered_.assign(2 * static_cast<std::size_t>(n_), 0);
        covered_[slot(p.x)] = 1;
        for (Vertex v : p.red)
            covered_[slot(v)] = 1;
        for (Vertex v : p.blue)
            covered_[slot(v)] = 1;
        covered_count_ = p.size();
        path_ = std::move(p);
    }

    std::optional<Vertex> first_uncovered(Side s) const {
        for (int i = 1; i <= n_; ++i)
            if (!covered_[slot(Vertex{s, i})])
                return Vertex{s, i};
        return std::nullopt;
    }

    bool trivial_extend() {
        struct End {
            std::vector<Vertex>* chain;
            Colour want;
        };
        for (End e : {End{&path_.red, Colour::Red}, End{&path_.blue, Colour::Blue}}) {
            Vertex tip = e.chain->empty() ? path_.x : e.chain->back();
            const Side s = other(tip.side);
            for (int i = 1; i <= n_; ++i) {
                Vertex w{s, i};
                if (!covered_[slot(w)] && col(tip, w) == e.want) {
                    e.chain->push_back(w);
                    covered_[slot(w)] = 1;
                    ++covered_count_;
                    if (stats_)
                        ++stats_->extensions;
                    return true;
                }
            }
        }
        return false;
    }

    // Reads seq as a simple path in either direction.
    std::optional<Chains> make_simple(const std::vector<Vertex>& seq) const {
        if (seq.empty())
            return std::nullopt;
        ++stamp_;
        for (std::size_t k = 0; k < seq.size(); ++k) {
            Vertex v = seq[k];
            if (v.index < 1 || v.index > n_ || mark_[slot(v)] == stamp_)
                return std::nullopt;
            mark_[slot(v)] = stamp_;
            if (k > 0 && seq[k - 1].side == v.side)
                return std::nullopt;
        }
        std::vector<Colour> e(seq.size() - 1);
        for (std::size_t k = 0; k + 1 < seq.size(); ++k)
            e[k] = col(seq[k], seq[k + 1]);
        auto reds_then_blues = [&](bool reversed) -> std::optional<std::size_t> {
            const std::size_t m = e.size();
            auto at = [&](std::size_t k) { return reversed ? e[m - 1 - k] : e[k]; };
            std::size_t k = 0;
            while (k < m && at(k) == Colour::Red)
                ++k;
            const std::size_t turn = k;
            while (k < m && at(k) == Colour::Blue)
                ++k;
            if (k != m)
                return std::nullopt;
            return turn;
        };
        std::vector<Vertex> s = seq;
        auto turn = reds_then_blues(false);
        if (!turn) {
            turn = reds_then_blues(true);
            if (!turn)
                return std::nullopt;
            std::reverse(s.begin(), s.end());
        }
        Chains out{s[*turn], {}, {}};
        out.red.assign(s.rend() - static_cast<std::ptrdiff_t>(*turn), s.rend());
        out.blue.assign(s.begin() + static_cast<std::ptrdiff_t>(*turn) + 1, s.end());
        return out;
    }

    Chains expect_simple(const std::vector<Vertex>& seq, std::size_t size,
                         const char* what) const {
        auto p = make_simple(seq);
        if (!p || p->size() != size)
            throw std::logic_error(std::string("simple path engine: ") + what +
                                   " produced an invalid path (" + describe(seq) + ")");
        return *p;
    }

    std::optional<Chains> step() {
        const Vertex x = path_.x;
        const Side er = path_.red_end().side;
        const Side eb = path_.blue_end().side;
        const std::size_t sz = path_.size();
        if (er != eb) {
            // endpoints in different classes
            Vertex y = *first_uncovered(other(x.side));
            std::vector<Vertex> seq{y, x};
            if (col(x, y) == Colour::Red) {
                append(seq, path_.red);
                append_reversed(seq, path_.blue);
            } else {
                append(seq, path_.blue);
                append_reversed(seq, path_.red);
            }
            return expect_simple(seq, sz + 1, "case A");
        }
        if (er == x.side) {
            // endpoints and turning point in one class
            Vertex y = *first_uncovered(other(x.side));
            const bool red = col(x, y) == Colour::Red;
            std::vector<Vertex> seq;
            append_reversed(seq, red ? path_.red : path_.blue);
            seq.push_back(x);
            seq.push_back(y);
            append_reversed(seq, red ? path_.blue : path_.red);
            return expect_simple(seq, sz + 1, "case B");
        }
        return check_c(path_);
    }

    std::optional<Chains> check_c(const Chains& p) const {
        for (bool flip : {false, true})
            if (auto q = check_c_frame(Frame{p, flip}))
                return q;
        return std::nullopt;
    }

    // (r_{i-1}, ..., r_1, x, r_s, ..., r_i, b_t, ..., b_1)
    static std::vector<Vertex> rotation(const Frame& f, std::size_t i) {
        const auto& r = f.r();
        std::vector<Vertex> seq(r.rend() - static_cast<std::ptrdiff_t>(i - 1), r.rend());
        seq.push_back(f.p.x);
        seq.insert(seq.end(), r.rbegin(), r.rend() - static_cast<std::ptrdiff_t>(i - 1));
        append_reversed(seq, f.b());
        return seq;
    }

    // (u, r_i, ..., r_1, x, r_s, ..., r_{i+1}, b_1, ..., b_t)
    static std::vector<Vertex> insertion(const Frame& f, Vertex u, std::size_t i) {
        const auto& r = f.r();
        std::vector<Vertex> seq{u};
        seq.insert(seq.end(), r.rend() - static_cast<std::ptrdiff_t>(i), r.rend());
        seq.push_back(f.p.x);
        seq.insert(seq.end(), r.rbegin(), r.rend() - static_cast<std::ptrdiff_t>(i));
        append(seq, f.b());
        return seq;
    }

    std::optional<Chains> check_c_frame(const Frame& f) const {
        const auto& r = f.r();
        const auto& b = f.b();
        const Colour red = flip_if(Colour::Red, f.flip);
        const Colour blue = complement(red);
        const Vertex x = f.p.x;
        const std::size_t s = r.size();
        const std::size_t t = b.size();
        const std::size_t sz = f.p.size();

        if (col(r[s - 1], x) != red) {
            std::vector<Vertex> seq(r.begin(), r.end());
            seq.push_back(x);
            append(seq, b);
            return expect_simple(seq, sz, "closing-edge rotation");
        }
        for (std::size_t i = 2; i < s; i += 2)
            if (col(r[i - 1], b[t - 1]) != blue)
                return expect_simple(rotation(f, i), sz, "red-chain rotation");

        const Vertex u = *first_uncovered(x.side);
        for (std::size_t i = 1; i <= s; i += 2)
            if (col(u, r[i - 1]) != blue)
                return expect_simple(insertion(f, u, i), sz + 1, "red-chain insertion");

        for (std::size_t j = 3; j + 1 < s; j += 2)
            if (col(x, r[j - 1]) != red)
                return improvement_loop(f, u, j);
        return std::nullopt;
    }

    // Red path U plus a cycle made of red path V and blue path W, growing W.
    std::optional<Chains> improvement_loop(const Frame& f, Vertex u, std::size_t j) const {
        const auto& r = f.r();
        const auto& b = f.b();
        const Colour red = flip_if(Colour::Red, f.flip);
        const std::size_t want = f.p.size() + 1;

        std::vector<Vertex> U(r.begin() + static_cast<std::ptrdiff_t>(j), r.end());
        std::vector<Vertex> V(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(j - 1));
        std::vector<Vertex> W(b.rbegin(), b.rend());
        W.push_back(f.p.x);
        W.push_back(r[j - 1]);
        W.push_back(u);

        while (true) {
            if (U.empty()) {
                std::vector<Vertex> seq = V;
                append(seq, W);
                return expect_simple(seq, want, "path-plus-cycle closure");
            }
            if (U.front().side != V.front().side)
                std::reverse(U.begin(), U.end());
            if (col(U.back(), V.front()) == red) {
                std::vector<Vertex> seq = U;
                append(seq, V);
                append(seq, W);
                return expect_simple(seq, want, "path-plus-cycle join");
            }
            if (col(U.front(), V.back()) == red) {
                std::vector<Vertex> seq(U.rbegin(), U.rend());
                append_reversed(seq, V);
                append_reversed(seq, W);
                return expect_simple(seq, want, "path-plus-cycle join");
            }
            std::vector<Vertex> nextW{V.front()};
            append_reversed(nextW, W);
            nextW.push_back(V.back());
            std::vector<Vertex> nextU(V.begin() + 1, V.end() - 1);
            V = std::move(U);
            U = std::move(nextU);
            W = std::move(nextW);
            if (stats_)
                ++stats_->loop_steps;
        }
    }

    // (y, z, x, <chain of colour yz>, <other chain without its first vertex>)
    std::optional<Chains> two_step_insertion(const Chains& p, Vertex y, Vertex z) const {
        const Colour cz = col(z, p.x);
        if (col(y, z) != cz)
            return std::nullopt;
        const auto& same = cz == Colour::Red ? p.red : p.blue;
        const auto& rest = cz == Colour::Red ? p.blue : p.red;
        std::vector<Vertex> seq{y, z, p.x};
        append(seq, same);
        if (!rest.empty())
            seq.insert(seq.end(), rest.begin() + 1, rest.end());
        return expect_simple(seq, p.size() + 1, "two-step insertion");
    }

    // Builds the candidate split blocks and probes every cross edge. Returns
    // the certificate, or adopts the improvement that a wrong edge yields.
    std::optional<SplitCertificate> certificate_or_violation() {
        if (stats_)
            ++stats_->scans;
        const Side a_side = path_.x.side;
        const Side b_side = other(a_side);
        // chain position: 0 = x, +i red r_i, -i blue b_i, unset when uncovered
        std::vector<long> where(2 * static_cast<std::size_t>(n_), 0);
        std::vector<char> on_path(2 * static_cast<std::size_t>(n_), 0);
        on_path[slot(path_.x)] = 1;
        for (std::size_t i = 0; i < path_.red.size(); ++i) {
            where[slot(path_.red[i])] = static_cast<long>(i + 1);
            on_path[slot(path_.red[i])] = 1;
        }
        for (std::size_t i = 0; i < path_.blue.size(); ++i) {
            where[slot(path_.blue[i])] = -static_cast<long>(i + 1);
            on_path[slot(path_.blue[i])] = 1;
        }
        auto block = [&](Vertex v) {
            if (v.side == a_side)
                return on_path[slot(v)] ? 1 : 2;
            if (on_path[slot(v)])
                return where[slot(v)] > 0 ? 1 : 2;
            return col(path_.x, v) == Colour::Red ? 1 : 2;
        };

        for (int ai = 1; ai <= n_; ++ai) {
            const Vertex a{a_side, ai};
            const int ba = block(a);
            for (int zi = 1; zi <= n_; ++zi) {
                const Vertex z{b_side, zi};
                const Colour want = ba == block(z) ? Colour::Red : Colour::Blue;
                if (col(a, z) == want)
                    continue;
                if (stats_)
                    ++stats_->repairs;
                adopt(repair(a, z, on_path[slot(a)] != 0, on_path[slot(z)] != 0, where));
                return std::nullopt;
            }
        }

        SplitCertificate cert;
        for (int i = 1; i <= n_; ++i) {
            (block(Vertex{a_side, i}) == 1 ? cert.x1 : cert.x2).push_back(i);
            (block(Vertex{b_side, i}) == 1 ? cert.y1 : cert.y2).push_back(i);
        }
        if (a_side == Side::Y) {
            std::swap(cert.x1, cert.y1);
            std::swap(cert.x2, cert.y2);
        }
        if (!verify_split(c_, cert))
            throw std::logic_error("simple path engine: assembled split certificate does not verify");
        return cert;
    }

    Chains repair(Vertex a, Vertex z, bool a_on, bool z_on, const std::vector<long>& where) const {
        auto fail = [&]() -> Chains {
            throw std::logic_error("simple path engine: no improvement for edge " + to_string(a) +
                                   to_string(z));
        };
        const Frame red_frame{path_, false};
        const Frame blue_frame{path_, true};
        if (!a_on) {
            if (!z_on) {
                if (auto q = two_step_insertion(path_, a, z))
                    return *q;
                return fail();
            }
            const long w = where[slot(z)];
            const Frame& f = w > 0 ? red_frame : blue_frame;
            return expect_simple(insertion(f, a, static_cast<std::size_t>(std::abs(w))),
                                 path_.size() + 1, "uncovered insertion");
        }
        const long wa = where[slot(a)];
        if (wa == 0)
            return fail();
        // the same vertex set re-rooted at a
        const Frame& fa = wa > 0 ? red_frame : blue_frame;
        const Chains rooted = expect_simple(rotation(fa, static_cast<std::size_t>(std::abs(wa))),
                                            path_.size(), "re-rooting");
        if (!(rooted.x == a))
            return fail();
        if (z_on) {
            if (auto q = check_c(rooted))
                return *q;
            return fail();
        }
        const Vertex y = *first_uncovered(a.side);
        if (auto q = two_step_insertion(path_, y, z))
            return *q;
        if (auto q = two_step_insertion(rooted, y, z))
            return *q;
        return fail();
    }

    static SimplePath to_simple_path(const Chains& p) {
        SimplePath sp;
        sp.vertices.assign(p.blue.rbegin(), p.blue.rend());
        sp.vertices.push_back(p.x);
        append(sp.vertices, p.red);
        sp.turning = p.blue.size();
        return sp;
    }

    const Colouring& c_;
    int n_;
    EngineStats* stats_;
    Chains path_{};
    std::vector<char> covered_;
    std::size_t covered_count_ = 0;
    mutable std::vector<unsigned> mark_;
    mutable unsigned stamp_ = 0;
};

} // namespace

EngineResult find_hamiltonian_simple_path(const Colouring& c, EngineStats* stats) {
    return Engine(c, stats).run();
}

namespace {

MonoPath mono_path(std::vector<Vertex> vs, Colour colour) {
    MonoPath p;
    if (!vs.empty())
        p.colour = colour;
    p.vertices = std::move(vs);
    return p;
}

} // namespace

PathCycleDecomposition decompose_path_and_cycle(const Colouring& c, const SimplePath& sp) {
    const std::size_t total = 2 * static_cast<std::size_t>(c.size());
    if (sp.vertices.size() != total || !verify_simple_path(c, sp.vertices, sp.turning))
        throw std::invalid_argument("decompose_path_and_cycle: not a Hamiltonian simple path");
    auto col = [&](Vertex a, Vertex b) { return colour_between(c, a, b); };

    // Both pieces of even size; the turning point joins whichever side is odd.
    const std::size_t p = sp.turning;
    const std::size_t cut = p % 2 == 0 ? p : p + 1;
    std::deque<Vertex> blue(sp.vertices.begin(), sp.vertices.begin() + static_cast<std::ptrdiff_t>(cut));
    const std::vector<Vertex> red_all(sp.vertices.begin() + static_cast<std::ptrdiff_t>(cut),
                                      sp.vertices.end());
    std::size_t lo = 0, hi = red_all.size(); // red path is red_all[lo, hi)
    bool red_reversed = false;
    auto rfirst = [&]() { return red_reversed ? red_all[hi - 1] : red_all[lo]; };
    auto rlast = [&]() { return red_reversed ? red_all[lo] : red_all[hi - 1]; };
    auto red_vertices = [&](std::size_t from, std::size_t to) {
        std::vector<Vertex> out(red_all.begin() + static_cast<std::ptrdiff_t>(from),
                                red_all.begin() + static_cast<std::ptrdiff_t>(to));
        if (red_reversed)
            std::reverse(out.begin(), out.end());
        return out;
    };

    while (true) {
        if (lo == hi) {
            std::vector<Vertex> bv(blue.begin(), blue.end());
            if (col(bv.front(), bv.back()) == Colour::Blue || bv.size() == 2)
                return {Cycle::make(bv, Colour::Blue), MonoPath{}};
            Cycle chord = Cycle::make({bv.front(), bv.back()}, Colour::Red);
            return {chord, mono_path(std::vector<Vertex>(bv.begin() + 1, bv.end() - 1), Colour::Blue)};
        }
        if (blue.empty()) {
            std::vector<Vertex> rv = red_vertices(lo, hi);
            if (col(rv.front(), rv.back()) == Colour::Red || rv.size() == 2)
                return {Cycle::make(rv, Colour::Red), MonoPath{}};
            Cycle chord = Cycle::make({rv.front(), rv.back()}, Colour::Blue);
            return {chord, mono_path(std::vector<Vertex>(rv.begin() + 1, rv.end() - 1), Colour::Red)};
        }
        if (col(rfirst(), rlast()) == Colour::Red)
            return {Cycle::make(red_vertices(lo, hi), Colour::Red),
                    mono_path(std::vector<Vertex>(blue.begin(), blue.end()), Colour::Blue)};
        if (col(blue.front(), blue.back()) == Colour::Blue)
            return {Cycle::make(std::vector<Vertex>(blue.begin(), blue.end()), Colour::Blue),
                    mono_path(red_vertices(lo, hi), Colour::Red)};

        if (rfirst().side == blue.back().side)
            red_reversed = !red_reversed;
        const Vertex r1 = rfirst(), ra = rlast();
        const Vertex b1 = blue.front(), bc = blue.back();
        const bool h_red = col(bc, r1) == Colour::Red;
        const bool g_red = col(b1, ra) == Colour::Red;
        if (h_red && g_red) {
            std::vector<Vertex> cyc{b1, bc};
            append(cyc, red_vertices(lo, hi));
            return {Cycle::make(std::move(cyc), Colour::Red),
                    mono_path(std::vector<Vertex>(blue.begin() + 1, blue.end() - 1), Colour::Blue)};
        }
        // strip r_1 and r_a from the red path
        ++lo;
        --hi;
        if (!h_red && !g_red) {
            std::vector<Vertex> cyc(blue.begin(), blue.end());
            cyc.push_back(r1);
            cyc.push_back(ra);
            return {Cycle::make(std::move(cyc), Colour::Blue), mono_path(red_vertices(lo, hi), Colour::Red)};
        }
        if (!h_red) {
            blue.push_back(r1);
            blue.push_back(ra);
        } else {
            blue.push_front(ra);
            blue.push_front(r1);
        }
    }
}

} // namespace mcp
