#include "mcp/split.hpp"

#include "mcp/verify.hpp"

#include <stdexcept>

namespace mcp {

std::optional<SplitCertificate> detect_split(const Colouring& c) {
    const int n = c.size();
    if (n < 2)
        return std::nullopt;
    auto same_row = [&](int a, int b) {
        for (int j = 1; j <= n; ++j)
            if (c.colour(a, j) != c.colour(b, j))
                return false;
        return true;
    };
    auto complementary_row = [&](int a, int b) {
        for (int j = 1; j <= n; ++j)
            if (c.colour(a, j) == c.colour(b, j))
                return false;
        return true;
    };

    int second = 0;
    SplitCertificate cert;
    for (int i = 1; i <= n; ++i) {
        if (same_row(1, i)) {
            cert.x1.push_back(i);
            continue;
        }
        if (second == 0) {
            if (!complementary_row(1, i))
                return std::nullopt;
            second = i;
        } else if (!same_row(second, i)) {
            return std::nullopt;
        }
        cert.x2.push_back(i);
    }
    if (second == 0)
        return std::nullopt;
    for (int j = 1; j <= n; ++j)
        (c.colour(1, j) == Colour::Red ? cert.y1 : cert.y2).push_back(j);
    if (cert.y1.empty() || cert.y2.empty())
        return std::nullopt;
    return cert;
}

bool split_two_cycle_feasible(const SplitCertificate& cert) noexcept {
    return cert.x1.size() == cert.y1.size() || cert.x1.size() == cert.y2.size();
}

namespace {

// xs and ys equal length; increasing order, interleaved from the X side.
Cycle block_cycle(std::span<const int> xs, std::span<const int> ys, Colour colour) {
    std::vector<Vertex> vs;
    vs.reserve(xs.size() * 2);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        vs.push_back(xv(xs[k]));
        vs.push_back(yv(ys[k]));
    }
    return Cycle::make(std::move(vs), colour);
}

} // namespace

Partition partition_split(const Colouring& c, const SplitCertificate& cert) {
    if (!verify_split(c, cert))
        throw std::invalid_argument("partition_split: certificate does not verify");

    std::span<const int> x1 = cert.x1, x2 = cert.x2, y1 = cert.y1, y2 = cert.y2;
    if (x1.size() < y1.size()) {
        std::swap(x1, x2);
        std::swap(y1, y2);
    }

    Partition p;
    if (x1.size() == y1.size()) {
        p.cycles.push_back(block_cycle(x1, y1, Colour::Red));
        p.cycles.push_back(block_cycle(x2, y2, Colour::Red));
    } else if (x1.size() == y2.size()) {
        p.cycles.push_back(block_cycle(x1, y2, Colour::Blue));
        p.cycles.push_back(block_cycle(x2, y1, Colour::Blue));
    } else {
        const std::size_t a = y1.size();
        const std::size_t b = x2.size();
        p.cycles.push_back(block_cycle(x1.first(a), y1, Colour::Red));
        p.cycles.push_back(block_cycle(x2, y2.first(b), Colour::Red));
        p.cycles.push_back(block_cycle(x1.subspan(a), y2.subspan(b), Colour::Blue));
    }
    return p;
}

} // namespace mcp
