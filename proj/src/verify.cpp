#include "mcp/verify.hpp"

#include <algorithm>

namespace mcp {

VerifyReport verify_partition(const Colouring& c, const Partition& p) {
    return verify_partition_in(c, p);
}

bool verify_cycle(const Colouring& c, const Cycle& cyc) { return verify_cycle_in(c, cyc); }

bool verify_mono_path(const Colouring& c, const MonoPath& path) {
    return verify_mono_path_in(c, path);
}

bool verify_simple_path(const Colouring& c, std::span<const Vertex> seq, std::size_t turning) {
    return verify_simple_path_in(c, seq, turning);
}

namespace {

// 0 = not listed, 1 = first part, 2 = second part; false on overlap or bad index.
bool assign_parts(std::vector<int>& part, const std::vector<int>& a, const std::vector<int>& b,
                  int n) {
    part.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int which = 1; which <= 2; ++which)
        for (int i : which == 1 ? a : b) {
            if (i < 1 || i > n || part[static_cast<std::size_t>(i)] != 0)
                return false;
            part[static_cast<std::size_t>(i)] = which;
        }
    return std::none_of(part.begin() + 1, part.end(), [](int v) { return v == 0; });
}

} // namespace

bool verify_split(const Colouring& c, const SplitCertificate& cert) {
    if (cert.x1.empty() || cert.x2.empty() || cert.y1.empty() || cert.y2.empty())
        return false;
    const int n = c.size();
    std::vector<int> px, py;
    if (!assign_parts(px, cert.x1, cert.x2, n) || !assign_parts(py, cert.y1, cert.y2, n))
        return false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Colour want = px[static_cast<std::size_t>(i)] == py[static_cast<std::size_t>(j)]
                              ? Colour::Red
                              : Colour::Blue;
            if (c.colour(i, j) != want)
                return false;
        }
    return true;
}

} // namespace mcp
