#include "mcp/gen.hpp"

#include <stdexcept>
#include <string>

namespace mcp {

Colouring gen_proposition7(int n) {
    if (n < 3)
        throw std::invalid_argument("gen_proposition7 needs n >= 3, got " + std::to_string(n));
    std::vector<Colour> cells(static_cast<std::size_t>(n) * n, Colour::Red);
    auto set_blue = [&](int i, int j) {
        cells[static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1)] = Colour::Blue;
    };
    set_blue(1, 1);
    set_blue(2, 2);
    for (int i = 3; i <= n; ++i) {
        set_blue(1, i);
        set_blue(i, 1);
    }
    for (int i = 4; i <= n; ++i)
        set_blue(2, i);
    return Colouring(n, std::move(cells));
}

std::pair<Colouring, SplitCertificate> gen_split(int x1_size, int y1_size, int n) {
    if (x1_size < 1 || x1_size > n - 1 || y1_size < 1 || y1_size > n - 1)
        throw std::invalid_argument("gen_split: block sizes must lie in 1..n-1");
    std::vector<Colour> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            cells.push_back((i <= x1_size) == (j <= y1_size) ? Colour::Red : Colour::Blue);
    SplitCertificate cert;
    for (int i = 1; i <= n; ++i) {
        (i <= x1_size ? cert.x1 : cert.x2).push_back(i);
        (i <= y1_size ? cert.y1 : cert.y2).push_back(i);
    }
    return {Colouring(n, std::move(cells)), std::move(cert)};
}

Colouring gen_random(int n, std::uint64_t seed, double p_red) {
    if (!(p_red >= 0.0 && p_red <= 1.0))
        throw std::invalid_argument("p_red must lie in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<Colour> cells(static_cast<std::size_t>(n) * n);
    for (auto& cell : cells)
        cell = rng.uniform() < p_red ? Colour::Red : Colour::Blue;
    return Colouring(n, std::move(cells));
}

std::uint64_t colouring_count(int n) {
    if (n < 1 || n > kEnumerateLimit)
        throw std::invalid_argument("enumeration supports 1 <= n <= " +
                                    std::to_string(kEnumerateLimit));
    return std::uint64_t{1} << (n * n);
}

Colouring colouring_from_index(int n, std::uint64_t t) {
    const std::uint64_t total = colouring_count(n);
    if (t >= total)
        throw std::out_of_range("colouring index out of range");
    const int cells_n = n * n;
    std::vector<Colour> cells(static_cast<std::size_t>(cells_n));
    for (int p = 0; p < cells_n; ++p)
        cells[static_cast<std::size_t>(p)] =
            (t >> (cells_n - 1 - p)) & 1 ? Colour::Blue : Colour::Red;
    return Colouring(n, std::move(cells));
}

void for_each_colouring(int n, const std::function<bool(const Colouring&)>& fn) {
    const std::uint64_t total = colouring_count(n);
    for (std::uint64_t t = 0; t < total; ++t)
        if (!fn(colouring_from_index(n, t)))
            return;
}

} // namespace mcp
