#pragma once

// Colouring generators: extremal families, split colourings, seeded random
// instances and exhaustive enumeration.

#include "mcp/core.hpp"

#include <cstdint>
#include <functional>
#include <utility>

namespace mcp {

/// splitmix64 (Steele, Lea, Flood 2014). Portable, 64-bit state.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Blue exactly on x1y1, x2y2, x1y_i and x_iy1 (i >= 3), x2y_i (i >= 4).
Colouring gen_proposition7(int n);

/// X1 = {1..x1_size}, Y1 = {1..y1_size}; red on the diagonal blocks.
std::pair<Colouring, SplitCertificate> gen_split(int x1_size, int y1_size, int n);

/// Edge x_iy_j is red iff the (row-major) next uniform draw is below p_red.
Colouring gen_random(int n, std::uint64_t seed, double p_red);

inline constexpr int kEnumerateLimit = 4;

/// Colouring number t in lexicographic matrix order ('R' < 'B'): cell p in
/// row-major order is Blue iff bit (n*n - 1 - p) of t is set.
Colouring colouring_from_index(int n, std::uint64_t t);

std::uint64_t colouring_count(int n); // 2^(n*n); throws for n > kEnumerateLimit

/// Streams all 2^(n*n) colourings in order; stops early when fn returns false.
void for_each_colouring(int n, const std::function<bool(const Colouring&)>& fn);

} // namespace mcp
