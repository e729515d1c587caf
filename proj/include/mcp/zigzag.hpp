#pragma once

// Red zigzag labelling of a colouring with a monochromatic Hamiltonian path,
// and the constructions that partition it into at most three monochromatic
// cycles: path shortcuts, the weak four-cycle recursion, special sets,
// cycle splicing and the blue even plait induction.
//
// Inside a ZigzagView, vertex x_i / y_i means the zigzag label i; the view's
// own index i is that label, so no extra translation layer exists.

#include "mcp/core.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mcp {

struct ZigzagView {
    ColouringView view; // index i on either side is zigzag label i; colours flipped so P is red

    int size() const noexcept { return view.size(); }
    Colour colour(Vertex a, Vertex b) const;
};

/// Labels ham so that it becomes the canonical path P. ham is in the
/// coordinates of `base`; the result maps labels straight to base.base().
/// Throws std::invalid_argument unless ham is a monochromatic Hamiltonian path.
ZigzagView zigzag_labelling(const ColouringView& base, const MonoPath& ham);
ZigzagView zigzag_labelling(const Colouring& c, const MonoPath& ham);
ZigzagView zigzag_labelling(Colouring&&, const MonoPath&) = delete;

/// 1-based position of a label on P = (x_1, y_2, x_3, ..., x_2, y_1).
int path_position(int m, Vertex v);
Vertex path_vertex(int m, int position);
std::vector<Vertex> canonical_path(int m);
/// Contiguous piece of P from u to v, in that order.
std::vector<Vertex> path_segment(int m, Vertex u, Vertex v);

/// Red cycle on S_{>=i} closed by the red edge x_iy_i.
Cycle red_cycle_from_path(const ZigzagView& z, int i);

enum class ChordVariant { Forward, Mirror }; // x_i y_{i+2} / x_{i+2} y_i

/// Two red cycles covering S_{>=i}, using the named red chord.
std::array<Cycle, 2> red_two_cycles_from_chord(const ZigzagView& z, int i, ChordVariant variant);

struct WeakResult {
    Partition partition;
    int condition = 1; // 1: <=2 cycles; 2: <=3, x_1y_1 on a blue cycle; 3: <=4, x_1y_1 and x_2y_2 on different blue cycles
};

WeakResult weak_partition(const ZigzagView& z);

enum class PlaitSide { Odd, Even };

/// Path inside the side of S_{<=k} with the given index parity, covering the
/// side minus `excluded`, from start to end, with every required edge as a
/// consecutive hop. Colours are not consulted. Throws std::invalid_argument
/// when the endpoints or exclusions make such a path impossible.
std::vector<Vertex> plait_side_path(int k, PlaitSide side, Vertex start, Vertex end,
                                    std::span<const Vertex> excluded = {},
                                    std::span<const std::pair<Vertex, Vertex>> required = {});

/// Joins c1 = (u1 .. us) and c2 = (v1 .. vt) into (u1 .. us, v1 .. vt) using the
/// blue chords u1-vt and v1-us. Throws std::invalid_argument on a bad input.
Cycle splice(const ZigzagView& z, const Cycle& c1, const Cycle& c2, Vertex u1, Vertex us,
             Vertex v1, Vertex vt);

struct SpecialSetWitness {
    int k = 0;
    std::optional<Cycle> below; // blue Hamiltonian cycle of S_{<=k-2}; empty when k-2 < 1
    Cycle middle;               // blue Hamiltonian cycle of S_{<=k-1}
    Cycle top;                  // blue Hamiltonian cycle of S_{<=k} through x_{k-1}y_{k-1} and x_ky_k
};

struct ProbeRecord {
    Vertex x;
    Vertex y;
    Colour colour = Colour::Red;
    std::string_view step; // static label
};

struct ZigzagTrace {
    std::vector<ProbeRecord> probes;
    std::string_view outcome;
    int plait_level = 0; // highest verified plait level
};

/// At most three cycles; throws std::invalid_argument if the witness fails to verify.
Partition special_set_partition(const ZigzagView& z, const SpecialSetWitness& w,
                                ZigzagTrace* trace = nullptr);

struct PlaitState {
    int k = 0; // every even edge inside S_{<=k} has been probed blue
};

using PlaitStep = std::variant<Partition, PlaitState>;

/// Requires m >= 5.
PlaitStep establish_base_plait(const ZigzagView& z, ZigzagTrace* trace = nullptr);
/// Requires 4 <= ps.k <= m-2.
PlaitStep extend_plait(const ZigzagView& z, PlaitState ps, ZigzagTrace* trace = nullptr);

/// At most three verifying cycles in view (label) coordinates.
Partition partition_three(const ZigzagView& z, ZigzagTrace* trace = nullptr);

inline constexpr int kZigzagOracleThreshold = 5;

} // namespace mcp
