#pragma once

// Value types for 2-edge-coloured complete balanced bipartite graphs K_{n,n}
// and for the cycle families that partition them.
//
// All public indices are 1-based: vertex x_i is {Side::X, i}.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcp {

enum class Colour : std::uint8_t { Red = 0, Blue = 1 };

constexpr Colour complement(Colour c) noexcept {
    return c == Colour::Red ? Colour::Blue : Colour::Red;
}

constexpr Colour flip_if(Colour c, bool flip) noexcept {
    return flip ? complement(c) : c;
}

std::string_view colour_name(Colour c) noexcept; // "Red" / "Blue"

enum class Side : std::uint8_t { X = 0, Y = 1 };

constexpr Side other(Side s) noexcept { return s == Side::X ? Side::Y : Side::X; }

struct Vertex {
    Side side = Side::X;
    int index = 1;

    friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr Vertex xv(int i) noexcept { return {Side::X, i}; }
constexpr Vertex yv(int i) noexcept { return {Side::Y, i}; }

std::string to_string(Vertex v); // "x3", "y1"
std::optional<Vertex> parse_vertex(std::string_view s);

/// Thrown for malformed colouring input; carries the 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Complete red/blue assignment on the n*n edges x_i y_j. Immutable.
class Colouring {
public:
    Colouring(int n, std::vector<Colour> cells);

    int size() const noexcept { return n_; }

    Colour colour(int i, int j) const noexcept {
        return cells_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(j - 1)];
    }
    /// Bounds-checked lookup; throws std::out_of_range.
    Colour edge_colour(int i, int j) const;

    std::span<const Colour> cells() const noexcept { return cells_; }

    friend bool operator==(const Colouring&, const Colouring&) = default;

private:
    int n_;
    std::vector<Colour> cells_;
};

/// rows[i-1][j-1] is 'R' or 'B' for edge x_i y_j.
Colouring build_colouring(int n, std::span<const std::string> rows);
Colouring build_colouring(int n, std::initializer_list<std::string> rows);

Colouring uniform_colouring(int n, Colour c);

/// Text format: decimal n on line 1, then n rows over {R,B}; final newline optional.
Colouring parse_colouring(std::string_view text);
std::string serialize_colouring(const Colouring& c);

Colouring read_colouring_file(const std::string& path); // "-" reads stdin
void write_colouring_file(const std::string& path, const Colouring& c);

enum class CycleKind : std::uint8_t { Singleton, Edge, Proper };

std::string_view kind_name(CycleKind k) noexcept; // "singleton" / "edge" / "proper"

struct Cycle {
    std::vector<Vertex> vertices;
    CycleKind kind = CycleKind::Singleton;
    std::optional<Colour> colour;

    /// Kind follows from the vertex count; singletons never carry a colour.
    static Cycle make(std::vector<Vertex> vs, std::optional<Colour> colour);

    std::size_t size() const noexcept { return vertices.size(); }
    bool contains(Vertex v) const noexcept;
    /// True iff a and b are consecutive (cyclically) on the cycle.
    bool uses_edge(Vertex a, Vertex b) const noexcept;

    friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct Partition {
    std::vector<Cycle> cycles;

    std::size_t count() const noexcept { return cycles.size(); }
    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Monochromatic path; paths of at most two vertices may carry any tag.
struct MonoPath {
    std::vector<Vertex> vertices;
    std::optional<Colour> colour;

    std::size_t size() const noexcept { return vertices.size(); }
    bool empty() const noexcept { return vertices.empty(); }
};

/// Balanced induced sub-colouring with relabelled indices and optional global
/// colour complement. Holds a pointer to the base; the base must outlive it.
class ColouringView {
public:
    ColouringView(const Colouring& base, std::vector<int> label_x, std::vector<int> label_y,
                  bool flip);

    int size() const noexcept { return static_cast<int>(label_x_.size()); }

    Colour colour(int i, int j) const noexcept {
        return flip_if(base_->colour(label_x_[static_cast<std::size_t>(i - 1)],
                                     label_y_[static_cast<std::size_t>(j - 1)]),
                       flip_);
    }

    bool flipped() const noexcept { return flip_; }
    const Colouring& base() const noexcept { return *base_; }
    std::span<const int> label_x() const noexcept { return label_x_; }
    std::span<const int> label_y() const noexcept { return label_y_; }

    Vertex translate_back(Vertex v) const;
    Cycle translate_back(const Cycle& c) const;
    Partition translate_back(const Partition& p) const;

    /// Copies the view into a standalone colouring (small views only).
    Colouring materialize() const;

private:
    const Colouring* base_;
    std::vector<int> label_x_;
    std::vector<int> label_y_;
    bool flip_;
};

/// xs, ys are base indices; view index i maps to xs[i-1].
ColouringView make_view(const Colouring& c, std::vector<int> xs, std::vector<int> ys,
                        bool flip);
ColouringView identity_view(const Colouring& c, bool flip = false);
ColouringView make_view(Colouring&&, std::vector<int>, std::vector<int>, bool) = delete;
ColouringView identity_view(Colouring&&, bool = false) = delete;

/// Witness for a split colouring: red between X1-Y1 and X2-Y2, blue across.
struct SplitCertificate {
    std::vector<int> x1, x2, y1, y2; // sorted, 1-based

    friend bool operator==(const SplitCertificate&, const SplitCertificate&) = default;
};

std::ostream& operator<<(std::ostream& os, Vertex v);
std::ostream& operator<<(std::ostream& os, const Cycle& c);

} // namespace mcp
