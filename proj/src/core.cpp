#include "mcp/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace mcp {

std::string_view colour_name(Colour c) noexcept {
    return c == Colour::Red ? "Red" : "Blue";
}

std::string to_string(Vertex v) {
    return (v.side == Side::X ? "x" : "y") + std::to_string(v.index);
}

std::optional<Vertex> parse_vertex(std::string_view s) {
    if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y'))
        return std::nullopt;
    int idx = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), idx);
    if (ec != std::errc{} || ptr != s.data() + s.size() || idx < 1)
        return std::nullopt;
    return Vertex{s[0] == 'x' ? Side::X : Side::Y, idx};
}

Colouring::Colouring(int n, std::vector<Colour> cells) : n_(n), cells_(std::move(cells)) {
    if (n < 1)
        throw std::invalid_argument("colouring size must be at least 1");
    if (cells_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("colouring cell count does not match n*n");
}

Colour Colouring::edge_colour(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw std::out_of_range("edge x" + std::to_string(i) + "y" + std::to_string(j) +
                                " outside 1.." + std::to_string(n_));
    return colour(i, j);
}

Colouring build_colouring(int n, std::span<const std::string> rows) {
    if (n < 1)
        throw ParseError("n must be positive", 1, 1);
    if (rows.size() != static_cast<std::size_t>(n))
        throw ParseError("expected " + std::to_string(n) + " rows, got " +
                             std::to_string(rows.size()),
                         static_cast<int>(rows.size()) + 1, 1);
    std::vector<Colour> cells;
    cells.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (row.size() != static_cast<std::size_t>(n))
            throw ParseError("row " + std::to_string(i + 1) + " has length " +
                                 std::to_string(row.size()) + ", expected " + std::to_string(n),
                             i + 1, static_cast<int>(std::min(row.size(), std::size_t(n))) + 1);
        for (int j = 0; j < n; ++j) {
            char ch = row[static_cast<std::size_t>(j)];
            if (ch == 'R')
                cells.push_back(Colour::Red);
            else if (ch == 'B')
                cells.push_back(Colour::Blue);
            else
                throw ParseError("illegal character '" + std::string(1, ch) + "' at row " +
                                     std::to_string(i + 1) + " col " + std::to_string(j + 1),
                                 i + 1, j + 1);
        }
    }
    return Colouring(n, std::move(cells));
}

Colouring build_colouring(int n, std::initializer_list<std::string> rows) {
    std::vector<std::string> v(rows);
    return build_colouring(n, std::span<const std::string>(v));
}

Colouring uniform_colouring(int n, Colour c) {
    return Colouring(n, std::vector<Colour>(static_cast<std::size_t>(n) * n, c));
}

Colouring parse_colouring(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(pos));
            break;
        }
        lines.emplace_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    for (auto& l : lines)
        if (!l.empty() && l.back() == '\r')
            l.pop_back();
    if (lines.empty() || lines[0].empty())
        throw ParseError("line 1: missing size", 1, 1);

    int n = 0;
    const auto& head = lines[0];
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
    if (ec != std::errc{} || ptr != head.data() + head.size() || n < 1)
        throw ParseError("line 1: expected a positive integer, got '" + head + "'", 1, 1);

    std::vector<std::string> rows(lines.begin() + 1, lines.end());
    if (rows.size() > static_cast<std::size_t>(n)) {
        for (std::size_t r = static_cast<std::size_t>(n); r < rows.size(); ++r)
            if (!rows[r].empty())
                throw ParseError("line " + std::to_string(r + 2) + ": unexpected trailing content",
                                 static_cast<int>(r) + 2, 1);
        rows.resize(static_cast<std::size_t>(n));
    }
    try {
        return build_colouring(n, std::span<const std::string>(rows));
    } catch (const ParseError& e) {
        // shift from row numbering to file line numbering
        throw ParseError("line " + std::to_string(e.line() + 1) + ": " + e.what(), e.line() + 1,
                         e.column());
    }
}

std::string serialize_colouring(const Colouring& c) {
    std::string out = std::to_string(c.size()) + "\n";
    out.reserve(out.size() + static_cast<std::size_t>(c.size()) * (c.size() + 1));
    for (int i = 1; i <= c.size(); ++i) {
        for (int j = 1; j <= c.size(); ++j)
            out.push_back(c.colour(i, j) == Colour::Red ? 'R' : 'B');
        out.push_back('\n');
    }
    return out;
}

Colouring read_colouring_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return parse_colouring(text);
}

void write_colouring_file(const std::string& path, const Colouring& c) {
    if (path == "-") {
        std::cout << serialize_colouring(c);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << serialize_colouring(c);
}

std::string_view kind_name(CycleKind k) noexcept {
    switch (k) {
    case CycleKind::Singleton: return "singleton";
    case CycleKind::Edge: return "edge";
    case CycleKind::Proper: return "proper";
    }
    return "?";
}

Cycle Cycle::make(std::vector<Vertex> vs, std::optional<Colour> colour) {
    Cycle c;
    c.vertices = std::move(vs);
    c.kind = c.vertices.size() <= 1   ? CycleKind::Singleton
             : c.vertices.size() == 2 ? CycleKind::Edge
                                      : CycleKind::Proper;
    if (c.kind != CycleKind::Singleton)
        c.colour = colour;
    return c;
}

bool Cycle::contains(Vertex v) const noexcept {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool Cycle::uses_edge(Vertex a, Vertex b) const noexcept {
    const auto n = vertices.size();
    if (n < 2)
        return false;
    for (std::size_t i = 0; i < n; ++i) {
        Vertex u = vertices[i];
        Vertex w = vertices[(i + 1) % n];
        if ((u == a && w == b) || (u == b && w == a))
            return true;
        if (n == 2)
            break;
    }
    return false;
}

ColouringView::ColouringView(const Colouring& base, std::vector<int> label_x,
                             std::vector<int> label_y, bool flip)
    : base_(&base), label_x_(std::move(label_x)), label_y_(std::move(label_y)), flip_(flip) {}

Vertex ColouringView::translate_back(Vertex v) const {
    const auto& labels = v.side == Side::X ? label_x_ : label_y_;
    if (v.index < 1 || v.index > size())
        throw std::out_of_range("view vertex " + to_string(v) + " out of range");
    return {v.side, labels[static_cast<std::size_t>(v.index - 1)]};
}

Cycle ColouringView::translate_back(const Cycle& c) const {
    Cycle out;
    out.kind = c.kind;
    out.vertices.reserve(c.vertices.size());
    for (Vertex v : c.vertices)
        out.vertices.push_back(translate_back(v));
    if (c.colour)
        out.colour = flip_if(*c.colour, flip_);
    return out;
}

Partition ColouringView::translate_back(const Partition& p) const {
    Partition out;
    out.cycles.reserve(p.cycles.size());
    for (const auto& c : p.cycles)
        out.cycles.push_back(translate_back(c));
    return out;
}

Colouring ColouringView::materialize() const {
    const int m = size();
    std::vector<Colour> cells;
    cells.reserve(static_cast<std::size_t>(m) * m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            cells.push_back(colour(i, j));
    return Colouring(m, std::move(cells));
}

namespace {

void check_labels(const std::vector<int>& labels, int n, const char* side) {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int l : labels) {
        if (l < 1 || l > n)
            throw std::invalid_argument(std::string("view ") + side + "-index " +
                                        std::to_string(l) + " out of range");
        if (seen[static_cast<std::size_t>(l)]++)
            throw std::invalid_argument(std::string("view repeats ") + side + "-index " +
                                        std::to_string(l));
    }
}

} // namespace

ColouringView make_view(const Colouring& c, std::vector<int> xs, std::vector<int> ys, bool flip) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("unbalanced view: " + std::to_string(xs.size()) + " X vs " +
                                    std::to_string(ys.size()) + " Y indices");
    if (xs.empty())
        throw std::invalid_argument("empty view");
    check_labels(xs, c.size(), "x");
    check_labels(ys, c.size(), "y");
    return ColouringView(c, std::move(xs), std::move(ys), flip);
}

ColouringView identity_view(const Colouring& c, bool flip) {
    std::vector<int> ids(static_cast<std::size_t>(c.size()));
    for (int i = 0; i < c.size(); ++i)
        ids[static_cast<std::size_t>(i)] = i + 1;
    return ColouringView(c, ids, ids, flip);
}

std::ostream& operator<<(std::ostream& os, Vertex v) { return os << to_string(v); }

std::ostream& operator<<(std::ostream& os, const Cycle& c) {
    os << kind_name(c.kind) << '(';
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        os << (i ? "," : "") << c.vertices[i];
    os << ')';
    if (c.colour)
        os << ':' << colour_name(*c.colour);
    return os;
}

} // namespace mcp
