#include "doctest.h"

#include "mcp/core.hpp"
#include "mcp/gen.hpp"
#include "mcp/verify.hpp"

using namespace mcp;

TEST_CASE("build_colouring transcribes rows") {
    auto one = build_colouring(1, {"R"});
    CHECK(one.colour(1, 1) == Colour::Red);

    auto c = build_colouring(2, {"RB", "BR"});
    CHECK(c.colour(1, 1) == Colour::Red);
    CHECK(c.colour(1, 2) == Colour::Blue);
    CHECK(c.colour(2, 1) == Colour::Blue);
    CHECK(c.colour(2, 2) == Colour::Red);
}

TEST_CASE("build_colouring reports the illegal character position") {
    try {
        build_colouring(2, {"RX", "BR"});
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 2);
        CHECK(std::string(e.what()).find("row 1 col 2") != std::string::npos);
    }
    CHECK_THROWS_AS(build_colouring(2, {"RB"}), ParseError);
    CHECK_THROWS_AS(build_colouring(2, {"RB", "B"}), ParseError);
}

TEST_CASE("edge_colour lookups and bounds") {
    auto c = build_colouring(2, {"RB", "BR"});
    CHECK(c.edge_colour(1, 2) == Colour::Blue);
    CHECK(c.edge_colour(2, 2) == Colour::Red);
    CHECK(build_colouring(1, {"B"}).edge_colour(1, 1) == Colour::Blue);
    CHECK_THROWS_AS(c.edge_colour(3, 1), std::out_of_range);
    CHECK_THROWS_AS(c.edge_colour(1, 0), std::out_of_range);
}

TEST_CASE("text format round trip") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto c = gen_random(1 + static_cast<int>(seed % 7), seed, 0.5);
        CHECK(parse_colouring(serialize_colouring(c)) == c);
    }
    CHECK(parse_colouring("2\nRB\nBR") == build_colouring(2, {"RB", "BR"}));
    CHECK(parse_colouring("2\r\nRB\r\nBR\r\n") == build_colouring(2, {"RB", "BR"}));
}

TEST_CASE("parse_colouring rejects malformed input with a file line number") {
    try {
        parse_colouring("3\nRRR\nRR\nRRR\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_colouring(""), ParseError);
    CHECK_THROWS_AS(parse_colouring("0\n"), ParseError);
    CHECK_THROWS_AS(parse_colouring("x\nR\n"), ParseError);
    CHECK_THROWS_AS(parse_colouring("1\nR\nB\n"), ParseError);
    CHECK_THROWS_AS(parse_colouring("2\nRB\n"), ParseError);
}

TEST_CASE("vertex names") {
    CHECK(to_string(xv(3)) == "x3");
    CHECK(parse_vertex("y12") == yv(12));
    CHECK_FALSE(parse_vertex("z1"));
    CHECK_FALSE(parse_vertex("x0"));
    CHECK_FALSE(parse_vertex("x"));
    CHECK_FALSE(parse_vertex("x1a"));
}

TEST_CASE("cycle kinds follow the vertex count") {
    auto s = Cycle::make({xv(1)}, Colour::Red);
    CHECK(s.kind == CycleKind::Singleton);
    CHECK_FALSE(s.colour);
    auto e = Cycle::make({xv(1), yv(2)}, Colour::Blue);
    CHECK(e.kind == CycleKind::Edge);
    CHECK(e.uses_edge(yv(2), xv(1)));
    auto p = Cycle::make({xv(1), yv(1), xv(2), yv(2)}, Colour::Red);
    CHECK(p.kind == CycleKind::Proper);
    CHECK(p.uses_edge(yv(2), xv(1)));
    CHECK_FALSE(p.uses_edge(xv(1), xv(2)));
}

TEST_CASE("make_view restricts, relabels and flips") {
    auto c = build_colouring(2, {"RB", "BR"});
    auto id = make_view(c, {1, 2}, {1, 2}, false);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            CHECK(id.colour(i, j) == c.colour(i, j));

    auto single = build_colouring(1, {"R"});
    auto flipped = make_view(single, {1}, {1}, true);
    CHECK(flipped.colour(1, 1) == Colour::Blue);

    auto sub = make_view(c, {2}, {2}, false);
    CHECK(sub.size() == 1);
    CHECK(sub.colour(1, 1) == Colour::Red);

    CHECK_THROWS_AS(make_view(c, {1, 2}, {1}, false), std::invalid_argument);
    CHECK_THROWS_AS(make_view(c, {}, {}, false), std::invalid_argument);
    CHECK_THROWS_AS(make_view(c, {1, 1}, {1, 2}, false), std::invalid_argument);
    CHECK_THROWS_AS(make_view(c, {3}, {1}, false), std::invalid_argument);
}

TEST_CASE("double flip is the identity on every queried colour") {
    auto c = gen_random(6, 99, 0.4);
    auto once = make_view(c, {6, 3, 1}, {2, 5, 4}, true);
    auto m = once.materialize();
    auto twice = identity_view(m, true);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(twice.colour(i, j) == c.colour(once.label_x()[i - 1], once.label_y()[j - 1]));
}

TEST_CASE("translate_back keeps cycles valid in the base") {
    auto c = gen_random(7, 5, 0.5);
    auto v = make_view(c, {7, 2, 4, 5}, {1, 6, 3, 2}, true);
    auto m = v.materialize();
    // every edge-cycle valid in the view stays valid in the base, same kind
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            auto e = Cycle::make({xv(i), yv(j)}, m.colour(i, j));
            REQUIRE(verify_cycle(m, e));
            auto back = v.translate_back(e);
            CHECK(back.kind == e.kind);
            CHECK(back.size() == e.size());
            CHECK(verify_cycle(c, back));
        }
    auto all_red = uniform_colouring(3, Colour::Blue);
    auto fv = identity_view(all_red, true);
    auto cyc = Cycle::make({xv(1), yv(1), xv(2), yv(2), xv(3), yv(3)}, Colour::Red);
    CHECK(verify_cycle(fv.materialize(), cyc));
    CHECK(verify_cycle(all_red, fv.translate_back(cyc)));
}
