#include "doctest.h"

#include "mcp/core.hpp"
#include "mcp/verify.hpp"

using namespace mcp;

TEST_CASE("verify_partition on small instances") {
    auto red = uniform_colouring(2, Colour::Red);
    Partition ham{{Cycle::make({xv(1), yv(1), xv(2), yv(2)}, Colour::Red)}};
    auto ok = verify_partition(red, ham);
    CHECK(ok.valid);
    CHECK(ok.cycle_count == 1);
    CHECK(ok.red == 1);
    CHECK_FALSE(ok.failure);

    Partition partial{{Cycle::make({xv(1), yv(1)}, Colour::Red)}};
    auto bad = verify_partition(red, partial);
    CHECK_FALSE(bad.valid);
    REQUIRE(bad.failure);
    CHECK(bad.failure->reason == "x2 uncovered");
    CHECK(bad.failure->vertex == xv(2));

    auto diag = build_colouring(2, {"RB", "BR"});
    Partition wrong{{Cycle::make({xv(1), yv(1)}, Colour::Blue),
                     Cycle::make({xv(2), yv(2)}, Colour::Blue)}};
    auto w = verify_partition(diag, wrong);
    CHECK_FALSE(w.valid);
    REQUIRE(w.failure);
    CHECK(w.failure->reason == "edge x1y1 is Red, tag Blue");
    CHECK(w.failure->cycle_index == 0u);
}

TEST_CASE("verify_partition structural failures") {
    auto red = uniform_colouring(2, Colour::Red);
    Partition dup{{Cycle::make({xv(1), yv(1)}, Colour::Red), Cycle::make({xv(1), yv(2)}, Colour::Red),
                   Cycle::make({xv(2)}, std::nullopt)}};
    auto d = verify_partition(red, dup);
    CHECK_FALSE(d.valid);
    CHECK(d.failure->reason == "x1 covered twice");

    Partition same_side{{Cycle::make({xv(1), xv(2)}, Colour::Red), Cycle::make({yv(1)}, std::nullopt),
                         Cycle::make({yv(2)}, std::nullopt)}};
    CHECK_FALSE(verify_partition(red, same_side).valid);

    Partition out_of_range{{Cycle::make({xv(3), yv(1)}, Colour::Red)}};
    CHECK_FALSE(verify_partition(red, out_of_range).valid);

    Cycle tagged_singleton{{xv(1)}, CycleKind::Singleton, Colour::Red};
    CHECK_FALSE(verify_cycle(red, tagged_singleton));

    Cycle untagged_edge{{xv(1), yv(1)}, CycleKind::Edge, std::nullopt};
    CHECK_FALSE(verify_cycle(red, untagged_edge));

    Cycle wrong_kind{{xv(1), yv(1)}, CycleKind::Proper, Colour::Red};
    CHECK_FALSE(verify_cycle(red, wrong_kind));

    Partition singletons{{Cycle::make({xv(1)}, std::nullopt), Cycle::make({yv(1)}, std::nullopt),
                          Cycle::make({xv(2)}, std::nullopt), Cycle::make({yv(2)}, std::nullopt)}};
    auto s = verify_partition(red, singletons);
    CHECK(s.valid);
    CHECK(s.untagged == 4);
}

TEST_CASE("verify_partition detects a broken closing edge") {
    auto c = build_colouring(2, {"RR", "RB"});
    Partition p{{Cycle::make({xv(1), yv(1), xv(2), yv(2)}, Colour::Red)}};
    auto r = verify_partition(c, p);
    CHECK_FALSE(r.valid);
    CHECK(r.failure->reason == "edge x2y2 is Blue, tag Red");
}

TEST_CASE("verify_simple_path") {
    auto red = uniform_colouring(2, Colour::Red);
    std::vector<Vertex> seq{xv(1), yv(1), xv(2), yv(2)};
    CHECK(verify_simple_path(red, seq, 0));
    CHECK_FALSE(verify_simple_path(red, seq, 1));

    // x1y1 and y1x2 are blue, x2y2 red
    auto c = build_colouring(2, {"BB", "BR"});
    CHECK(c.colour(1, 1) == Colour::Blue);
    CHECK(c.colour(2, 1) == Colour::Blue);
    CHECK(c.colour(2, 2) == Colour::Red);
    CHECK(verify_simple_path(c, seq, 2));
    CHECK_FALSE(verify_simple_path(c, seq, 3));

    std::vector<Vertex> two{xv(1), yv(2)};
    CHECK(verify_simple_path(red, two, 0));
    CHECK(verify_simple_path(red, two, 1));
    std::vector<Vertex> one{yv(1)};
    CHECK(verify_simple_path(red, one, 0));

    std::vector<Vertex> repeat{xv(1), yv(1), xv(1)};
    CHECK_FALSE(verify_simple_path(red, repeat, 0));
    std::vector<Vertex> nonalt{xv(1), xv(2)};
    CHECK_FALSE(verify_simple_path(red, nonalt, 0));
}

TEST_CASE("verify_split") {
    auto diag = build_colouring(2, {"RB", "BR"});
    CHECK(verify_split(diag, SplitCertificate{{1}, {2}, {1}, {2}}));
    CHECK_FALSE(verify_split(diag, SplitCertificate{{1, 2}, {}, {1}, {2}}));
    CHECK_FALSE(verify_split(diag, SplitCertificate{{1}, {2}, {2}, {1}}));
    auto red = uniform_colouring(2, Colour::Red);
    CHECK_FALSE(verify_split(red, SplitCertificate{{1}, {2}, {1}, {2}}));
    CHECK_FALSE(verify_split(red, SplitCertificate{{1}, {2}, {2}, {1}}));
    CHECK_FALSE(verify_split(diag, SplitCertificate{{1}, {1}, {1}, {2}}));
}

TEST_CASE("verify_mono_path") {
    auto red = uniform_colouring(3, Colour::Red);
    CHECK(verify_mono_path(red, MonoPath{{xv(1), yv(2), xv(3)}, Colour::Red}));
    CHECK_FALSE(verify_mono_path(red, MonoPath{{xv(1), yv(2), xv(3)}, Colour::Blue}));
    CHECK(verify_mono_path(red, MonoPath{{xv(1), yv(2)}, Colour::Blue}));
    CHECK(verify_mono_path(red, MonoPath{{}, std::nullopt}));
}
