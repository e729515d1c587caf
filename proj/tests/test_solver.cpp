#include "doctest.h"

#include "mcp/gen.hpp"
#include "mcp/json_io.hpp"
#include "mcp/oracle.hpp"
#include "mcp/solver.hpp"
#include "mcp/split.hpp"
#include "mcp/verify.hpp"

using namespace mcp;

TEST_CASE("solver examples") {
    auto diag = build_colouring(2, {"RB", "BR"});
    auto s = partition_le4(diag);
    CHECK(s.route == Route::Split);
    CHECK(s.partition.count() == 2);
    CHECK(s.trace.certificate);

    auto red = uniform_colouring(5, Colour::Red);
    auto r = partition_le4(red);
    CHECK(r.route == Route::NonSplit);
    REQUIRE(r.partition.count() == 1);
    CHECK(r.partition.cycles[0].size() == 10);
    CHECK(r.partition.cycles[0].colour == Colour::Red);

    auto p7 = gen_proposition7(4);
    auto p = partition_le4(p7);
    CHECK(p.route == Route::NonSplit);
    CHECK(p.partition.count() == 3);
    CHECK(min_cycle_partition(p7).minimum == 3);
}

TEST_CASE("solver on every small colouring") {
    for (int n = 1; n <= 3; ++n)
        for_each_colouring(n, [&](const Colouring& c) {
            const Solution s = partition_le4(c);
            const VerifyReport rep = verify_partition(c, s.partition);
            REQUIRE(rep.valid);
            CHECK(s.partition.count() <= 4);
            const bool split = detect_split(c).has_value();
            CHECK((s.route == Route::Split) == split);
            if (split)
                CHECK(s.partition.count() <= 3);
            if (s.trace.decomposition && s.trace.decomposition->path.empty())
                CHECK(s.partition.count() == 1);
            CHECK(min_cycle_partition(c).minimum <= static_cast<int>(s.partition.count()));
            return true;
        });
}

TEST_CASE("solver on random colourings") {
    SplitMix64 rng(2024);
    for (int n : {5, 6, 7, 9, 12, 16, 23, 32, 64, 129}) {
        const int trials = n <= 16 ? 500 : 40;
        for (int t = 0; t < trials; ++t) {
            const double p_red = rng.uniform();
            const Colouring c = gen_random(n, rng.next(), p_red);
            const Solution s = partition_le4(c);
            REQUIRE(verify_partition(c, s.partition).valid);
            CHECK(s.partition.count() <= 4);
            CHECK((s.route == Route::Split) == detect_split(c).has_value());
            if (s.trace.zigzag)
                CHECK(!s.trace.zigzag->outcome.empty());
        }
    }
    for (int n = 3; n <= 40; ++n) {
        const Solution s = partition_le4(gen_proposition7(n));
        CHECK(s.route == Route::NonSplit);
        CHECK(s.partition.count() <= 4);
    }
    for (int n = 2; n <= 12; ++n)
        for (int a = 1; a < n; ++a)
            for (int b = 1; b < n; ++b) {
                const Colouring c = gen_split(a, b, n).first;
                const Solution s = partition_le4(c);
                CHECK(s.route == Route::Split);
                CHECK(s.partition.count() <= 3);
            }
}

TEST_CASE("batch solving") {
    CHECK(batch_solve({}, 2).empty());

    std::vector<Colouring> one{uniform_colouring(3, Colour::Red)};
    auto r = batch_solve(one, 1);
    REQUIRE(r.size() == 1);
    CHECK(r[0].n == 3);
    CHECK(r[0].route == Route::NonSplit);
    CHECK(r[0].cycles == 1);
    CHECK(r[0].ok);

    std::vector<Colouring> cs;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        cs.push_back(gen_random(8, seed, 0.5));
    auto par = batch_solve(cs, 4);
    auto ser = batch_solve_serial(cs);
    REQUIRE(par.size() == 100);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        CHECK(par[i].ok);
        CHECK(par[i].cycles <= 4);
        CHECK(par[i].cycles == ser[i].cycles);
        CHECK(par[i].route == ser[i].route);
        CHECK(par[i].cycles == partition_le4(cs[i]).partition.count());
    }
    CHECK_THROWS_AS(batch_solve(cs, 0), std::invalid_argument);
}

TEST_CASE("solution json") {
    auto diag = build_colouring(2, {"RB", "BR"});
    auto s = partition_le4(diag);
    const Json j = solution_json(2, s, true, false);
    CHECK(j.dump() ==
          R"({"n":2,"route":"split","cycles":[{"kind":"edge","colour":"red","vertices":["x1","y1"]},)"
          R"({"kind":"edge","colour":"red","vertices":["x2","y2"]}],"verified":true})");
    CHECK(parse_partition_json(j) == s.partition);

    Partition single{{Cycle::make({xv(1)}, std::nullopt), Cycle::make({yv(1)}, std::nullopt)}};
    const Json sj = partition_json(single);
    CHECK(sj[0]["colour"].is_null());
    CHECK(sj[0]["kind"] == "singleton");
    CHECK(parse_partition_json(sj) == single);

    auto p7 = gen_proposition7(7);
    auto sp = partition_le4(p7);
    const Json tj = solution_json(7, sp, true, true);
    CHECK(tj["trace"].contains("simple_path"));
    CHECK(tj["trace"].contains("decomposition"));

    CHECK_THROWS_AS(parse_partition_json(Json::parse(R"({"cycles":[{"vertices":["z1"]}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_partition_json(Json::parse(R"({"cycles":[{"colour":"green","vertices":["x1"]}]})")),
                    std::invalid_argument);
}
