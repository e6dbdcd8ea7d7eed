#include <enabling/cliques.hh>
#include <enabling/constructions.hh>

#include "oracles.hh"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace enabling;

namespace
{
    auto p4() -> EdgeColouredGraph
    {
        return p4_blowup(4);
    }

    auto all_red(std::size_t n) -> EdgeColouredGraph
    {
        return EdgeColouredGraph::build(n, 2, std::vector<Colour>(pair_count(n), 0));
    }
}

TEST_CASE("parse_targets")
{
    auto t = parse_targets("0:3,1:9");
    REQUIRE(t.size() == 2);
    CHECK(t[0] == Target{ 0, 3 });
    CHECK(t[1] == Target{ 1, 9 });
    CHECK_THROWS_AS(parse_targets("0:3,"), InvalidArgument);
    CHECK_THROWS_AS(parse_targets("0-3"), InvalidArgument);
    CHECK_THROWS_AS(parse_targets("a:3"), InvalidArgument);
    CHECK_THROWS_AS(parse_targets(""), InvalidArgument);
}

TEST_CASE("find_clique_containing")
{
    auto g = p4();
    CHECK(find_clique_containing(g, 0, 0, 2) == VertexSet{ 0, 1 });
    CHECK_FALSE(find_clique_containing(g, 0, 0, 3));
    CHECK(find_clique_containing(prime_slope(3), 1, 0, 3) == VertexSet{ 0, 4, 8 });
    CHECK(find_clique_containing(g, 1, 2, 1) == VertexSet{ 2 });
    CHECK_THROWS_AS(find_clique_containing(g, 2, 0, 2), InvalidArgument);
    CHECK_THROWS_AS(find_clique_containing(g, 0, 4, 2), InvalidArgument);
}

TEST_CASE("enumerate_cliques")
{
    auto g = p4();
    CHECK(enumerate_cliques(g, 0, 2) == std::vector<VertexSet>{ { 0, 1 }, { 1, 2 }, { 2, 3 } });
    CHECK(enumerate_cliques(g, 1, 2) == std::vector<VertexSet>{ { 0, 2 }, { 0, 3 }, { 1, 3 } });

    auto blue = enumerate_cliques(two_colour_extremal(3, 3), 1, 3);
    std::set<Vertex> covered;
    for (auto & s : blue)
        covered.insert(s.begin(), s.end());
    CHECK(covered.size() == 8);

    CHECK_THROWS_AS(enumerate_cliques(all_red(10), 0, 3, 50), FamilyTooLarge);
    CHECK(enumerate_cliques(all_red(10), 0, 3, 120).size() == 120);
}

TEST_CASE("clique search agrees with subset enumeration on random graphs")
{
    std::mt19937_64 rng{ 2026 };
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 4 + trial % 7;
        std::size_t r = 2 + trial % 3;
        auto g = oracle::random_graph(n, r, rng);
        for (Colour c = 0; c < r; ++c)
            for (std::size_t k = 1; k <= 5; ++k) {
                auto expected = oracle::cliques(g, c, k);
                CHECK(enumerate_cliques(g, c, k) == expected);
                for (Vertex v = 0; v < n; ++v) {
                    std::optional<VertexSet> first;
                    for (auto & s : expected)
                        if (std::find(s.begin(), s.end(), v) != s.end()) {
                            first = s;
                            break;
                        }
                    auto found = find_clique_containing(g, c, v, k);
                    CHECK(found == first);
                    if (found) {
                        CHECK(g.is_monochromatic_clique(*found, c));
                        CHECK(std::find(found->begin(), found->end(), v) != found->end());
                    }
                }
            }
    }
}

TEST_CASE("verify_enabling")
{
    auto ok = verify_enabling(p4(), { { 0, 2 }, { 1, 2 } });
    CHECK(ok.ok);
    CHECK_FALSE(ok.first_failure);
    CHECK(ok.witnesses.size() == 8);

    CHECK(verify_enabling(two_colour_extremal(3, 9), { { 0, 3 }, { 1, 9 } }).ok);

    auto bad = verify_enabling(all_red(5), { { 0, 5 }, { 1, 2 } });
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.first_failure);
    CHECK(*bad.first_failure == std::pair<Vertex, Colour>{ 0, 1 });

    CHECK_THROWS_AS(verify_enabling(p4(), { { 0, 2 }, { 0, 3 } }), InvalidArgument);
    CHECK_THROWS_AS(verify_enabling(p4(), { { 2, 2 } }), InvalidArgument);
}

TEST_CASE("verify_enabling matches the subset oracle and is independent of jobs")
{
    std::mt19937_64 rng{ 99 };
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_graph(7, 2, rng);
        for (std::size_t k1 = 1; k1 <= 3; ++k1)
            for (std::size_t k2 = 1; k2 <= 3; ++k2) {
                std::vector<Target> targets{ { 0, k1 }, { 1, k2 } };
                auto one = verify_enabling(g, targets, 1);
                auto many = verify_enabling(g, targets, 3);
                CHECK(one.ok == (oracle::enabling(g, 0, k1) && oracle::enabling(g, 1, k2)));
                CHECK(to_json(one).dump() == to_json(many).dump());
            }
    }
}

TEST_CASE("choose_family")
{
    auto lex = choose_family(p4(), 0, 2, FamilyPolicy::per_vertex_lex);
    CHECK(lex.cliques == std::vector<VertexSet>{ { 0, 1 }, { 1, 2 }, { 2, 3 } });
    CHECK(lex.designated == std::vector<std::size_t>{ 0, 0, 1, 2 });

    for (auto policy : { FamilyPolicy::per_vertex_lex, FamilyPolicy::all_cliques })
        CHECK(choose_family(all_red(4), 0, 4, policy).cliques == std::vector<VertexSet>{ { 0, 1, 2, 3 } });

    auto g22 = two_colour_extremal(2, 2);
    std::vector<VertexSet> blue_pairs;
    for (auto [u, v] : g22.edges_of_colour(1))
        blue_pairs.push_back({ u, v });
    CHECK(choose_family(g22, 1, 2, FamilyPolicy::all_cliques).cliques == blue_pairs);

    CHECK_THROWS_AS(choose_family(p4(), 0, 3, FamilyPolicy::per_vertex_lex), InvalidArgument);
    auto partial = choose_family(p4(), 0, 3, FamilyPolicy::all_cliques);
    CHECK(partial.cliques.empty());
    CHECK(partial.designated[0] == no_clique);
}

TEST_CASE("per-vertex-lex families are covering subsets of all-cliques families")
{
    std::mt19937_64 rng{ 17 };
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 30; ++trial) {
        auto g = oracle::random_graph(8, 2, rng);
        if (! oracle::enabling(g, 0, 3))
            continue;
        ++checked;
        auto lex = choose_family(g, 0, 3, FamilyPolicy::per_vertex_lex);
        auto all = choose_family(g, 0, 3, FamilyPolicy::all_cliques);
        std::set<VertexSet> everything(all.cliques.begin(), all.cliques.end());
        std::set<Vertex> covered;
        for (auto & s : lex.cliques) {
            CHECK(everything.count(s) == 1);
            covered.insert(s.begin(), s.end());
        }
        CHECK(covered.size() == 8);
        for (Vertex v = 0; v < 8; ++v) {
            const auto & s = lex.cliques.at(lex.designated[v]);
            CHECK(std::find(s.begin(), s.end(), v) != s.end());
        }
    }
    CHECK(checked > 0);
}
