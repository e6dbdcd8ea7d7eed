#include <enabling/bounds.hh>
#include <enabling/cliques.hh>
#include <enabling/search.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace enabling;

TEST_CASE("mask decoding follows the pair order")
{
    auto g = graph_from_mask(4, 0b100101);
    CHECK(g.colour_of(0, 1) == 0);
    CHECK(g.colour_of(0, 2) == 1);
    CHECK(g.colour_of(0, 3) == 0);
    CHECK(g.colour_of(1, 2) == 1);
    CHECK(g.colour_of(1, 3) == 1);
    CHECK(g.colour_of(2, 3) == 0);
}

TEST_CASE("small existence questions")
{
    auto p4 = exists_enabling(4, 2, 2);
    CHECK(p4.found);
    REQUIRE(p4.witness);
    CHECK(verify_enabling(graph_from_mask(4, *p4.witness_mask), { { 0, 2 }, { 1, 2 } }).ok);

    CHECK_FALSE(exists_enabling(3, 2, 2).found);

    auto matching = exists_enabling(6, 2, 3);
    CHECK(matching.found);
    CHECK(verify_enabling(graph_from_mask(6, *matching.witness_mask), { { 0, 2 }, { 1, 3 } }).ok);

    auto seven = exists_enabling(7, 3, 3);
    CHECK_FALSE(seven.found);
    CHECK(seven.graphs_enumerated == std::uint64_t{ 1 } << 21);

    CHECK(exists_enabling(8, 3, 3).found);

    CHECK_THROWS_AS(exists_enabling(12, 3, 3), InvalidArgument);
    CHECK_THROWS_AS(exists_enabling(5, 0, 3), InvalidArgument);
}

TEST_CASE("first witness matches a brute-force scan in mask order")
{
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t k1 = 1; k1 <= 3; ++k1)
            for (std::size_t k2 = 1; k2 <= 3; ++k2) {
                std::optional<std::uint64_t> first;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{ 1 } << pair_count(n)); ++mask) {
                    auto g = graph_from_mask(n, mask);
                    if (oracle::enabling(g, 0, k1) && oracle::enabling(g, 1, k2)) {
                        first = mask;
                        break;
                    }
                }
                auto report = exists_enabling(n, k1, k2);
                CHECK(report.found == first.has_value());
                CHECK(report.witness_mask == first);
                CHECK(report.graphs_enumerated == (first ? *first + 1 : std::uint64_t{ 1 } << pair_count(n)));
            }
}

TEST_CASE("pruning never changes the answer")
{
    SearchOptions unpruned;
    unpruned.prune = false;
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t k1 = 1; k1 <= 3; ++k1)
            for (std::size_t k2 = 1; k2 <= 3; ++k2) {
                auto a = exists_enabling(n, k1, k2);
                auto b = exists_enabling(n, k1, k2, unpruned);
                CHECK(a.found == b.found);
                CHECK(a.witness_mask == b.witness_mask);
                CHECK(b.graphs_pruned == 0);
            }
}

TEST_CASE("sharding and threads give identical reports")
{
    auto baseline = to_json(exists_enabling(8, 3, 3)).dump();
    for (unsigned bits : { 1u, 4u, 8u })
        for (unsigned jobs : { 1u, 3u }) {
            SearchOptions options;
            options.shard_bits = bits;
            options.jobs = jobs;
            CHECK(to_json(exists_enabling(8, 3, 3, options)).dump() == baseline);
        }

    auto negative = to_json(exists_enabling(7, 3, 3)).dump();
    SearchOptions split;
    split.shard_bits = 6;
    split.jobs = 2;
    CHECK(to_json(exists_enabling(7, 3, 3, split)).dump() == negative);
}

TEST_CASE("least n")
{
    CHECK(min_n(2, 2, 6).n == std::optional<std::size_t>{ 4 });
    CHECK(min_n(2, 3, 8).n == std::optional<std::size_t>{ 6 });
    CHECK(min_n(3, 2, 8).n == std::optional<std::size_t>{ 6 });
    CHECK(min_n(3, 3, 8).n == std::optional<std::size_t>{ 8 });
    CHECK(min_n(1, 4, 6).n == std::optional<std::size_t>{ 4 });

    auto short_range = min_n(3, 3, 7);
    CHECK_FALSE(short_range.n);
    CHECK(to_json(short_range, 7).at("exceeds_n_max") == true);

    auto trusted = min_n(3, 3, 8, {}, true);
    CHECK(trusted.n == std::optional<std::size_t>{ 8 });
    CHECK(trusted.reports.size() == 1);
}

TEST_CASE("searches never contradict the closed-form lower bound")
{
    for (std::size_t k1 = 1; k1 <= 3; ++k1)
        for (std::size_t k2 = 1; k2 <= 3; ++k2) {
            auto result = min_n(k1, k2, 8);
            REQUIRE(result.n);
            CHECK(*result.n >= two_colour_lower(k1, k2));
            CHECK(result.n == min_n(k2, k1, 8).n);
        }
}

TEST_CASE("timing is excluded from JSON unless requested")
{
    auto report = exists_enabling(5, 2, 2);
    CHECK_FALSE(to_json(report).contains("elapsed_ms"));
    CHECK(to_json(report, true).contains("elapsed_ms"));
}
