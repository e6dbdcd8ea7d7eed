#include <enabling/bounds.hh>
#include <enabling/cliques.hh>
#include <enabling/constructions.hh>

#include "oracles.hh"

#include <doctest.h>

#include <map>
#include <set>

using namespace enabling;

namespace
{
    auto two_targets(std::size_t k1, std::size_t k2) -> std::vector<Target>
    {
        return { { 0, k1 }, { 1, k2 } };
    }

    auto all_targets(std::size_t r, std::size_t k) -> std::vector<Target>
    {
        std::vector<Target> t;
        for (Colour c = 0; c < r; ++c)
            t.push_back({ c, k });
        return t;
    }

    auto degrees(const std::vector<Edge> & edges, std::size_t m1, std::size_t m2)
    {
        std::vector<std::size_t> left(m1), right(m2);
        for (auto [l, r] : edges) {
            ++left.at(l);
            ++right.at(r);
        }
        return std::pair{ left, right };
    }
}

TEST_CASE("integer helpers")
{
    for (std::uint64_t x = 0; x < 5000; ++x) {
        auto s = isqrt(x);
        CHECK(s * s <= x);
        CHECK((s + 1) * (s + 1) > x);
    }
    CHECK(isqrt(std::uint64_t{ 1 } << 62) == std::uint64_t{ 1 } << 31);
    CHECK(is_perfect_square(0));
    CHECK(is_perfect_square(49));
    CHECK_FALSE(is_perfect_square(50));
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("p4 blow-up")
{
    auto g4 = p4_blowup(4);
    CHECK(g4 == EdgeColouredGraph::build(4, 2, { 0, 1, 1, 0, 1, 0 }));
    CHECK(verify_enabling(g4, two_targets(2, 2)).ok);

    auto g8 = p4_blowup(8);
    CHECK(g8.vertex_count() == 8);
    CHECK(verify_enabling(g8, two_targets(3, 3)).ok);

    auto g9 = p4_blowup(9);
    CHECK(g9.vertex_count() == 9);
    CHECK(verify_enabling(g9, two_targets(3, 3)).ok);

    for (std::size_t n = 4; n <= 14; ++n) {
        auto g = p4_blowup(n);
        auto k = feige_k_of_n(n);
        CHECK(oracle::enabling(g, 0, k));
        CHECK(oracle::enabling(g, 1, k));
    }
    CHECK_THROWS_AS(p4_blowup(3), InvalidArgument);
}

TEST_CASE("biregular bipartite")
{
    auto edges = biregular_bipartite(6, 12, 4, 2);
    CHECK(edges.size() == 24);
    auto [left, right] = degrees(edges, 6, 12);
    for (auto d : left)
        CHECK(d == 4);
    for (auto d : right)
        CHECK(d == 2);

    auto matching = biregular_bipartite(5, 5, 1, 1);
    for (Vertex i = 0; i < 5; ++i)
        CHECK(matching[i] == Edge{ i, i });

    auto small = biregular_bipartite(4, 6, 3, 2);
    CHECK(small.size() == 12);
    auto [l2, r2] = degrees(small, 4, 6);
    for (auto d : l2)
        CHECK(d == 3);
    for (auto d : r2)
        CHECK(d == 2);

    CHECK_THROWS_AS(biregular_bipartite(4, 6, 3, 3), InvalidArgument);
    CHECK_THROWS_AS(biregular_bipartite(2, 1, 2, 4), InvalidArgument);
}

TEST_CASE("biregular bipartite is simple with exact degrees across a grid")
{
    for (std::size_t m1 = 1; m1 <= 12; ++m1)
        for (std::size_t m2 = 1; m2 <= 12; ++m2)
            for (std::size_t d1 = 0; d1 <= m2; ++d1) {
                if ((m1 * d1) % m2 != 0)
                    continue;
                auto d2 = m1 * d1 / m2;
                if (d2 > m1)
                    continue;
                auto edges = biregular_bipartite(m1, m2, d1, d2);
                std::set<Edge> unique(edges.begin(), edges.end());
                CHECK(unique.size() == edges.size());
                auto [left, right] = degrees(edges, m1, m2);
                for (auto d : left)
                    CHECK(d == d1);
                for (auto d : right)
                    CHECK(d == d2);
            }
}

TEST_CASE("two-colour extremal")
{
    auto p = two_colour_extremal_params(3, 9);
    CHECK(p.n == 18);
    CHECK(p.red_size() == 6);
    CHECK(p.blue_size() == 12);

    auto g = two_colour_extremal(3, 9);
    CHECK(g.vertex_count() == 18);
    CHECK(verify_enabling(g, two_targets(3, 9)).ok);
    std::vector<std::size_t> cross(18);
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = 6; v < 18; ++v)
            if (g.colour_of(u, v) == 0) {
                ++cross[u];
                ++cross[v];
            }
    for (Vertex v = 0; v < 18; ++v)
        CHECK(cross[v] == (v < 6 ? 4 : 2));

    auto g22 = two_colour_extremal(2, 2);
    CHECK(g22.vertex_count() == 4);
    CHECK(verify_enabling(g22, two_targets(2, 2)).ok);

    auto g55 = two_colour_extremal(5, 5);
    CHECK(g55.vertex_count() == 16);
    CHECK(oracle::enabling(g55, 0, 5));
    CHECK(oracle::enabling(g55, 1, 5));

    CHECK_THROWS_AS(two_colour_extremal(2, 3), NotIntegral);
    CHECK_THROWS_AS(two_colour_extremal(1, 4), InvalidArgument);
    CHECK(two_colour_surd(2, 3) == "3 + 2*sqrt(2)");
}

TEST_CASE("extremal constructions are symmetric under colour swap")
{
    std::vector<Colour> swap{ 1, 0 };
    for (std::uint64_t a = 1; a <= 30; ++a)
        for (std::uint64_t b = 1; b <= 30; ++b) {
            if (! is_perfect_square(a * b))
                continue;
            auto g = two_colour_extremal(a + 1, b + 1);
            CHECK(g.vertex_count() == two_colour_lower(a + 1, b + 1));
            CHECK(verify_enabling(g, two_targets(a + 1, b + 1)).ok);
            CHECK(verify_enabling(g.permute_colours(swap), two_targets(b + 1, a + 1)).ok);
        }
}

TEST_CASE("multicolour blocks")
{
    auto g = multicolour_blocks(3, 3);
    CHECK(g.vertex_count() == 12);
    CHECK(g.colour_count() == 3);
    CHECK(verify_enabling(g, all_targets(3, 3)).ok);

    for (std::size_t k = 2; k <= 6; ++k)
        CHECK(multicolour_blocks(2, k).vertex_count() == 4 * k - 4);

    auto g42 = multicolour_blocks(4, 2);
    CHECK(g42.vertex_count() == 8);
    for (Colour c = 0; c < 4; ++c)
        CHECK(oracle::enabling(g42, c, 2));

    for (std::size_t r = 2; r <= 4; ++r)
        for (std::size_t k = 2; k <= 4; ++k) {
            auto h = multicolour_blocks(r, k);
            for (Colour c = 0; c < r; ++c)
                CHECK(oracle::enabling(h, c, k));
        }
    CHECK_THROWS_AS(multicolour_blocks(1, 3), InvalidArgument);
    CHECK_THROWS_AS(multicolour_blocks(3, 1), InvalidArgument);
}

TEST_CASE("prime slope colours pairs by the slope of their line")
{
    for (std::uint64_t p : { 2, 3, 5, 7 }) {
        auto g = prime_slope(p);
        CHECK(g.vertex_count() == p * p);
        CHECK(g.colour_count() == p + 1);
        for (Vertex u = 0; u < p * p; ++u)
            for (Vertex v = u + 1; v < p * p; ++v) {
                std::uint64_t x = u / p, y = u % p, z = v / p, w = v % p;
                Colour expected = static_cast<Colour>(p);
                if (y != w)
                    // Brute-force division: the s with s (y - w) = x - z mod p.
                    for (std::uint64_t s = 0; s < p; ++s)
                        if ((s * ((y + p - w) % p)) % p == (x + p - z) % p)
                            expected = static_cast<Colour>(s);
                CHECK(g.colour_of(u, v) == expected);
            }
    }

    auto g2 = prime_slope(2);
    for (Colour c = 0; c < 3; ++c) {
        auto edges = g2.edges_of_colour(c);
        CHECK(edges.size() == 2);
        std::set<Vertex> touched;
        for (auto [u, v] : edges) {
            touched.insert(u);
            touched.insert(v);
        }
        CHECK(touched.size() == 4);
    }

    CHECK(verify_enabling(prime_slope(3), all_targets(4, 3)).ok);
    CHECK(verify_enabling(prime_slope(5), all_targets(6, 5)).ok);
    CHECK(25 < multicolour_blocks(6, 5).vertex_count());
    CHECK_THROWS_AS(prime_slope(4), InvalidArgument);
    CHECK_THROWS_AS(prime_slope(1), InvalidArgument);
}

TEST_CASE("construct dispatches by family name")
{
    CHECK(construct("p4", { 8 }).graph == p4_blowup(8));
    CHECK(construct("extremal", { 3, 9 }).graph == two_colour_extremal(3, 9));
    CHECK(construct("blocks", { 3, 3 }).graph == multicolour_blocks(3, 3));
    CHECK(construct("prime", { 5 }).graph == prime_slope(5));
    auto j = to_json(construct("extremal", { 3, 9 }));
    CHECK(j.contains("metadata"));
    CHECK(graph_from_json(j) == two_colour_extremal(3, 9));
    CHECK_THROWS_AS(construct("petersen", { 1 }), InvalidArgument);
    CHECK_THROWS_AS(construct("blocks", { 3 }), InvalidArgument);
}
