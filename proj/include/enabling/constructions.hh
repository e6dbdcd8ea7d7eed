#ifndef ENABLING_CONSTRUCTIONS_HH
#define ENABLING_CONSTRUCTIONS_HH

#include <enabling/graph.hh>

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace enabling
{
    /// Raised when (sqrt(k1-1) + sqrt(k2-1))^2 is irrational; the message
    /// carries the exact value in surd form.
    class NotIntegral : public InvalidArgument
    {
        public:
            using InvalidArgument::InvalidArgument;
    };

    /// Decomposition k1 = 1 + g a^2, k2 = 1 + g b^2 with g = gcd(k1-1, k2-1).
    struct TwoColourExtremalParams
    {
        std::uint64_t k1, k2;
        std::uint64_t g, a, b;
        std::uint64_t n;

        auto red_size() const -> std::uint64_t { return g * a * (a + b); }
        auto blue_size() const -> std::uint64_t { return g * b * (a + b); }
    };

    /// Exact integer square root (floor).
    auto isqrt(std::uint64_t x) -> std::uint64_t;
    auto is_perfect_square(std::uint64_t x) -> bool;
    auto is_prime(std::uint64_t p) -> bool;

    /// Returns the decomposition, or throws NotIntegral.
    auto two_colour_extremal_params(std::uint64_t k1, std::uint64_t k2) -> TwoColourExtremalParams;

    /// "a + b*sqrt(c)" with c square-free, for (k1-1) + (k2-1) + 2 sqrt((k1-1)(k2-1)).
    auto two_colour_surd(std::uint64_t k1, std::uint64_t k2) -> std::string;

    auto p4_blowup(std::size_t n) -> EdgeColouredGraph;

    /// Left vertex i is joined to right vertices (i d1 + s) mod m2, s < d1.
    /// Edges are (left, right) pairs sorted ascending.
    auto biregular_bipartite(std::size_t m1, std::size_t m2, std::size_t d1, std::size_t d2) -> std::vector<Edge>;

    auto two_colour_extremal(std::uint64_t k1, std::uint64_t k2) -> EdgeColouredGraph;

    auto multicolour_blocks(std::size_t r, std::size_t k) -> EdgeColouredGraph;

    /// Vertex (x, y) of Z_p x Z_p is labelled x p + y.
    auto prime_slope(std::uint64_t p) -> EdgeColouredGraph;

    struct Construction
    {
        EdgeColouredGraph graph;
        nlohmann::json metadata;
    };

    /// Dispatch by family name (p4, extremal, blocks, prime) with integer
    /// parameters, attaching the metadata block.
    auto construct(const std::string & family, const std::vector<std::uint64_t> & params) -> Construction;

    auto to_json(const Construction & c) -> nlohmann::json;
}

#endif
