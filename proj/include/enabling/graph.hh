#ifndef ENABLING_GRAPH_HH
#define ENABLING_GRAPH_HH

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace enabling
{
    using Vertex = std::uint32_t;
    using Colour = std::uint32_t;

    /// Sorted, duplicate-free list of vertex indices.
    using VertexSet = std::vector<Vertex>;

    using Edge = std::pair<Vertex, Vertex>;

    /// A caller handed us something that breaks a documented precondition.
    class InvalidArgument : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// One of the mathematical invariants the tool checks was falsified. This
    /// must never happen on correct input, and is reported with exact values.
    class LemmaViolation : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };

    auto is_valid_vertex_set(std::span<const Vertex> s, std::size_t n) -> bool;

    /**
     * A complete graph on n vertices whose every unordered pair carries one of
     * r colours. Colours are stored as the upper-triangular sequence
     * (0,1),(0,2),...,(0,n-1),(1,2),...,(n-2,n-1). For two colours, colour 0
     * is red (the edges of a simple graph) and colour 1 is blue.
     */
    class EdgeColouredGraph
    {
        private:
            std::size_t _n;
            std::size_t _r;
            std::vector<Colour> _colours;

            EdgeColouredGraph(std::size_t n, std::size_t r, std::vector<Colour> colours);

        public:
            static auto build(std::size_t n, std::size_t r, std::vector<Colour> colours) -> EdgeColouredGraph;

            /// Colour 0 on the listed pairs, colour 1 everywhere else.
            static auto from_simple_graph(std::size_t n, std::span<const Edge> edges) -> EdgeColouredGraph;

            auto vertex_count() const -> std::size_t { return _n; }
            auto colour_count() const -> std::size_t { return _r; }
            auto colours() const -> const std::vector<Colour> & { return _colours; }

            auto colour_of(Vertex u, Vertex v) const -> Colour;

            auto is_monochromatic_clique(std::span<const Vertex> s, Colour c) const -> bool;

            /// perm[c] is the new colour of every pair currently coloured c.
            auto permute_colours(std::span<const Colour> perm) const -> EdgeColouredGraph;

            /// Relabel vertices: vertex v becomes perm[v].
            auto relabel_vertices(std::span<const Vertex> perm) const -> EdgeColouredGraph;

            /// Pairs of the given colour, in upper-triangular order.
            auto edges_of_colour(Colour c) const -> std::vector<Edge>;

            auto operator==(const EdgeColouredGraph &) const -> bool = default;
    };

    auto pair_count(std::size_t n) -> std::size_t;

    /// Position of {u,v} (u < v) in the upper-triangular sequence.
    auto pair_index(std::size_t n, Vertex u, Vertex v) -> std::size_t;

    auto to_json(const EdgeColouredGraph & g) -> nlohmann::json;
    auto graph_from_json(const nlohmann::json & j) -> EdgeColouredGraph;

    auto parse_graph(const std::string & text) -> EdgeColouredGraph;
    auto serialise_graph(const EdgeColouredGraph & g) -> std::string;
}

#endif
