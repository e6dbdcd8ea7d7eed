#include <enabling/graph.hh>

#include <algorithm>

using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::vector;

using nlohmann::json;

namespace enabling
{
    auto pair_count(size_t n) -> size_t
    {
        return n < 2 ? 0 : n * (n - 1) / 2;
    }

    auto pair_index(size_t n, Vertex u, Vertex v) -> size_t
    {
        if (u > v)
            std::swap(u, v);
        return size_t{ u } * n - size_t{ u } * (u + 1) / 2 + (v - u - 1);
    }

    auto is_valid_vertex_set(span<const Vertex> s, size_t n) -> bool
    {
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] >= n)
                return false;
            if (i > 0 && s[i - 1] >= s[i])
                return false;
        }
        return true;
    }

    EdgeColouredGraph::EdgeColouredGraph(size_t n, size_t r, vector<Colour> colours) :
        _n(n),
        _r(r),
        _colours(std::move(colours))
    {
    }

    auto EdgeColouredGraph::build(size_t n, size_t r, vector<Colour> colours) -> EdgeColouredGraph
    {
        if (n == 0)
            throw InvalidArgument{ "vertex count must be positive" };
        if (r == 0)
            throw InvalidArgument{ "colour count must be positive" };
        if (colours.size() != pair_count(n))
            throw InvalidArgument{ "colour sequence has length " + to_string(colours.size()) + ", expected "
                + to_string(pair_count(n)) + " for n = " + to_string(n) };
        for (size_t i = 0; i < colours.size(); ++i)
            if (colours[i] >= r)
                throw InvalidArgument{ "colour " + to_string(colours[i]) + " at position " + to_string(i)
                    + " is out of range for r = " + to_string(r) };
        return EdgeColouredGraph{ n, r, std::move(colours) };
    }

    auto EdgeColouredGraph::from_simple_graph(size_t n, span<const Edge> edges) -> EdgeColouredGraph
    {
        if (n == 0)
            throw InvalidArgument{ "vertex count must be positive" };
        vector<Colour> colours(pair_count(n), 1);
        vector<bool> seen(colours.size(), false);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw InvalidArgument{ "edge {" + to_string(u) + "," + to_string(v) + "} has a vertex out of range" };
            if (u == v)
                throw InvalidArgument{ "edge {" + to_string(u) + "," + to_string(v) + "} is a loop" };
            auto i = pair_index(n, u, v);
            if (seen[i])
                throw InvalidArgument{ "duplicate edge {" + to_string(u) + "," + to_string(v) + "}" };
            seen[i] = true;
            colours[i] = 0;
        }
        return EdgeColouredGraph{ n, 2, std::move(colours) };
    }

    auto EdgeColouredGraph::colour_of(Vertex u, Vertex v) const -> Colour
    {
        if (u >= _n || v >= _n)
            throw InvalidArgument{ "vertex out of range in colour_of(" + to_string(u) + "," + to_string(v) + ")" };
        if (u == v)
            throw InvalidArgument{ "colour_of called on a loop at vertex " + to_string(u) };
        return _colours[pair_index(_n, u, v)];
    }

    auto EdgeColouredGraph::is_monochromatic_clique(span<const Vertex> s, Colour c) const -> bool
    {
        if (! is_valid_vertex_set(s, _n))
            throw InvalidArgument{ "vertex set is not sorted, duplicate-free and in range" };
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (_colours[pair_index(_n, s[i], s[j])] != c)
                    return false;
        return true;
    }

    auto EdgeColouredGraph::permute_colours(span<const Colour> perm) const -> EdgeColouredGraph
    {
        if (perm.size() != _r)
            throw InvalidArgument{ "colour permutation has length " + to_string(perm.size()) + ", expected " + to_string(_r) };
        vector<bool> hit(_r, false);
        for (auto c : perm) {
            if (c >= _r || hit[c])
                throw InvalidArgument{ "colour permutation is not a bijection" };
            hit[c] = true;
        }
        vector<Colour> mapped(_colours.size());
        std::ranges::transform(_colours, mapped.begin(), [&] (Colour c) { return perm[c]; });
        return EdgeColouredGraph{ _n, _r, std::move(mapped) };
    }

    auto EdgeColouredGraph::relabel_vertices(span<const Vertex> perm) const -> EdgeColouredGraph
    {
        if (perm.size() != _n)
            throw InvalidArgument{ "vertex permutation has the wrong length" };
        vector<bool> hit(_n, false);
        for (auto v : perm) {
            if (v >= _n || hit[v])
                throw InvalidArgument{ "vertex permutation is not a bijection" };
            hit[v] = true;
        }
        vector<Colour> mapped(_colours.size());
        for (Vertex u = 0; u < _n; ++u)
            for (Vertex v = u + 1; v < _n; ++v)
                mapped[pair_index(_n, perm[u], perm[v])] = _colours[pair_index(_n, u, v)];
        return EdgeColouredGraph{ _n, _r, std::move(mapped) };
    }

    auto EdgeColouredGraph::edges_of_colour(Colour c) const -> vector<Edge>
    {
        vector<Edge> result;
        size_t i = 0;
        for (Vertex u = 0; u < _n; ++u)
            for (Vertex v = u + 1; v < _n; ++v, ++i)
                if (_colours[i] == c)
                    result.emplace_back(u, v);
        return result;
    }

    auto to_json(const EdgeColouredGraph & g) -> json
    {
        return json{ { "n", g.vertex_count() }, { "r", g.colour_count() }, { "colours", g.colours() } };
    }

    auto graph_from_json(const json & j) -> EdgeColouredGraph
    {
        if (! j.is_object() || ! j.contains("n") || ! j.contains("r") || ! j.contains("colours"))
            throw InvalidArgument{ "graph JSON must be an object with keys n, r and colours" };
        auto read_count = [&] (const char * key) -> size_t {
            const auto & v = j.at(key);
            if (! v.is_number_integer() || v.get<long long>() < 1)
                throw InvalidArgument{ string{ "graph JSON field '" } + key + "' must be a positive integer" };
            return v.get<size_t>();
        };
        auto n = read_count("n");
        auto r = read_count("r");
        const auto & arr = j.at("colours");
        if (! arr.is_array())
            throw InvalidArgument{ "graph JSON field 'colours' must be an array" };
        vector<Colour> colours;
        colours.reserve(arr.size());
        for (const auto & c : arr) {
            if (! c.is_number_integer() || c.get<long long>() < 0)
                throw InvalidArgument{ "graph JSON colours must be non-negative integers" };
            colours.push_back(c.get<Colour>());
        }
        return EdgeColouredGraph::build(n, r, std::move(colours));
    }

    auto parse_graph(const string & text) -> EdgeColouredGraph
    {
        json j;
        try {
            j = json::parse(text);
        }
        catch (const json::parse_error & e) {
            throw InvalidArgument{ string{ "malformed graph JSON: " } + e.what() };
        }
        return graph_from_json(j);
    }

    auto serialise_graph(const EdgeColouredGraph & g) -> string
    {
        return to_json(g).dump();
    }
}
