#include <enabling/cliques.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <functional>
#include <set>
#include <thread>

using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

using nlohmann::json;

namespace enabling
{
    namespace
    {
        class Bitset
        {
            private:
                vector<uint64_t> _words;

            public:
                explicit Bitset(size_t bits) :
                    _words((bits + 63) / 64, 0)
                {
                }

                auto set(size_t i) -> void { _words[i / 64] |= uint64_t{ 1 } << (i % 64); }
                auto reset(size_t i) -> void { _words[i / 64] &= ~(uint64_t{ 1 } << (i % 64)); }

                auto count() const -> size_t
                {
                    size_t c = 0;
                    for (auto w : _words)
                        c += std::popcount(w);
                    return c;
                }

                /// Lowest set bit, or npos.
                auto first() const -> size_t
                {
                    for (size_t i = 0; i < _words.size(); ++i)
                        if (_words[i])
                            return i * 64 + std::countr_zero(_words[i]);
                    return npos;
                }

                auto intersect_with(const Bitset & other) -> void
                {
                    for (size_t i = 0; i < _words.size(); ++i)
                        _words[i] &= other._words[i];
                }

                /// Clear every bit at position <= i.
                auto clear_up_to(size_t i) -> void
                {
                    for (size_t w = 0; w < i / 64; ++w)
                        _words[w] = 0;
                    auto shift = i % 64;
                    _words[i / 64] &= (shift == 63) ? 0 : ~((uint64_t{ 2 } << shift) - 1);
                }

                static constexpr size_t npos = ~size_t{ 0 };
        };

        class ColourAdjacency
        {
            private:
                vector<Bitset> _rows;

            public:
                ColourAdjacency(const EdgeColouredGraph & g, Colour c)
                {
                    auto n = g.vertex_count();
                    _rows.assign(n, Bitset{ n });
                    const auto & colours = g.colours();
                    size_t idx = 0;
                    for (Vertex u = 0; u < n; ++u)
                        for (Vertex v = u + 1; v < n; ++v, ++idx)
                            if (colours[idx] == c) {
                                _rows[u].set(v);
                                _rows[v].set(u);
                            }
                }

                auto row(Vertex v) const -> const Bitset & { return _rows[v]; }
        };

        // Extends current by candidates in ascending order. The visitor
        // returns true to stop the whole search.
        auto extend(const ColourAdjacency & adj, vector<Vertex> & current, Bitset candidates, size_t k,
                const std::function<bool (const vector<Vertex> &)> & visit) -> bool
        {
            if (current.size() == k)
                return visit(current);
            while (true) {
                if (current.size() + candidates.count() < k)
                    return false;
                auto v = candidates.first();
                if (v == Bitset::npos)
                    return false;
                candidates.reset(v);
                Bitset next = candidates;
                next.intersect_with(adj.row(v));
                current.push_back(v);
                bool stop = extend(adj, current, std::move(next), k, visit);
                current.pop_back();
                if (stop)
                    return true;
            }
        }

        auto find_with(const ColourAdjacency & adj, Vertex v, size_t k) -> optional<VertexSet>
        {
            optional<VertexSet> found;
            vector<Vertex> current;
            // v is placed first; the neighbours come in ascending order, which
            // makes the first hit lexicographically smallest once v is sorted in.
            current.push_back(v);
            Bitset candidates = adj.row(v);
            extend(adj, current, candidates, k, [&] (const vector<Vertex> & c) {
                    VertexSet s = c;
                    std::sort(s.begin(), s.end());
                    found = std::move(s);
                    return true;
                    });
            return found;
        }

        auto check_targets(const EdgeColouredGraph & g, const vector<Target> & targets) -> void
        {
            std::set<Colour> seen;
            for (auto t : targets) {
                if (t.colour >= g.colour_count())
                    throw InvalidArgument{ "target colour " + to_string(t.colour) + " is not a colour of the graph" };
                if (t.k == 0)
                    throw InvalidArgument{ "target clique size must be at least 1" };
                if (! seen.insert(t.colour).second)
                    throw InvalidArgument{ "duplicate colour " + to_string(t.colour) + " in targets" };
            }
        }
    }

    auto parse_targets(const string & text) -> vector<Target>
    {
        vector<Target> result;
        size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find(',', pos);
            if (end == string::npos)
                end = text.size();
            auto item = text.substr(pos, end - pos);
            auto colon = item.find(':');
            Target t{};
            auto parse = [&] (std::string_view s, auto & out) {
                auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
                if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
                    throw InvalidArgument{ "malformed target '" + item + "' (expected colour:k)" };
            };
            if (colon == string::npos)
                throw InvalidArgument{ "malformed target '" + item + "' (expected colour:k)" };
            std::string_view view{ item };
            parse(view.substr(0, colon), t.colour);
            parse(view.substr(colon + 1), t.k);
            result.push_back(t);
            pos = end + 1;
        }
        return result;
    }

    auto policy_name(FamilyPolicy p) -> string
    {
        return p == FamilyPolicy::per_vertex_lex ? "per-vertex-lex" : "all-cliques";
    }

    auto find_clique_containing(const EdgeColouredGraph & g, Colour c, Vertex v, size_t k) -> optional<VertexSet>
    {
        if (v >= g.vertex_count())
            throw InvalidArgument{ "vertex " + to_string(v) + " out of range" };
        if (k == 0)
            throw InvalidArgument{ "clique size must be at least 1" };
        if (c >= g.colour_count())
            throw InvalidArgument{ "colour " + to_string(c) + " out of range" };
        ColourAdjacency adj{ g, c };
        return find_with(adj, v, k);
    }

    auto enumerate_cliques(const EdgeColouredGraph & g, Colour c, size_t k, optional<size_t> limit) -> vector<VertexSet>
    {
        if (k == 0)
            throw InvalidArgument{ "clique size must be at least 1" };
        if (c >= g.colour_count())
            throw InvalidArgument{ "colour " + to_string(c) + " out of range" };
        auto n = g.vertex_count();
        ColourAdjacency adj{ g, c };
        vector<VertexSet> result;
        for (Vertex v = 0; v < n; ++v) {
            Bitset candidates = adj.row(v);
            candidates.clear_up_to(v);
            vector<Vertex> current{ v };
            extend(adj, current, std::move(candidates), k, [&] (const vector<Vertex> & s) {
                    result.push_back(s);
                    if (limit && result.size() > *limit)
                        throw FamilyTooLarge{ "more than " + to_string(*limit) + " colour-" + to_string(c)
                            + " cliques of size " + to_string(k) };
                    return false;
                    });
        }
        return result;
    }

    auto verify_enabling(const EdgeColouredGraph & g, const vector<Target> & targets, unsigned jobs) -> EnablingReport
    {
        check_targets(g, targets);
        auto n = g.vertex_count();

        vector<ColourAdjacency> adjacency;
        adjacency.reserve(targets.size());
        for (auto t : targets)
            adjacency.emplace_back(g, t.colour);

        // slots[v * |targets| + i]
        vector<optional<VertexSet>> slots(n * targets.size());
        auto work = [&] (size_t slot) {
            Vertex v = slot / targets.size();
            auto i = slot % targets.size();
            slots[slot] = find_with(adjacency[i], v, targets[i].k);
        };

        if (jobs <= 1)
            for (size_t s = 0; s < slots.size(); ++s)
                work(s);
        else {
            std::atomic<size_t> next{ 0 };
            vector<std::jthread> workers;
            for (unsigned j = 0; j < jobs; ++j)
                workers.emplace_back([&] {
                        for (size_t s; (s = next.fetch_add(1)) < slots.size(); )
                            work(s);
                        });
        }

        EnablingReport report;
        report.targets = targets;
        report.ok = true;
        for (size_t s = 0; s < slots.size(); ++s) {
            Vertex v = s / targets.size();
            auto c = targets[s % targets.size()].colour;
            if (! slots[s] && ! report.first_failure) {
                report.ok = false;
                report.first_failure = std::pair{ v, c };
            }
            report.witnesses.emplace(std::pair{ v, c }, std::move(slots[s]));
        }
        return report;
    }

    auto choose_family(const EdgeColouredGraph & g, Colour c, size_t k, FamilyPolicy policy, size_t limit) -> CliqueFamily
    {
        auto n = g.vertex_count();
        CliqueFamily family{ c, k, {}, {} };
        if (c >= g.colour_count())
            throw InvalidArgument{ "colour " + to_string(c) + " out of range" };
        if (k == 0)
            throw InvalidArgument{ "clique size must be at least 1" };

        ColourAdjacency adj{ g, c };
        vector<optional<VertexSet>> chosen(n);
        for (Vertex v = 0; v < n; ++v) {
            chosen[v] = find_with(adj, v, k);
            if (! chosen[v] && policy == FamilyPolicy::per_vertex_lex)
                throw InvalidArgument{ "vertex " + to_string(v) + " lies in no colour-" + to_string(c)
                    + " clique of size " + to_string(k) };
        }

        if (policy == FamilyPolicy::all_cliques)
            family.cliques = enumerate_cliques(g, c, k, limit);
        else {
            for (auto & w : chosen)
                family.cliques.push_back(*w);
            std::sort(family.cliques.begin(), family.cliques.end());
            family.cliques.erase(std::unique(family.cliques.begin(), family.cliques.end()), family.cliques.end());
        }

        family.designated.assign(n, no_clique);
        for (Vertex v = 0; v < n; ++v)
            if (chosen[v]) {
                auto it = std::lower_bound(family.cliques.begin(), family.cliques.end(), *chosen[v]);
                family.designated[v] = it - family.cliques.begin();
            }
        return family;
    }

    auto to_json(const EnablingReport & report) -> json
    {
        json witnesses = json::object();
        for (const auto & [key, w] : report.witnesses)
            witnesses[to_string(key.first) + "," + to_string(key.second)] = w ? json(*w) : json(nullptr);
        json targets = json::array();
        for (auto t : report.targets)
            targets.push_back({ t.colour, t.k });
        return json{
            { "ok", report.ok },
            { "targets", targets },
            { "witnesses", witnesses },
            { "first_failure", report.first_failure
                ? json::array({ report.first_failure->first, report.first_failure->second }) : json(nullptr) }
        };
    }
}
