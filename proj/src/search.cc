#include <enabling/search.hh>
#include <enabling/bounds.hh>
#include <enabling/cliques.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>

using std::size_t;
using std::to_string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

using nlohmann::json;

namespace enabling
{
    namespace
    {
        constexpr uint64_t progress_interval = uint64_t{ 1 } << 20;
        constexpr uint64_t cancel_check_interval = uint64_t{ 1 } << 14;

        auto has_clique_through(const uint32_t * adj, uint32_t candidates, size_t need) -> bool
        {
            if (need == 0)
                return true;
            while (static_cast<size_t>(std::popcount(candidates)) >= need) {
                auto u = std::countr_zero(candidates);
                candidates &= candidates - 1;
                if (has_clique_through(adj, candidates & adj[u], need - 1))
                    return true;
            }
            return false;
        }

        struct Enumerator
        {
            size_t n, k1, k2;
            size_t pairs;
            bool prune;
            vector<uint64_t> incident;
            vector<std::pair<unsigned, unsigned>> pair_of;

            Enumerator(size_t n_, size_t k1_, size_t k2_, bool prune_) :
                n(n_), k1(k1_), k2(k2_), pairs(pair_count(n_)), prune(prune_), incident(n_, 0)
            {
                size_t i = 0;
                for (unsigned u = 0; u < n; ++u)
                    for (unsigned v = u + 1; v < n; ++v, ++i) {
                        incident[u] |= uint64_t{ 1 } << i;
                        incident[v] |= uint64_t{ 1 } << i;
                        pair_of.emplace_back(u, v);
                    }
            }

            // Red degree must lie in [k1 - 1, n - k2].
            auto degrees_fit(uint64_t mask) const -> bool
            {
                for (size_t v = 0; v < n; ++v) {
                    size_t d = std::popcount(mask & incident[v]);
                    if (d + 1 < k1 || d + k2 > n)
                        return false;
                }
                return true;
            }

            auto enabling(uint64_t mask) const -> bool
            {
                uint32_t red[max_exhaustive_vertices] = {}, blue[max_exhaustive_vertices];
                for (uint64_t m = mask; m; m &= m - 1) {
                    auto [u, v] = pair_of[std::countr_zero(m)];
                    red[u] |= uint32_t{ 1 } << v;
                    red[v] |= uint32_t{ 1 } << u;
                }
                uint32_t all = (uint32_t{ 1 } << n) - 1;
                for (size_t v = 0; v < n; ++v)
                    blue[v] = all & ~red[v] & ~(uint32_t{ 1 } << v);
                for (size_t v = 0; v < n; ++v) {
                    if (! has_clique_through(red, red[v], k1 - 1))
                        return false;
                    if (! has_clique_through(blue, blue[v], k2 - 1))
                        return false;
                }
                return true;
            }
        };

        struct ShardResult
        {
            std::optional<uint64_t> witness;
            uint64_t enumerated = 0;
            uint64_t pruned = 0;
        };
    }

    auto graph_from_mask(size_t n, uint64_t mask) -> EdgeColouredGraph
    {
        vector<Colour> colours(pair_count(n));
        for (size_t i = 0; i < colours.size(); ++i)
            colours[i] = (mask >> i) & 1 ? 0 : 1;
        return EdgeColouredGraph::build(n, 2, std::move(colours));
    }

    auto exists_enabling(size_t n, size_t k1, size_t k2, const SearchOptions & options) -> SearchReport
    {
        if (n < 1)
            throw InvalidArgument{ "n must be positive" };
        if (k1 < 1 || k2 < 1)
            throw InvalidArgument{ "clique sizes must be at least 1" };
        if (n > max_exhaustive_vertices)
            throw InvalidArgument{ "n = " + to_string(n) + " is too large for exhaustive search (at most "
                + to_string(max_exhaustive_vertices) + " vertices, 63 pairs)" };

        auto start = std::chrono::steady_clock::now();
        Enumerator en{ n, k1, k2, options.prune };
        unsigned shard_bits = std::min<size_t>(options.shard_bits, en.pairs);
        uint64_t shards = uint64_t{ 1 } << shard_bits;
        uint64_t shard_size = uint64_t{ 1 } << (en.pairs - shard_bits);

        vector<ShardResult> results(shards);
        std::atomic<uint64_t> winner{ std::numeric_limits<uint64_t>::max() };
        std::atomic<uint64_t> next_shard{ 0 };
        std::atomic<uint64_t> visited{ 0 };
        std::mutex progress_mutex;

        auto run_shard = [&] (uint64_t s) {
            auto & result = results[s];
            uint64_t base = s * shard_size;
            for (uint64_t offset = 0; offset < shard_size; ++offset) {
                if (offset % cancel_check_interval == 0 && offset > 0) {
                    if (winner.load(std::memory_order_relaxed) < s)
                        return;
                    if (offset % progress_interval == 0 && options.progress) {
                        auto total = visited.fetch_add(progress_interval) + progress_interval;
                        std::lock_guard lock{ progress_mutex };
                        options.progress(total);
                    }
                }
                uint64_t mask = base + offset;
                ++result.enumerated;
                if (en.prune && ! en.degrees_fit(mask)) {
                    ++result.pruned;
                    continue;
                }
                if (en.enabling(mask)) {
                    result.witness = mask;
                    uint64_t current = winner.load();
                    while (s < current && ! winner.compare_exchange_weak(current, s))
                        ;
                    return;
                }
            }
        };

        auto worker = [&] {
            for (uint64_t s; (s = next_shard.fetch_add(1)) < shards; )
                if (winner.load() > s)
                    run_shard(s);
        };

        if (options.jobs <= 1)
            worker();
        else {
            vector<std::jthread> threads;
            for (unsigned j = 0; j < options.jobs; ++j)
                threads.emplace_back(worker);
        }

        SearchReport report;
        report.n = n;
        report.k1 = k1;
        report.k2 = k2;
        // Every shard before the winner ran to completion, so summing them in
        // order gives counts independent of scheduling.
        for (uint64_t s = 0; s < shards; ++s) {
            report.graphs_enumerated += results[s].enumerated;
            report.graphs_pruned += results[s].pruned;
            if (results[s].witness) {
                report.found = true;
                report.witness_mask = results[s].witness;
                break;
            }
        }

        if (report.found) {
            auto g = graph_from_mask(n, *report.witness_mask);
            auto check = verify_enabling(g, { { 0, k1 }, { 1, k2 } });
            if (! check.ok)
                throw LemmaViolation{ "search witness mask " + to_string(*report.witness_mask) + " fails verification" };
            report.witness = g.edges_of_colour(0);
        }
        report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        return report;
    }

    auto min_n(size_t k1, size_t k2, size_t n_max, const SearchOptions & options, bool trusted_bounds) -> MinNResult
    {
        if (n_max > max_exhaustive_vertices)
            throw InvalidArgument{ "n_max = " + to_string(n_max) + " is too large for exhaustive search" };
        if (k1 < 1 || k2 < 1)
            throw InvalidArgument{ "clique sizes must be at least 1" };
        size_t first = std::max(k1, k2);
        if (trusted_bounds)
            first = std::max<size_t>(first, two_colour_lower(k1, k2));

        MinNResult result;
        for (size_t n = first; n <= n_max; ++n) {
            result.reports.push_back(exists_enabling(n, k1, k2, options));
            if (result.reports.back().found) {
                result.n = n;
                break;
            }
        }
        return result;
    }

    auto to_json(const SearchReport & report, bool include_timing) -> json
    {
        json j{
            { "k1", report.k1 },
            { "k2", report.k2 },
            { "n", report.n },
            { "found", report.found },
            { "graphs_enumerated", report.graphs_enumerated },
            { "graphs_pruned", report.graphs_pruned }
        };
        if (report.witness) {
            json edges = json::array();
            for (auto [u, v] : *report.witness)
                edges.push_back({ u, v });
            j["witness"] = edges;
            j["witness_mask"] = *report.witness_mask;
        }
        else
            j["witness"] = nullptr;
        if (include_timing)
            j["elapsed_ms"] = report.elapsed.count();
        return j;
    }

    auto to_json(const MinNResult & result, size_t n_max, bool include_timing) -> json
    {
        json reports = json::array();
        for (const auto & r : result.reports)
            reports.push_back(to_json(r, include_timing));
        return json{
            { "min_n", result.n ? json(*result.n) : json(nullptr) },
            { "n_max", n_max },
            { "exceeds_n_max", ! result.n.has_value() },
            { "searches", reports }
        };
    }
}
