#ifndef ENABLING_SEARCH_HH
#define ENABLING_SEARCH_HH

#include <enabling/graph.hh>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

namespace enabling
{
    /// Labelled enumeration stores a graph as a bitmask over the
    /// upper-triangular pair order, so at most 63 pairs (n <= 11).
    inline constexpr std::size_t max_exhaustive_vertices = 11;

    struct SearchOptions
    {
        /// Skip graphs whose red or blue degrees cannot support the targets.
        bool prune = true;
        /// The top shard_bits bits of the mask select one of 2^shard_bits shards.
        unsigned shard_bits = 0;
        unsigned jobs = 1;
        /// Called with the running count roughly every 2^20 graphs.
        std::function<void (std::uint64_t)> progress;
    };

    struct SearchReport
    {
        std::size_t k1 = 0, k2 = 0, n = 0;
        bool found = false;
        std::optional<std::uint64_t> witness_mask;
        std::optional<std::vector<Edge>> witness;
        /// Graphs visited in mask order, up to and including the witness.
        std::uint64_t graphs_enumerated = 0;
        std::uint64_t graphs_pruned = 0;
        std::chrono::milliseconds elapsed{ 0 };
    };

    /// Edges of the graph encoded by mask: bit i is the i-th pair in
    /// upper-triangular order.
    auto graph_from_mask(std::size_t n, std::uint64_t mask) -> EdgeColouredGraph;

    /// First (k1, k2)-enabling graph on n labelled vertices in mask order.
    auto exists_enabling(std::size_t n, std::size_t k1, std::size_t k2, const SearchOptions & options = {}) -> SearchReport;

    struct MinNResult
    {
        /// Absent when no n up to n_max works.
        std::optional<std::size_t> n;
        std::vector<SearchReport> reports;
    };

    /// Scans n = max(k1, k2) .. n_max. With trusted_bounds, values below the
    /// closed-form lower bound are skipped rather than searched.
    auto min_n(std::size_t k1, std::size_t k2, std::size_t n_max, const SearchOptions & options = {},
            bool trusted_bounds = false) -> MinNResult;

    /// elapsed is left out unless include_timing, so the document is
    /// reproducible byte-for-byte.
    auto to_json(const SearchReport & report, bool include_timing = false) -> nlohmann::json;
    auto to_json(const MinNResult & result, std::size_t n_max, bool include_timing = false) -> nlohmann::json;
}

#endif
