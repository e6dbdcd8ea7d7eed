#ifndef ENABLING_CLIQUES_HH
#define ENABLING_CLIQUES_HH

#include <enabling/graph.hh>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace enabling
{
    /// A requirement "every vertex lies in a size-k clique of this colour".
    struct Target
    {
        Colour colour;
        std::size_t k;

        auto operator==(const Target &) const -> bool = default;
    };

    /// Parses "c:k,c:k,...".
    auto parse_targets(const std::string & text) -> std::vector<Target>;

    enum class FamilyPolicy
    {
        per_vertex_lex,
        all_cliques
    };

    auto policy_name(FamilyPolicy p) -> std::string;

    inline constexpr std::size_t no_clique = ~std::size_t{ 0 };

    struct CliqueFamily
    {
        Colour colour;
        std::size_t k;
        std::vector<VertexSet> cliques;
        /// designated[v] indexes the lexicographically first clique containing
        /// v, or is no_clique when v is uncovered (only under all-cliques).
        std::vector<std::size_t> designated;
    };

    struct EnablingReport
    {
        std::vector<Target> targets;
        bool ok = false;
        /// Keyed by (vertex, colour).
        std::map<std::pair<Vertex, Colour>, std::optional<VertexSet>> witnesses;
        std::optional<std::pair<Vertex, Colour>> first_failure;
    };

    /// Lexicographically smallest size-k colour-c clique containing v.
    auto find_clique_containing(const EdgeColouredGraph & g, Colour c, Vertex v, std::size_t k) -> std::optional<VertexSet>;

    class FamilyTooLarge : public InvalidArgument
    {
        public:
            using InvalidArgument::InvalidArgument;
    };

    /// Every size-k colour-c clique, in lexicographic order. If limit is
    /// given and exceeded, throws FamilyTooLarge.
    auto enumerate_cliques(const EdgeColouredGraph & g, Colour c, std::size_t k,
            std::optional<std::size_t> limit = std::nullopt) -> std::vector<VertexSet>;

    /// jobs > 1 spreads the per-vertex searches across threads; the report is
    /// identical either way.
    auto verify_enabling(const EdgeColouredGraph & g, const std::vector<Target> & targets, unsigned jobs = 1) -> EnablingReport;

    /// Default cap on the size of an all-cliques family.
    inline constexpr std::size_t default_family_limit = 2000;

    auto choose_family(const EdgeColouredGraph & g, Colour c, std::size_t k, FamilyPolicy policy,
            std::size_t limit = default_family_limit) -> CliqueFamily;

    auto to_json(const EnablingReport & report) -> nlohmann::json;
}

#endif
