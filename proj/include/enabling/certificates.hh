#ifndef ENABLING_CERTIFICATES_HH
#define ENABLING_CERTIFICATES_HH

#include <enabling/cliques.hh>
#include <enabling/graph.hh>
#include <enabling/lp.hh>
#include <enabling/rational.hh>

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace enabling
{
    /// Probability measure on the vertices.
    struct VertexMeasure
    {
        std::vector<Rational> weights;

        auto of(const VertexSet & s) const -> Rational;
    };

    /// Probability measure on the cliques of a family, indexed like family.cliques.
    struct FamilyMeasure
    {
        std::vector<Rational> weights;
    };

    /// Summary of one solved LP, kept so duality can be audited afterwards.
    struct LpRecord
    {
        Rational primal;
        Rational dual;
        std::size_t pivots = 0;
    };

    struct DeltaResult
    {
        Rational delta;
        VertexMeasure lambda_star;
        LpRecord lp;
    };

    struct MuResult
    {
        FamilyMeasure mu;
        /// Optimum of the unnormalised packing LP; at least 1 by duality.
        Rational packing_optimum;
        LpRecord lp;
    };

    /// maximise t subject to lambda(C) >= t for every family clique C,
    /// sum lambda = 1, lambda >= 0. Variables are lambda_0..lambda_{n-1}, t.
    auto delta_program(std::size_t n, const CliqueFamily & family) -> LinearProgram;

    /// The dual of delta_program: minimise s subject to sum_{C containing v} y_C <= s
    /// for every v, sum y = 1, y >= 0. Variables are y_0..y_{m-1}, s.
    auto delta_dual_program(std::size_t n, const CliqueFamily & family) -> LinearProgram;

    /// maximise sum mu(X) subject to sum_{X containing v} mu(X) <= delta for every v.
    auto packing_program(std::size_t n, const CliqueFamily & family, const Rational & delta) -> LinearProgram;

    auto compute_delta(const EdgeColouredGraph & g, const CliqueFamily & family) -> DeltaResult;

    /// Throws LemmaViolation if the packing optimum is below 1.
    auto construct_mu(const EdgeColouredGraph & g, const CliqueFamily & family, const Rational & delta) -> MuResult;

    /// mass[v] = mu-measure of the family cliques containing v.
    auto vertex_masses(std::size_t n, const CliqueFamily & family, const FamilyMeasure & mu) -> std::vector<Rational>;

    /// Every clique of one family meets every clique of the other in at most
    /// one vertex. The families must have different colours.
    auto check_pairwise_intersections(const CliqueFamily & first, const CliqueFamily & second) -> bool;

    /**
     * The two-colour lower bound on n obtained from delta1, delta2 by choosing
     * the split d + (1 - d) = 1 with d in [delta1, 1 - delta2] that minimises
     * (k1-1)/d + (k2-1)/(1-d). If the unconstrained minimiser
     * sqrt(k1-1) / (sqrt(k1-1) + sqrt(k2-1)) lies in the interval the value is
     * (sqrt(k1-1) + sqrt(k2-1))^2, possibly irrational; otherwise it is the
     * nearer endpoint's value. The comparison is done on squares, exactly.
     */
    struct TwoColourBound
    {
        /// Set whenever the value is rational.
        std::optional<Rational> exact;
        /// Decimal or surd form, always present.
        std::string closed_form;
        Integer ceiling;
        bool at_stationary_point = false;
    };

    auto two_colour_bound(std::uint64_t k1, std::uint64_t k2, const Rational & delta1, const Rational & delta2) -> TwoColourBound;

    /// (k1-1)/d + (k2-1)/(1-d) maximised over the endpoints of [delta1, 1 - delta2],
    /// the strongest bound the same inequality gives.
    auto endpoint_split_bound(std::uint64_t k1, std::uint64_t k2, const Rational & delta1, const Rational & delta2) -> Rational;

    /// True if delta <= 1/2, otherwise whether supp(lambda) is a colour-c clique.
    auto support_clique_check(const EdgeColouredGraph & g, Colour c, const VertexMeasure & lambda, const Rational & delta) -> bool;

    struct ColourCertificate
    {
        Colour colour;
        CliqueFamily family;
        Rational delta;
        VertexMeasure lambda_star;
        FamilyMeasure mu;
        std::vector<Rational> mu_mass;
        Rational alpha;
        Rational packing_optimum;
        bool support_clique = false;
        LpRecord delta_lp, packing_lp;
    };

    struct PairCheck
    {
        Colour first, second;
        Rational delta_sum;
        Rational mu_product;
        bool intersections_ok = false;
    };

    struct Certificate
    {
        std::size_t n = 0;
        FamilyPolicy policy = FamilyPolicy::all_cliques;
        std::vector<ColourCertificate> colours;
        std::vector<PairCheck> pairs;

        // Two colours.
        std::optional<TwoColourBound> split_bound;
        std::optional<Rational> endpoint_bound;
        std::optional<Rational> bound_at_deltas;

        // Three or more colours.
        std::optional<Rational> alpha_bar;
        std::optional<Rational> f_at_alpha_bar;

        Integer lower_bound;
    };

    /**
     * Builds per-colour families, delta, lambda* and mu, then checks every
     * inequality the lower-bound argument relies on. Any failure throws
     * LemmaViolation carrying the offending exact values. Targets must cover
     * every colour of the graph once; with three or more colours they must
     * share one clique size.
     */
    auto certify(const EdgeColouredGraph & g, const std::vector<Target> & targets,
            FamilyPolicy policy = FamilyPolicy::all_cliques, std::size_t family_limit = default_family_limit) -> Certificate;

    auto to_json(const Certificate & c) -> nlohmann::json;

    /// Re-verifies a certificate document against a graph without solving any
    /// LP. Returns the list of problems found; empty means valid.
    auto check_certificate(const EdgeColouredGraph & g, const nlohmann::json & certificate) -> std::vector<std::string>;
}

#endif
