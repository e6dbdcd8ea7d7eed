#include <enabling/certificates.hh>
#include <enabling/bounds.hh>
#include <enabling/constructions.hh>

#include <algorithm>
#include <set>

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
        auto violation(const string & what) -> LemmaViolation
        {
            return LemmaViolation{ what };
        }

        auto colour_label(Colour c) -> string
        {
            return "colour " + to_string(c);
        }

        auto sum(const vector<Rational> & xs) -> Rational
        {
            Rational s = 0;
            for (const auto & x : xs)
                s += x;
            return s;
        }

        auto split_value(const Rational & a, const Rational & b, const Rational & d) -> Rational
        {
            return Rational{ a / d + b / (1 - d) };
        }

        auto check_deltas(const Rational & delta1, const Rational & delta2) -> void
        {
            if (delta1 <= 0 || delta2 <= 0)
                throw InvalidArgument{ "deltas must be strictly positive" };
            if (delta1 + delta2 > 1)
                throw violation("delta1 + delta2 = " + to_string(Rational{ delta1 + delta2 }) + " exceeds 1");
        }

        auto record(const LpSolution & s) -> LpRecord
        {
            return LpRecord{ s.optimum, s.dual_objective, s.pivots };
        }

        auto lp_json(const LpRecord & r) -> json
        {
            return json{ { "primal", to_json(r.primal) }, { "dual", to_json(r.dual) }, { "pivots", r.pivots } };
        }

        auto rationals_json(const vector<Rational> & xs) -> json
        {
            json j = json::array();
            for (const auto & x : xs)
                j.push_back(to_json(x));
            return j;
        }

        auto max_of(const vector<Rational> & xs) -> Rational
        {
            Rational m = 0;
            for (const auto & x : xs)
                if (x > m)
                    m = x;
            return m;
        }

        auto dot(const vector<Rational> & a, const vector<Rational> & b) -> Rational
        {
            Rational s = 0;
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != 0 && b[i] != 0)
                    s += a[i] * b[i];
            return s;
        }

        auto intersection_size(const VertexSet & a, const VertexSet & b) -> size_t
        {
            size_t count = 0;
            auto i = a.begin(), j = b.begin();
            while (i != a.end() && j != b.end()) {
                if (*i < *j)
                    ++i;
                else if (*j < *i)
                    ++j;
                else {
                    ++count;
                    ++i;
                    ++j;
                }
            }
            return count;
        }
    }

    auto VertexMeasure::of(const VertexSet & s) const -> Rational
    {
        Rational total = 0;
        for (auto v : s)
            total += weights.at(v);
        return total;
    }

    auto delta_program(size_t n, const CliqueFamily & family) -> LinearProgram
    {
        LinearProgram lp;
        lp.sense = Sense::maximise;
        lp.objective.assign(n + 1, Rational{ 0 });
        lp.objective[n] = 1;
        for (const auto & clique : family.cliques) {
            LinearConstraint row{ vector<Rational>(n + 1), Relation::less_equal, Rational{ 0 } };
            row.coefficients[n] = 1;
            for (auto v : clique)
                row.coefficients[v] = -1;
            lp.constraints.push_back(std::move(row));
        }
        LinearConstraint total{ vector<Rational>(n + 1, Rational{ 1 }), Relation::equal, Rational{ 1 } };
        total.coefficients[n] = 0;
        lp.constraints.push_back(std::move(total));
        return lp;
    }

    auto delta_dual_program(size_t n, const CliqueFamily & family) -> LinearProgram
    {
        auto m = family.cliques.size();
        LinearProgram lp;
        lp.sense = Sense::minimise;
        lp.objective.assign(m + 1, Rational{ 0 });
        lp.objective[m] = 1;
        lp.constraints.assign(n, LinearConstraint{ vector<Rational>(m + 1), Relation::greater_equal, Rational{ 0 } });
        for (size_t x = 0; x < m; ++x)
            for (auto v : family.cliques[x])
                lp.constraints[v].coefficients[x] = -1;
        for (auto & row : lp.constraints)
            row.coefficients[m] = 1;
        LinearConstraint total{ vector<Rational>(m + 1, Rational{ 1 }), Relation::equal, Rational{ 1 } };
        total.coefficients[m] = 0;
        lp.constraints.push_back(std::move(total));
        return lp;
    }

    auto packing_program(size_t n, const CliqueFamily & family, const Rational & delta) -> LinearProgram
    {
        auto m = family.cliques.size();
        LinearProgram lp;
        lp.sense = Sense::maximise;
        lp.objective.assign(m, Rational{ 1 });
        lp.constraints.assign(n, LinearConstraint{ vector<Rational>(m), Relation::less_equal, delta });
        for (size_t x = 0; x < m; ++x)
            for (auto v : family.cliques[x])
                lp.constraints[v].coefficients[x] = 1;
        return lp;
    }

    auto compute_delta(const EdgeColouredGraph & g, const CliqueFamily & family) -> DeltaResult
    {
        if (family.cliques.empty())
            throw InvalidArgument{ "compute_delta needs a non-empty family" };
        auto n = g.vertex_count();
        // The vertex-row form keeps the tableau at n + 1 rows however large
        // the family is; lambda* is its multiplier vector.
        auto solution = solve_lp_exact(delta_dual_program(n, family));
        DeltaResult result;
        result.delta = solution.optimum;
        result.lambda_star.weights.assign(solution.dual.begin(), solution.dual.begin() + n);
        result.lp = record(solution);
        return result;
    }

    auto construct_mu(const EdgeColouredGraph & g, const CliqueFamily & family, const Rational & delta) -> MuResult
    {
        if (family.cliques.empty())
            throw InvalidArgument{ "construct_mu needs a non-empty family" };
        auto solution = solve_lp_exact(packing_program(g.vertex_count(), family, delta));
        if (solution.optimum < 1)
            throw violation("packing LP optimum " + to_string(solution.optimum) + " is below 1 for "
                + colour_label(family.colour) + " with delta " + to_string(delta));
        MuResult result;
        result.packing_optimum = solution.optimum;
        result.mu.weights.reserve(solution.primal.size());
        for (const auto & x : solution.primal)
            result.mu.weights.emplace_back(x / solution.optimum);
        result.lp = record(solution);
        return result;
    }

    auto vertex_masses(size_t n, const CliqueFamily & family, const FamilyMeasure & mu) -> vector<Rational>
    {
        if (mu.weights.size() != family.cliques.size())
            throw InvalidArgument{ "family measure does not match the family" };
        vector<Rational> mass(n);
        for (size_t x = 0; x < family.cliques.size(); ++x)
            if (mu.weights[x] != 0)
                for (auto v : family.cliques[x])
                    mass.at(v) += mu.weights[x];
        return mass;
    }

    auto check_pairwise_intersections(const CliqueFamily & first, const CliqueFamily & second) -> bool
    {
        if (first.colour == second.colour)
            throw InvalidArgument{ "pairwise intersection check needs two different colours" };
        for (const auto & x : first.cliques)
            for (const auto & y : second.cliques)
                if (intersection_size(x, y) > 1)
                    return false;
        return true;
    }

    auto two_colour_bound(uint64_t k1, uint64_t k2, const Rational & delta1, const Rational & delta2) -> TwoColourBound
    {
        if (k1 < 1 || k2 < 1)
            throw InvalidArgument{ "clique sizes must be at least 1" };
        check_deltas(delta1, delta2);

        Rational a{ Integer{ k1 - 1 } }, b{ Integer{ k2 - 1 } };
        // The minimiser s = sqrt(a)/(sqrt(a)+sqrt(b)) satisfies delta1 <= s iff
        // delta1^2 b <= (1-delta1)^2 a, and s <= 1 - delta2 iff
        // delta2^2 a <= (1-delta2)^2 b.
        bool above_low = delta1 * delta1 * b <= (1 - delta1) * (1 - delta1) * a;
        bool below_high = delta2 * delta2 * a <= (1 - delta2) * (1 - delta2) * b;

        TwoColourBound bound;
        if (above_low && below_high) {
            bound.at_stationary_point = true;
            uint64_t ia = k1 - 1, ib = k2 - 1;
            if (ia == 0 || ib == 0) {
                bound.exact = Rational{ a + b };
                bound.closed_form = to_string(*bound.exact);
                bound.ceiling = ceil(*bound.exact);
                return bound;
            }
            Integer disc = Integer{ 4 } * ia * ib;
            Integer root = sqrt(disc);
            bool square = root * root == disc;
            bound.ceiling = Integer{ ia + ib } + root + (square ? 0 : 1);
            if (square)
                bound.exact = Rational{ Integer{ ia + ib } + root };
            bound.closed_form = two_colour_surd(k1, k2);
            return bound;
        }

        Rational split = above_low ? Rational{ 1 - delta2 } : delta1;
        bound.exact = split_value(a, b, split);
        bound.closed_form = to_string(*bound.exact);
        bound.ceiling = ceil(*bound.exact);
        return bound;
    }

    auto endpoint_split_bound(uint64_t k1, uint64_t k2, const Rational & delta1, const Rational & delta2) -> Rational
    {
        check_deltas(delta1, delta2);
        Rational a{ Integer{ k1 - 1 } }, b{ Integer{ k2 - 1 } };
        return std::max(split_value(a, b, delta1), split_value(a, b, Rational{ 1 - delta2 }));
    }

    auto support_clique_check(const EdgeColouredGraph & g, Colour c, const VertexMeasure & lambda, const Rational & delta) -> bool
    {
        if (delta <= Rational{ 1, 2 })
            return true;
        VertexSet support;
        for (Vertex v = 0; v < lambda.weights.size(); ++v)
            if (lambda.weights[v] > 0)
                support.push_back(v);
        return g.is_monochromatic_clique(support, c);
    }

    auto certify(const EdgeColouredGraph & g, const vector<Target> & targets, FamilyPolicy policy, size_t family_limit) -> Certificate
    {
        auto n = g.vertex_count();
        auto r = g.colour_count();
        if (targets.size() != r)
            throw InvalidArgument{ "certification needs one target per colour (" + to_string(r) + "), got " + to_string(targets.size()) };
        auto ordered = targets;
        std::sort(ordered.begin(), ordered.end(), [] (const Target & x, const Target & y) { return x.colour < y.colour; });
        if (r >= 3)
            for (const auto & t : ordered)
                if (t.k != ordered.front().k)
                    throw InvalidArgument{ "with three or more colours every target must share one clique size" };

        auto report = verify_enabling(g, ordered);
        if (! report.ok)
            throw InvalidArgument{ "graph is not enabling for the targets: vertex " + to_string(report.first_failure->first)
                + " has no clique in " + colour_label(report.first_failure->second) };

        Certificate cert;
        cert.n = n;
        cert.policy = policy;
        Rational n_q{ Integer{ n } };

        // Every family is built before any LP is solved, so an oversized
        // family fails fast.
        vector<CliqueFamily> families;
        for (const auto & t : ordered)
            families.push_back(choose_family(g, t.colour, t.k, policy, family_limit));

        for (size_t i = 0; i < ordered.size(); ++i) {
            const auto & t = ordered[i];
            ColourCertificate cc;
            cc.colour = t.colour;
            cc.family = std::move(families[i]);

            auto d = compute_delta(g, cc.family);
            cc.delta = d.delta;
            cc.lambda_star = std::move(d.lambda_star);
            cc.delta_lp = d.lp;
            cc.alpha = 1 / cc.delta;

            Rational lambda_total = sum(cc.lambda_star.weights);
            if (lambda_total != 1)
                throw violation("lambda* for " + colour_label(t.colour) + " has total mass " + to_string(lambda_total));
            Rational smallest = cc.lambda_star.of(cc.family.cliques.front());
            for (const auto & clique : cc.family.cliques)
                smallest = std::min(smallest, cc.lambda_star.of(clique));
            if (smallest != cc.delta)
                throw violation("min_C lambda*(C) = " + to_string(smallest) + " differs from delta = " + to_string(cc.delta)
                    + " for " + colour_label(t.colour));

            Rational uniform{ Integer{ t.k }, Integer{ n } };
            uniform.canonicalize();
            if (cc.delta < uniform)
                throw violation("delta = " + to_string(cc.delta) + " is below k/n = " + to_string(uniform)
                    + " for " + colour_label(t.colour));

            auto mu = construct_mu(g, cc.family, cc.delta);
            cc.mu = std::move(mu.mu);
            cc.packing_optimum = mu.packing_optimum;
            cc.packing_lp = mu.lp;
            cc.mu_mass = vertex_masses(n, cc.family, cc.mu);

            auto heaviest = max_of(cc.mu_mass);
            if (heaviest > cc.delta)
                throw violation("mu puts mass " + to_string(heaviest) + " on a vertex, above delta = " + to_string(cc.delta)
                    + " for " + colour_label(t.colour));
            auto mass_total = sum(cc.mu_mass);
            if (mass_total != Rational{ Integer{ t.k } })
                throw violation("per-vertex mu masses sum to " + to_string(mass_total) + ", expected k = " + to_string(t.k)
                    + " for " + colour_label(t.colour));

            cc.support_clique = support_clique_check(g, t.colour, cc.lambda_star, cc.delta);
            if (! cc.support_clique)
                throw violation("delta = " + to_string(cc.delta) + " > 1/2 but supp(lambda*) is not a clique of "
                    + colour_label(t.colour));

            cert.colours.push_back(std::move(cc));
        }

        for (size_t i = 0; i < cert.colours.size(); ++i)
            for (size_t j = i + 1; j < cert.colours.size(); ++j) {
                const auto & x = cert.colours[i];
                const auto & y = cert.colours[j];
                PairCheck p{ x.colour, y.colour, Rational{ x.delta + y.delta }, dot(x.mu_mass, y.mu_mass),
                    check_pairwise_intersections(x.family, y.family) };
                if (! p.intersections_ok)
                    throw violation("cliques of colours " + to_string(x.colour) + " and " + to_string(y.colour)
                        + " share more than one vertex");
                if (p.delta_sum > 1)
                    throw violation("delta_" + to_string(x.colour) + " + delta_" + to_string(y.colour) + " = "
                        + to_string(p.delta_sum) + " exceeds 1");
                if (p.mu_product > 1)
                    throw violation("sum_v mu_" + to_string(x.colour) + "(v) mu_" + to_string(y.colour) + "(v) = "
                        + to_string(p.mu_product) + " exceeds 1");
                cert.pairs.push_back(std::move(p));
            }

        if (r == 2) {
            const auto & red = cert.colours[0];
            const auto & blue = cert.colours[1];
            auto k1 = ordered[0].k, k2 = ordered[1].k;
            Rational kk1{ Integer{ k1 } }, kk2{ Integer{ k2 } };
            cert.bound_at_deltas = Rational{ kk1 / red.delta + kk2 / blue.delta - 1 / (red.delta * blue.delta) };
            if (*cert.bound_at_deltas > n_q)
                throw violation("k1/delta1 + k2/delta2 - 1/(delta1 delta2) = " + to_string(*cert.bound_at_deltas)
                    + " exceeds n = " + to_string(n));
            cert.endpoint_bound = endpoint_split_bound(k1, k2, red.delta, blue.delta);
            if (*cert.endpoint_bound > n_q)
                throw violation("split bound at an interval endpoint = " + to_string(*cert.endpoint_bound)
                    + " exceeds n = " + to_string(n));
            cert.split_bound = two_colour_bound(k1, k2, red.delta, blue.delta);
            if (cert.split_bound->ceiling > n)
                throw violation("two-colour bound " + cert.split_bound->closed_form + " exceeds n = " + to_string(n));
            cert.lower_bound = cert.split_bound->ceiling;
        }
        else if (r >= 3) {
            Rational total = 0;
            for (const auto & cc : cert.colours)
                total += cc.alpha;
            cert.alpha_bar = Rational{ total / Rational{ Integer{ r } } };
            if (*cert.alpha_bar < 2)
                throw violation("mean of 1/delta_i = " + to_string(*cert.alpha_bar) + " is below 2");
            cert.f_at_alpha_bar = f_max(r, ordered.front().k, *cert.alpha_bar);
            if (*cert.f_at_alpha_bar > n_q)
                throw violation("f(alpha_bar) = " + to_string(*cert.f_at_alpha_bar) + " exceeds n = " + to_string(n));
            cert.lower_bound = ceil(*cert.f_at_alpha_bar);
        }
        else
            cert.lower_bound = ordered.front().k;

        return cert;
    }

    auto to_json(const Certificate & c) -> json
    {
        json colours = json::array();
        for (const auto & cc : c.colours)
            colours.push_back({
                    { "colour", cc.colour },
                    { "k", cc.family.k },
                    { "family", cc.family.cliques },
                    { "delta", to_json(cc.delta) },
                    { "alpha", to_json(cc.alpha) },
                    { "lambda", rationals_json(cc.lambda_star.weights) },
                    { "mu", rationals_json(cc.mu.weights) },
                    { "mu_mass", rationals_json(cc.mu_mass) },
                    { "packing_optimum", to_json(cc.packing_optimum) },
                    { "support_clique", cc.support_clique },
                    { "lp", { { "delta", lp_json(cc.delta_lp) }, { "packing", lp_json(cc.packing_lp) } } }
                    });

        json pairs = json::array();
        for (const auto & p : c.pairs)
            pairs.push_back({
                    { "colours", { p.first, p.second } },
                    { "delta_sum", to_json(p.delta_sum) },
                    { "mu_product", to_json(p.mu_product) },
                    { "intersections_ok", p.intersections_ok }
                    });

        json bound{ { "lower_bound", c.lower_bound.get_str() } };
        if (c.split_bound) {
            bound["kind"] = "two-colour";
            bound["split_bound"] = c.split_bound->closed_form;
            bound["split_bound_exact"] = c.split_bound->exact ? to_json(*c.split_bound->exact) : json(nullptr);
            bound["at_stationary_point"] = c.split_bound->at_stationary_point;
            bound["endpoint_bound"] = to_json(*c.endpoint_bound);
            bound["bound_at_deltas"] = to_json(*c.bound_at_deltas);
        }
        else if (c.alpha_bar) {
            bound["kind"] = "multicolour";
            bound["alpha_bar"] = to_json(*c.alpha_bar);
            bound["f_at_alpha_bar"] = to_json(*c.f_at_alpha_bar);
        }
        else
            bound["kind"] = "single-colour";

        return json{
            { "n", c.n },
            { "r", c.colours.size() },
            { "policy", policy_name(c.policy) },
            { "colours", colours },
            { "pairs", pairs },
            { "bound", bound }
        };
    }

    auto check_certificate(const EdgeColouredGraph & g, const json & doc) -> vector<string>
    {
        vector<string> problems;
        auto n = g.vertex_count();
        auto problem = [&] (const string & s) { problems.push_back(s); };

        try {
            if (doc.at("n").get<size_t>() != n)
                problem("certificate is for n = " + to_string(doc.at("n").get<size_t>()) + ", graph has " + to_string(n));
            const auto & colours = doc.at("colours");
            if (colours.size() != g.colour_count())
                problem("certificate covers " + to_string(colours.size()) + " colours, graph has " + to_string(g.colour_count()));

            struct Parsed
            {
                CliqueFamily family;
                Rational delta;
                vector<Rational> mass;
            };
            vector<Parsed> parsed;
            std::set<Colour> seen;

            for (const auto & cj : colours) {
                Parsed p;
                p.family.colour = cj.at("colour").get<Colour>();
                p.family.k = cj.at("k").get<size_t>();
                auto label = colour_label(p.family.colour) + ": ";
                if (p.family.colour >= g.colour_count() || ! seen.insert(p.family.colour).second) {
                    problem(label + "colour is out of range or repeated");
                    continue;
                }
                p.family.cliques = cj.at("family").get<vector<VertexSet>>();
                p.delta = rational_from_json(cj.at("delta"));

                vector<bool> covered(n, false);
                bool well_formed = true;
                for (const auto & clique : p.family.cliques) {
                    if (clique.size() != p.family.k || ! is_valid_vertex_set(clique, n)
                            || ! g.is_monochromatic_clique(clique, p.family.colour)) {
                        problem(label + "family contains a set that is not a size-k monochromatic clique");
                        well_formed = false;
                        break;
                    }
                    for (auto v : clique)
                        covered[v] = true;
                }
                if (! well_formed)
                    continue;
                if (std::find(covered.begin(), covered.end(), false) != covered.end())
                    problem(label + "family does not cover every vertex");
                auto sorted = p.family.cliques;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                    problem(label + "family lists a clique twice");

                VertexMeasure lambda;
                for (const auto & w : cj.at("lambda"))
                    lambda.weights.push_back(rational_from_json(w));
                if (lambda.weights.size() != n || std::any_of(lambda.weights.begin(), lambda.weights.end(),
                            [] (const Rational & x) { return x < 0; }) || sum(lambda.weights) != 1)
                    problem(label + "lambda is not a probability measure on the vertices");
                else if (! p.family.cliques.empty()) {
                    Rational smallest = lambda.of(p.family.cliques.front());
                    for (const auto & clique : p.family.cliques)
                        smallest = std::min(smallest, lambda.of(clique));
                    if (smallest != p.delta)
                        problem(label + "min_C lambda(C) = " + to_string(smallest) + " but delta = " + to_string(p.delta));
                    if (! support_clique_check(g, p.family.colour, lambda, p.delta))
                        problem(label + "delta > 1/2 but the support of lambda is not a clique");
                }

                FamilyMeasure mu;
                for (const auto & w : cj.at("mu"))
                    mu.weights.push_back(rational_from_json(w));
                if (mu.weights.size() != p.family.cliques.size() || std::any_of(mu.weights.begin(), mu.weights.end(),
                            [] (const Rational & x) { return x < 0; }) || sum(mu.weights) != 1) {
                    problem(label + "mu is not a probability measure on the family");
                    continue;
                }
                p.mass = vertex_masses(n, p.family, mu);
                // mu with every vertex mass <= delta bounds min_C lambda(C) by
                // delta for every lambda, so together with lambda it proves
                // delta is the exact optimum.
                if (max_of(p.mass) > p.delta)
                    problem(label + "some vertex carries mu-mass above delta");
                if (sum(p.mass) != Rational{ Integer{ p.family.k } })
                    problem(label + "per-vertex mu masses do not sum to k");
                Rational uniform{ Integer{ p.family.k }, Integer{ n } };
                uniform.canonicalize();
                if (p.delta < uniform)
                    problem(label + "delta is below k/n");
                parsed.push_back(std::move(p));
            }

            for (size_t i = 0; i < parsed.size(); ++i)
                for (size_t j = i + 1; j < parsed.size(); ++j) {
                    const auto & x = parsed[i];
                    const auto & y = parsed[j];
                    auto pair = "colours " + to_string(x.family.colour) + "," + to_string(y.family.colour) + ": ";
                    if (x.delta + y.delta > 1)
                        problem(pair + "delta sum exceeds 1");
                    if (dot(x.mass, y.mass) > 1)
                        problem(pair + "sum of mu mass products exceeds 1");
                    if (! check_pairwise_intersections(x.family, y.family))
                        problem(pair + "two cliques share more than one vertex");
                }

            if (problems.empty()) {
                std::sort(parsed.begin(), parsed.end(), [] (const Parsed & x, const Parsed & y) {
                        return x.family.colour < y.family.colour; });
                Integer expected;
                if (parsed.size() == 2) {
                    auto b = two_colour_bound(parsed[0].family.k, parsed[1].family.k, parsed[0].delta, parsed[1].delta);
                    expected = b.ceiling;
                }
                else if (parsed.size() >= 3) {
                    Rational total = 0;
                    for (const auto & p : parsed)
                        total += 1 / p.delta;
                    Rational alpha_bar = total / Rational{ Integer{ parsed.size() } };
                    if (alpha_bar < 2)
                        problem("mean of 1/delta_i is below 2");
                    expected = ceil(f_max(parsed.size(), parsed.front().family.k, alpha_bar));
                }
                else if (parsed.size() == 1)
                    expected = parsed.front().family.k;
                if (expected > n)
                    problem("derived lower bound " + expected.get_str() + " exceeds n");
                if (doc.at("bound").at("lower_bound").get<string>() != expected.get_str())
                    problem("stated lower bound " + doc.at("bound").at("lower_bound").get<string>()
                        + " differs from the recomputed " + expected.get_str());
            }
        }
        catch (const json::exception & e) {
            problem(string{ "malformed certificate: " } + e.what());
        }
        catch (const InvalidArgument & e) {
            problem(string{ "malformed certificate: " } + e.what());
        }
        catch (const LemmaViolation & e) {
            problem(e.what());
        }
        return problems;
    }
}
