#include <enabling/cli.hh>
#include <enabling/bounds.hh>
#include <enabling/certificates.hh>
#include <enabling/cliques.hh>
#include <enabling/constructions.hh>
#include <enabling/lp.hh>
#include <enabling/search.hh>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

using std::istream;
using std::optional;
using std::ostream;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

using nlohmann::json;

namespace enabling
{
    namespace
    {
        auto ansi_enabled() -> bool
        {
            auto value = std::getenv("ENABLE_COLOR");
            return value && *value && string{ value } != "0";
        }

        auto status(ostream & err, bool good, const string & message) -> void
        {
            if (ansi_enabled())
                err << (good ? "\033[32m" : "\033[31m") << message << "\033[0m\n";
            else
                err << message << '\n';
        }

        auto read_text(const string & path, istream & in) -> string
        {
            std::stringstream buffer;
            if (path == "-")
                buffer << in.rdbuf();
            else {
                std::ifstream file{ path };
                if (! file)
                    throw InvalidArgument{ "cannot open '" + path + "'" };
                buffer << file.rdbuf();
            }
            return buffer.str();
        }

        auto parse_json(const string & text, const string & what) -> json
        {
            try {
                return json::parse(text);
            }
            catch (const json::parse_error & e) {
                throw InvalidArgument{ "malformed " + what + " JSON: " + e.what() };
            }
        }

        auto write_text(const string & path, ostream & out, const string & text) -> void
        {
            if (path.empty() || path == "-")
                out << text;
            else {
                std::ofstream file{ path };
                if (! file)
                    throw InvalidArgument{ "cannot write '" + path + "'" };
                file << text;
            }
        }

        auto parse_params(const string & text) -> vector<uint64_t>
        {
            vector<uint64_t> params;
            std::stringstream ss{ text };
            string item;
            while (std::getline(ss, item, ',')) {
                try {
                    size_t used = 0;
                    if (item.empty() || item.front() == '-')
                        throw std::invalid_argument{ item };
                    params.push_back(std::stoull(item, &used));
                    if (used != item.size())
                        throw std::invalid_argument{ item };
                }
                catch (const std::logic_error &) {
                    throw InvalidArgument{ "malformed parameter '" + item + "' in --params" };
                }
            }
            return params;
        }
    }

    auto palette_colour(Colour c) -> string
    {
        static const char * const fixed[] = { "red", "blue", "green", "yellow" };
        if (c < 4)
            return fixed[c];
        auto hue = (uint64_t{ c - 4 } * 618 + 100) % 1000;
        std::ostringstream s;
        s << "0." << std::setw(3) << std::setfill('0') << hue << " 0.850 0.850";
        return s.str();
    }

    auto to_dot(const EdgeColouredGraph & g) -> string
    {
        std::ostringstream s;
        s << "graph G {\n  node [shape=circle];\n";
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            s << "  " << v << ";\n";
        size_t i = 0;
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = u + 1; v < g.vertex_count(); ++v, ++i)
                s << "  " << u << " -- " << v << " [color=\"" << palette_colour(g.colours()[i]) << "\"];\n";
        s << "}\n";
        return s.str();
    }

    auto run(const vector<string> & args, istream & in, ostream & out, ostream & err) -> int
    {
        CLI::App app{ "Edge-coloured enabling graphs: constructions, verification, LP certificates and exhaustive search", "enabling" };
        app.require_subcommand(1);

        string family, params_text, output, graph_path, targets_text, policy_text = "all", certificate_path;
        unsigned jobs = 1, shard_bits = 0;
        size_t family_limit = default_family_limit;
        vector<uint64_t> two_colour, multicolour;
        optional<uint64_t> k_of_n;
        size_t k1 = 0, k2 = 0, n = 0, n_max = 0;
        bool min_n_mode = false, no_prune = false, trusted = false, timing = false, quiet = false;
        string witness_graph;

        auto construct_cmd = app.add_subcommand("construct", "Emit one of the explicit constructions as graph JSON");
        construct_cmd->add_option("--family", family, "p4 | extremal | blocks | prime")->required()
            ->check(CLI::IsMember({ "p4", "extremal", "blocks", "prime" }));
        construct_cmd->add_option("--params", params_text, "comma-separated: n | k1,k2 | r,k | p")->required();
        construct_cmd->add_option("--output,-o", output, "output file (default stdout)");

        auto verify_cmd = app.add_subcommand("verify", "Check that every vertex lies in the target cliques");
        verify_cmd->add_option("--graph", graph_path, "graph JSON file, - for stdin")->required();
        verify_cmd->add_option("--targets", targets_text, "colour:k,colour:k,...")->required();
        verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

        auto certify_cmd = app.add_subcommand("certify", "Compute and check the exact LP certificate");
        certify_cmd->add_option("--graph", graph_path, "graph JSON file, - for stdin")->required();
        certify_cmd->add_option("--targets", targets_text, "colour:k for every colour")->required();
        auto policy_opt = certify_cmd->add_option("--policy", policy_text,
                "clique family: all | lex (default all, falling back to lex when a family exceeds --family-limit)")
            ->check(CLI::IsMember({ "all", "lex" }));
        certify_cmd->add_option("--family-limit", family_limit, "largest all-cliques family allowed");
        certify_cmd->add_option("--output,-o", output, "output file (default stdout)");

        auto check_cmd = app.add_subcommand("check", "Re-verify a certificate against a graph without solving");
        check_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
        check_cmd->add_option("--certificate", certificate_path, "certificate JSON file")->required();

        auto bound_cmd = app.add_subcommand("bound", "Closed-form bounds");
        auto two_opt = bound_cmd->add_option("--two-colour", two_colour, "k1 k2")->expected(2);
        auto multi_opt = bound_cmd->add_option("--multicolour", multicolour, "r k")->expected(2);
        auto kn_opt = bound_cmd->add_option("--k-of-n", k_of_n, "n: largest k with a k-enabling graph on n vertices");
        two_opt->excludes(multi_opt)->excludes(kn_opt);
        multi_opt->excludes(kn_opt);
        bound_cmd->require_option(1);

        auto search_cmd = app.add_subcommand("search", "Exhaustive search over labelled graphs");
        search_cmd->add_option("--k1", k1, "red clique size")->required()->check(CLI::PositiveNumber);
        search_cmd->add_option("--k2", k2, "blue independent-set size")->required()->check(CLI::PositiveNumber);
        auto n_opt = search_cmd->add_option("--n", n, "vertex count (existence mode)");
        auto min_opt = search_cmd->add_flag("--min-n", min_n_mode, "find the least n up to --n-max");
        auto nmax_opt = search_cmd->add_option("--n-max", n_max, "largest n to try in --min-n mode");
        min_opt->needs(nmax_opt)->excludes(n_opt);
        search_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
        search_cmd->add_option("--shard-bits", shard_bits, "split the mask space into 2^b shards");
        search_cmd->add_flag("--no-prune", no_prune, "disable degree-window pruning");
        search_cmd->add_flag("--trusted-bounds", trusted, "skip n below the closed-form lower bound");
        search_cmd->add_flag("--timing", timing, "include elapsed time in the report");
        search_cmd->add_flag("--quiet", quiet, "no progress lines");
        search_cmd->add_option("--witness-graph", witness_graph, "write the witness as graph JSON to this file");

        auto dot_cmd = app.add_subcommand("export-dot", "Render a graph as Graphviz DOT");
        dot_cmd->add_option("--graph", graph_path, "graph JSON file, - for stdin")->required();
        dot_cmd->add_option("--output,-o", output, "output file (default stdout)");

        try {
            vector<string> reversed{ args.rbegin(), args.rend() };
            app.parse(std::move(reversed));
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        try {
            auto load_graph = [&] { return parse_graph(read_text(graph_path, in)); };

            if (construct_cmd->parsed()) {
                auto c = construct(family, parse_params(params_text));
                write_text(output, out, to_json(c).dump() + "\n");
                return exit_ok;
            }

            if (verify_cmd->parsed()) {
                auto g = load_graph();
                auto report = verify_enabling(g, parse_targets(targets_text), jobs);
                out << to_json(report).dump() << '\n';
                if (report.ok)
                    status(err, true, "enabling: every vertex has a witness for every target");
                else
                    status(err, false, "not enabling: vertex " + to_string(report.first_failure->first)
                        + " has no clique in colour " + to_string(report.first_failure->second));
                return report.ok ? exit_ok : exit_negative;
            }

            if (certify_cmd->parsed()) {
                auto g = load_graph();
                auto targets = parse_targets(targets_text);
                // Not enabling is a negative answer, not a usage error.
                auto report = verify_enabling(g, targets);
                if (! report.ok) {
                    status(err, false, "not enabling: vertex " + to_string(report.first_failure->first)
                        + " has no clique in colour " + to_string(report.first_failure->second));
                    return exit_negative;
                }
                auto policy = policy_text == "lex" ? FamilyPolicy::per_vertex_lex : FamilyPolicy::all_cliques;
                auto cert = [&] {
                    try {
                        return certify(g, targets, policy, family_limit);
                    }
                    catch (const FamilyTooLarge & e) {
                        if (policy_opt->count() > 0)
                            throw;
                        err << e.what() << "; using per-vertex-lex families\n";
                        return certify(g, targets, FamilyPolicy::per_vertex_lex, family_limit);
                    }
                }();
                write_text(output, out, to_json(cert).dump() + "\n");
                status(err, true, "certificate holds; derived lower bound n >= " + cert.lower_bound.get_str());
                return exit_ok;
            }

            if (check_cmd->parsed()) {
                auto g = load_graph();
                auto doc = parse_json(read_text(certificate_path, in), "certificate");
                auto problems = check_certificate(g, doc);
                json result{ { "ok", problems.empty() }, { "problems", problems } };
                out << result.dump() << '\n';
                status(err, problems.empty(), problems.empty() ? "certificate verified" : "certificate rejected");
                return problems.empty() ? exit_ok : exit_negative;
            }

            if (bound_cmd->parsed()) {
                json j;
                if (! two_colour.empty())
                    j = to_json(two_colour_report(two_colour[0], two_colour[1]));
                else if (! multicolour.empty())
                    j = to_json(multicolour_report(multicolour[0], multicolour[1]));
                else
                    j = json{ { "n", *k_of_n }, { "k_of_n", feige_k_of_n(*k_of_n) } };
                out << j.dump() << '\n';
                return exit_ok;
            }

            if (search_cmd->parsed()) {
                SearchOptions options;
                options.prune = ! no_prune;
                options.shard_bits = shard_bits;
                options.jobs = jobs;
                if (! quiet)
                    options.progress = [&] (uint64_t count) { err << "search: " << count << " graphs enumerated\n"; };

                if (min_n_mode) {
                    auto result = min_n(k1, k2, n_max, options, trusted);
                    out << to_json(result, n_max, timing).dump() << '\n';
                    if (result.n && ! witness_graph.empty()) {
                        const auto & last = result.reports.back();
                        write_text(witness_graph, out, serialise_graph(graph_from_mask(last.n, *last.witness_mask)) + "\n");
                    }
                    status(err, result.n.has_value(), result.n ? "least n = " + to_string(*result.n)
                        : "no enabling graph up to n = " + to_string(n_max));
                    return result.n ? exit_ok : exit_negative;
                }
                if (n_opt->count() == 0)
                    throw InvalidArgument{ "search needs --n, or --min-n with --n-max" };
                auto report = exists_enabling(n, k1, k2, options);
                out << to_json(report, timing).dump() << '\n';
                if (report.found && ! witness_graph.empty())
                    write_text(witness_graph, out, serialise_graph(graph_from_mask(n, *report.witness_mask)) + "\n");
                status(err, report.found, report.found ? "found" : "no enabling graph on " + to_string(n) + " vertices");
                return report.found ? exit_ok : exit_negative;
            }

            if (dot_cmd->parsed()) {
                write_text(output, out, to_dot(load_graph()));
                return exit_ok;
            }
        }
        catch (const LemmaViolation & e) {
            status(err, false, string{ "internal invariant falsified: " } + e.what());
            return exit_internal;
        }
        catch (const LpInfeasible & e) {
            status(err, false, string{ "internal LP failure: " } + e.what());
            return exit_internal;
        }
        catch (const LpUnbounded & e) {
            status(err, false, string{ "internal LP failure: " } + e.what());
            return exit_internal;
        }
        catch (const InvalidArgument & e) {
            status(err, false, string{ "error: " } + e.what());
            return exit_usage;
        }
        return exit_usage;
    }
}
