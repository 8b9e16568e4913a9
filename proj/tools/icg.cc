/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <icg/census.hh>
#include <icg/constructions.hh>
#include <icg/homomorphism.hh>
#include <icg/json_io.hh>
#include <icg/solver.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace icg;

using std::cerr;
using std::cout;
using std::optional;
using std::string;
using std::vector;

namespace
{
    // exit codes
    constexpr int ok = 0, negative = 1, usage = 2;

    int base = 0;   // presentation offset from --one-based

    auto slurp(const string & where) -> string
    {
        if (where == "-") {
            return string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        }
        std::ifstream in(where);
        if (! in)
            throw Error(ErrorKind::BadParams, "cannot read '" + where + "'");
        return string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }

    auto parse_ints(const string & text) -> vector<int>
    {
        vector<int> result;
        std::stringstream in(text);
        string item;
        while (std::getline(in, item, ','))
            try {
                result.push_back(std::stoi(item));
            }
            catch (const std::exception &) {
                throw Error(ErrorKind::BadParams, "expected an integer, got '" + item + "'");
            }
        return result;
    }

    auto family_graph(const string & name, const vector<int> & params) -> Graph
    {
        auto f = parse_family(name);
        if (! f)
            throw Error(ErrorKind::BadParams, "unknown family '" + name + "'");
        return gen_family(*f, params);
    }

    /// "-" is stdin, an existing path is read, "family:a,b" is generated, anything else is graph6.
    auto resolve_graph(const string & arg) -> Graph
    {
        if (arg == "-" || std::filesystem::exists(arg))
            return parse_graph_text(slurp(arg));
        if (auto colon = arg.find(':') ; colon != string::npos && parse_family(arg.substr(0, colon)))
            return family_graph(arg.substr(0, colon), parse_ints(arg.substr(colon + 1)));
        return parse_graph6(arg);
    }

    auto read_json(const string & where) -> json
    {
        auto text = slurp(where);
        try {
            return json::parse(text);
        }
        catch (const json::exception & e) {
            throw Error(ErrorKind::MalformedJson, e.what());
        }
    }

    auto emit(const string & text, const string & out) -> void
    {
        if (out.empty() || out == "-")
            cout << text;
        else {
            std::ofstream f(out);
            if (! f)
                throw Error(ErrorKind::BadParams, "cannot write '" + out + "'");
            f << text;
        }
    }

    auto show(Incidence i) -> string
    {
        return "(" + std::to_string(i.v + base) + "," + std::to_string(i.w + base) + ")";
    }

    auto write_graph(const Graph & g, bool as_json) -> void
    {
        if (as_json)
            cout << graph_to_json(g).dump() << '\n';
        else
            cout << emit_graph6(g) << '\n';
    }

    auto write_coloring(const IncidenceColoring & c, const string & out, bool dot) -> void
    {
        emit(dot ? coloring_to_dot(c, base) : coloring_to_json(c).dump() + "\n", out);
    }

    auto identity(int n) -> vector<Vertex>
    {
        vector<Vertex> e(n);
        for (int i = 0 ; i < n ; ++i)
            e[i] = i;
        return e;
    }

    struct GraphOutput
    {
        bool graph6 = false, json = false;
    };

    auto add_graph_output(CLI::App * cmd, GraphOutput & out) -> void
    {
        auto g6 = cmd->add_flag("--graph6", out.graph6, "graph6 output (default)");
        cmd->add_flag("--json", out.json, "JSON output")->excludes(g6);
    }

    struct ColorArgs
    {
        string strategy;
        vector<int> params;
        string graph = "-", factor, hom, coloring, host_coloring, embedding, out;
        bool dot = false;
    };

    auto run_color(const ColorArgs & a) -> int
    {
        optional<IncidenceColoring> result;

        auto need_factor = [&] {
            if (a.factor.empty())
                throw Error(ErrorKind::BadParams, "--factor is required for strategy " + a.strategy);
            return resolve_graph(a.factor);
        };
        auto sub_2_hom = [&] (const Graph & g) -> optional<Homomorphism> {
            if (! a.hom.empty())
                return homomorphism_from_json(read_json(a.hom));
            return is_sub_2_permutable(g);
        };
        auto param = [&] {
            if (a.params.size() != 1)
                throw Error(ErrorKind::BadParams, "strategy " + a.strategy + " takes one integer");
            return a.params.front();
        };

        if (a.strategy == "hamming")
            result = hamming_coloring(param());
        else if (a.strategy == "hypercube")
            result = hypercube_coloring(param());
        else if (a.strategy == "prism") {
            auto g = resolve_graph(a.graph);
            auto h = sub_2_hom(g);
            if (! h) {
                cerr << "graph is not sub-2-permutable\n";
                return negative;
            }
            result = prism_coloring(g, *h);
        }
        else if (a.strategy == "peradj") {
            auto g = resolve_graph(a.graph);
            auto h = need_factor();
            auto hom = sub_2_hom(g);
            if (! hom) {
                cerr << "first factor is not sub-2-permutable\n";
                return negative;
            }
            auto d = a.coloring.empty() ? exists_adjustable(h) : optional(coloring_from_json(read_json(a.coloring)));
            if (! d) {
                cerr << "second factor has no adjustable colouring\n";
                return negative;
            }
            result = peradj_coloring(g, *hom, h, *d);
        }
        else if (a.strategy == "product-delta1") {
            auto g = resolve_graph(a.graph);
            auto h = need_factor();
            auto c = a.coloring.empty()
                ? find_incidence_coloring(g, g.max_degree() + 1).coloring
                : optional(coloring_from_json(read_json(a.coloring)));
            if (! c) {
                cerr << "first factor has no (Delta+1)-colouring\n";
                return negative;
            }
            auto d = a.host_coloring.empty()
                ? find_incidence_coloring(h, h.max_degree() + 1).coloring
                : optional(coloring_from_json(read_json(a.host_coloring)));
            if (! d) {
                cerr << "second factor has no (Delta+1)-colouring; pass --host-coloring for a regular supergraph\n";
                return negative;
            }
            auto embedding = a.embedding.empty() ? identity(h.size()) : parse_ints(a.embedding);
            result = product_coloring_delta1(g, *c, h, *d, embedding);
        }
        else if (a.strategy == "pullback") {
            auto g = resolve_graph(a.graph);
            if (a.coloring.empty())
                throw Error(ErrorKind::BadParams, "--coloring (of the target) is required for strategy pullback");
            auto target = coloring_from_json(read_json(a.coloring));
            auto hom = a.hom.empty()
                ? find_loc_inj_hom(g, plain_target(target.host()))
                : optional(homomorphism_from_json(read_json(a.hom)));
            if (! hom) {
                cerr << "no locally injective homomorphism to the target\n";
                return negative;
            }
            result = pullback_coloring(g, *hom, target);
        }
        else
            throw Error(ErrorKind::BadParams, "unknown strategy '" + a.strategy + "'");

        write_coloring(*result, a.out, a.dot);
        return ok;
    }

    struct SolveArgs
    {
        string mode, graph = "-", witness;
        optional<int> p, max, classes;
        bool as_json = false;
    };

    auto run_solve(const SolveArgs & a) -> int
    {
        auto g = resolve_graph(a.graph);

        auto report = [&] (int optimum, unsigned long long nodes, const json & witness) {
            if (a.as_json)
                cout << json{ { "optimum", optimum }, { "nodes", nodes }, { "witness", witness } }.dump() << '\n';
            else
                cout << optimum << '\n';
        };

        if (a.mode == "chi-i" || a.mode == "chi-ip") {
            SolveResult r;
            if (a.mode == "chi-i")
                r = chi_i(g, a.max);
            else {
                if (! a.p)
                    throw Error(ErrorKind::BadParams, "--p is required for mode chi-ip");
                r = chi_ip(g, *a.p, a.max);
            }
            if (! a.witness.empty())
                emit(coloring_to_json(r.witness).dump() + "\n", a.witness);
            report(r.optimum, r.nodes_explored, coloring_to_json(r.witness));
            return ok;
        }

        if (a.mode == "chromatic") {
            auto r = chromatic_number(g, a.max);
            json colours = json::array();
            for (auto c : r.colouring)
                colours.push_back(c + base);
            report(r.optimum, r.nodes_explored, colours);
            return ok;
        }

        if (a.mode == "adjustable") {
            auto r = exists_adjustable(g);
            if (! r) {
                cout << "none\n";
                return negative;
            }
            auto pairs = free_color_pairs(*r);
            cout << "free " << pairs.front().first + base << " " << pairs.front().second + base << '\n';
            if (! a.witness.empty())
                emit(coloring_to_json(*r).dump() + "\n", a.witness);
            return ok;
        }

        if (a.mode == "dom-partition") {
            int classes = a.classes.value_or(g.max_degree() + 1);
            auto r = dominating_partition(g, classes);
            if (! r) {
                cout << "none\n";
                return negative;
            }
            for (auto & cls : *r)
                for (auto & v : cls)
                    v += base;
            cout << partition_to_json(*r).dump() << '\n';
            return ok;
        }

        throw Error(ErrorKind::BadParams, "unknown mode '" + a.mode + "'");
    }

    struct VerifyArgs
    {
        string input = "-";
        optional<int> p, expect_palette;
    };

    auto run_verify(const VerifyArgs & a) -> int
    {
        auto c = coloring_from_json(read_json(a.input));
        auto verdict = verify_coloring(c);
        if (auto v = std::get_if<Violation>(&verdict)) {
            cout << "conflict " << show(v->first) << " " << show(v->second)
                << " colour " << c.color(v->first.v, v->first.w) + base << '\n';
            return negative;
        }
        if (a.expect_palette && c.palette_size() != *a.expect_palette) {
            cout << "palette " << c.palette_size() << ", expected " << *a.expect_palette << '\n';
            return negative;
        }
        if (a.p && ! verify_kp(c, *a.p)) {
            for (Vertex v = 0 ; v < c.host().size() ; ++v)
                if (int(spectrum(c, v).s1.size()) > *a.p) {
                    cout << "vertex " << v + base << " sees " << spectrum(c, v).s1.size() << " incoming colours\n";
                    break;
                }
            return negative;
        }
        cout << "valid palette " << c.palette_size() << " used " << c.colors_used() << '\n';
        return ok;
    }

    struct HomArgs
    {
        string target, source = "-", target_graph;
        optional<int> k;
    };

    auto run_hom(const HomArgs & a) -> int
    {
        auto g = resolve_graph(a.source);
        TargetGraph target;
        if (a.target == "kminus" || a.target == "kloop") {
            if (! a.k)
                throw Error(ErrorKind::BadParams, "--k is required for target " + a.target);
            target = a.target == "kminus" ? kminus_target(*a.k) : kloop_target(*a.k);
        }
        else if (a.target == "graph") {
            if (a.target_graph.empty())
                throw Error(ErrorKind::BadParams, "--target-graph is required for target graph");
            target = plain_target(resolve_graph(a.target_graph));
        }
        else
            throw Error(ErrorKind::BadParams, "unknown target '" + a.target + "'");

        auto h = find_loc_inj_hom(g, target);
        if (! h) {
            cout << "none\n";
            return negative;
        }
        for (auto & t : h->map)
            t += base;
        cout << homomorphism_to_json(*h).dump() << '\n';
        return ok;
    }

    struct CensusArgs
    {
        string input = "-", predicates, report;
        int jobs = default_jobs();
        bool timing = false;
    };

    auto run_census(const CensusArgs & a) -> int
    {
        auto preds = parse_predicates(a.predicates);
        vector<string> lines;
        if (a.input == "-")
            lines = read_lines(std::cin);
        else {
            std::ifstream in(a.input);
            if (! in)
                throw Error(ErrorKind::BadParams, "cannot read '" + a.input + "'");
            lines = read_lines(in);
        }

        auto report = census(lines, preds, a.jobs);
        std::ostringstream text;
        write_census_report(text, report, preds, a.timing);
        emit(text.str(), a.report);
        if (! a.report.empty() && a.report != "-")
            cout << census_summary_to_json(report.summary, preds).dump() << '\n';
        return ok;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Incidence colourings: generate, construct, solve, verify." };
    app.require_subcommand(1);
    bool one_based = false;
    app.add_flag("--one-based", one_based, "print vertices and colours from 1 (text and DOT output only)");

    // gen
    string family;
    vector<int> family_params;
    GraphOutput gen_out;
    auto gen = app.add_subcommand("gen", "generate a graph from a named family");
    gen->add_option("--family", family, "cycle, path, complete, complete_bipartite, hypercube, k_minus")->required();
    gen->add_option("params", family_params, "family parameters");
    add_graph_output(gen, gen_out);

    // product
    string left, right;
    GraphOutput product_out;
    auto product = app.add_subcommand("product", "cartesian product of two graphs");
    product->add_option("A", left, "first factor (file, '-', family:params or graph6)")->required();
    product->add_option("B", right, "second factor")->required();
    add_graph_output(product, product_out);

    // color
    ColorArgs color_args;
    auto color = app.add_subcommand("color", "build a colouring with one of the constructions");
    color->add_option("--strategy", color_args.strategy, "hamming, hypercube, prism, product-delta1, peradj, pullback")->required()
        ->check(CLI::IsMember({ "hamming", "hypercube", "prism", "product-delta1", "peradj", "pullback" }));
    color->add_option("params", color_args.params, "integer parameter for hamming (m) and hypercube (n)");
    color->add_option("--graph", color_args.graph, "first factor / source graph")->capture_default_str();
    color->add_option("--factor", color_args.factor, "second factor");
    color->add_option("--hom", color_args.hom, "homomorphism JSON for the first factor");
    color->add_option("--coloring", color_args.coloring, "colouring JSON: of G (product-delta1), H (peradj) or the target (pullback)");
    color->add_option("--host-coloring", color_args.host_coloring, "colouring JSON of the regular host containing H (product-delta1)");
    color->add_option("--embedding", color_args.embedding, "comma list: vertex images of H in the host");
    color->add_option("-o,--output", color_args.out, "output file (default stdout)");
    color->add_flag("--dot", color_args.dot, "DOT output instead of JSON");

    // solve
    SolveArgs solve_args;
    auto solve = app.add_subcommand("solve", "exact solvers");
    solve->add_option("--mode", solve_args.mode, "chi-i, chi-ip, chromatic, adjustable, dom-partition")->required()
        ->check(CLI::IsMember({ "chi-i", "chi-ip", "chromatic", "adjustable", "dom-partition" }));
    solve->add_option("graph", solve_args.graph, "graph (default stdin)")->capture_default_str();
    solve->add_option("--p", solve_args.p, "incoming colour bound for chi-ip")->check(CLI::PositiveNumber);
    solve->add_option("--max", solve_args.max, "largest palette to try");
    solve->add_option("--classes", solve_args.classes, "number of classes for dom-partition (default Delta+1)");
    solve->add_option("--witness", solve_args.witness, "write the optimal colouring JSON here");
    solve->add_flag("--json", solve_args.as_json, "print optimum, node count and witness as JSON");

    // verify
    VerifyArgs verify_args;
    auto verify = app.add_subcommand("verify", "check a colouring JSON");
    verify->add_option("coloring", verify_args.input, "colouring JSON (default stdin)")->capture_default_str();
    verify->add_option("--p", verify_args.p, "also require at most P incoming colours per vertex")->check(CLI::PositiveNumber);
    verify->add_option("--expect-palette", verify_args.expect_palette, "require this palette size");

    // hom
    HomArgs hom_args;
    auto hom = app.add_subcommand("hom", "find a locally injective homomorphism");
    hom->add_option("--target", hom_args.target, "kminus, kloop, graph")->required()
        ->check(CLI::IsMember({ "kminus", "kloop", "graph" }));
    hom->add_option("--k", hom_args.k, "order of the target");
    hom->add_option("--source", hom_args.source, "source graph (default stdin)")->capture_default_str();
    hom->add_option("--target-graph", hom_args.target_graph, "target for --target graph");

    // census
    CensusArgs census_args;
    auto census_cmd = app.add_subcommand("census", "classify a graph6 corpus");
    census_cmd->add_option("--input", census_args.input, "graph6 file, one graph per line (default stdin)")->capture_default_str();
    census_cmd->add_option("--predicates", census_args.predicates, "comma list of 2-permutable, sub-2-permutable, 2-adjustable, chi-i, chi-i1")->required();
    census_cmd->add_option("--jobs", census_args.jobs, "worker threads (default ICG_JOBS or 1)")->check(CLI::PositiveNumber);
    census_cmd->add_option("--report", census_args.report, "JSON lines report file (default stdout)");
    census_cmd->add_flag("--timing", census_args.timing, "include per-graph elapsed time");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    base = one_based ? 1 : 0;

    try {
        if (*gen) {
            write_graph(family_graph(family, family_params), gen_out.json);
            return ok;
        }
        if (*product) {
            write_graph(cartesian_product(resolve_graph(left), resolve_graph(right)).graph, product_out.json);
            return ok;
        }
        if (*color)
            return run_color(color_args);
        if (*solve)
            return run_solve(solve_args);
        if (*verify)
            return run_verify(verify_args);
        if (*hom)
            return run_hom(hom_args);
        if (*census_cmd)
            return run_census(census_args);
    }
    catch (const Error & e) {
        cerr << "icg: " << e.what() << '\n';
        return usage;
    }

    return usage;
}
