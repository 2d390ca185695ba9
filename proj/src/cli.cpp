#include <idcode/cli.hpp>

#include <idcode/codes.hpp>
#include <idcode/harness.hpp>
#include <idcode/io.hpp>
#include <idcode/mincode.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace idcode {

namespace {
    int exit_code_for(Err code)
    {
        return code == Err::ConfigLimit ? 3 : 2;
    }

    std::string machine_set(const VertexSet & s)
    {
        std::string r;
        s.for_each([&](int v) {
            if (! r.empty())
                r += ',';
            r += std::to_string(v);
        });
        return r.empty() ? "-" : r;
    }

    VertexSet parse_code_list(const std::string & text, int n)
    {
        VertexSet code(n);
        if (text.empty() || text == "-")
            return code;
        std::istringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size())
                    throw std::invalid_argument(tok);
                code.add(v);
            }
            catch (const Error &) {
                throw;
            }
            catch (const std::exception &) {
                throw Error(Err::ParseError, "bad code entry '" + tok + "'");
            }
        }
        return code;
    }

    int report_verdict(const Verdict & verdict, bool machine, bool show_witness,
            std::ostream & out)
    {
        if (machine) {
            if (verdict.ok)
                out << "true\n";
            else
                out << "false " << machine_set(verdict.witness->x) << ' '
                    << machine_set(verdict.witness->y) << '\n';
        }
        else {
            out << (verdict.ok ? "yes" : "no") << '\n';
            if (! verdict.ok && show_witness)
                out << "witness X=" << verdict.witness->x.to_string()
                    << " Y=" << verdict.witness->y.to_string() << '\n';
        }
        return verdict.ok ? 0 : 1;
    }
}

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"identifying codes in digraphs: decide, construct, characterize"};
    app.name("idcode");
    app.require_subcommand(1);

    bool machine = false;
    int jobs = 0;
    app.add_flag("--machine", machine, "line-oriented machine output");
    app.add_option("--jobs", jobs, "worker threads, 0 = hardware")->check(CLI::NonNegativeNumber);

    auto make_sub = [&](const std::string & name, const std::string & desc) {
        auto sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };

    std::string input, code_text, out_path, pattern_path, builtin_name, suite, family, name;
    std::string catalog_path;
    int ell = 0, n = 0, d = 0, max_size = -1;
    double p = 0.5;
    std::uint64_t budget = default_node_budget, samples = 0, seed = 0;
    bool witness = false, all_occurrences = false;
    std::string method = "exact";

    auto admits_cmd = make_sub("admits", "does the digraph admit a (1,<=ell)-identifying code");
    admits_cmd->add_option("--input", input, "digraph file, - for stdin")->required();
    admits_cmd->add_option("--ell", ell, "largest set size to separate")->required();
    admits_cmd->add_flag("--witness", witness, "print a colliding pair when the answer is no");

    auto check_cmd = make_sub("check", "is the given vertex set a (1,<=ell)-identifying code");
    check_cmd->add_option("--input", input, "digraph file, - for stdin")->required();
    check_cmd->add_option("--code", code_text, "comma-separated vertices, empty for the empty set")->required();
    check_cmd->add_option("--ell", ell, "largest set size to separate")->required();
    check_cmd->add_flag("--witness", witness, "print a colliding pair when the answer is no");

    auto mincode_cmd = make_sub("mincode", "minimum identifying code");
    mincode_cmd->add_option("--input", input, "digraph file, - for stdin")->required();
    mincode_cmd->add_option("--ell", ell, "largest set size to separate")->required();
    mincode_cmd->add_option("--method", method, "exact or greedy")->check(CLI::IsMember({"exact", "greedy"}));
    mincode_cmd->add_option("--budget", budget, "search node budget for exact");

    auto girth_cmd = make_sub("girth", "length of a shortest directed cycle");
    girth_cmd->add_option("--input", input, "digraph file, - for stdin")->required();

    auto twins_cmd = make_sub("twins", "pairs with equal closed in-neighborhoods");
    twins_cmd->add_option("--input", input, "digraph file, - for stdin")->required();

    auto bound_cmd = make_sub("bound", "largest ell not excluded by in-degrees");
    bound_cmd->add_option("--input", input, "digraph file, - for stdin")->required();

    auto lift_cmd = make_sub("lift", "symmetric lift of an undirected graph");
    lift_cmd->add_option("--input", input, "graph file, - for stdin")->required();

    auto match_cmd = make_sub("match", "find a forbidden pattern in the digraph");
    match_cmd->add_option("--input", input, "digraph file, - for stdin")->required();
    auto builtin_opt = match_cmd->add_option("--builtin", builtin_name, "TT3 or F2");
    auto pattern_opt = match_cmd->add_option("--pattern", pattern_path, "catalog file of patterns");
    builtin_opt->excludes(pattern_opt);
    match_cmd->add_flag("--all", all_occurrences, "list every occurrence");

    auto obstructions_cmd = make_sub("obstructions", "enumerate the minimal obstruction catalog");
    obstructions_cmd->add_option("--d", d, "host in-regularity")->required();
    obstructions_cmd->add_option("--ell", ell, "set size bound")->required();
    obstructions_cmd->add_option("--max-size", max_size, "vertex cap, default (d+1)*ell");
    obstructions_cmd->add_option("--out", out_path, "catalog file, - for stdout")->required();

    auto verify_cmd = make_sub("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite, "remark2 theorem2i..theorem2v theorem3 theorem4 theorem5 corollary3 prop1")->required();
    auto verify_n = verify_cmd->add_option("--n", n, "largest order to sweep");
    auto verify_samples = verify_cmd->add_option("--samples", samples, "random draws (prop1) or strided sample (theorem5)");
    auto verify_seed = verify_cmd->add_option("--seed", seed, "seed for randomized suites");
    verify_cmd->add_option("--catalog", catalog_path, "forbidden patterns for theorem2iii..v");

    auto gen_cmd = make_sub("gen", "emit digraphs of a family");
    gen_cmd->add_option("--family", family, "cycle all one-in-regular d-in-regular random named")->required();
    auto gen_n = gen_cmd->add_option("--n", n, "order");
    gen_cmd->add_option("--d", d, "in-regularity for d-in-regular or random");
    auto gen_seed = gen_cmd->add_option("--seed", seed, "seed for random");
    gen_cmd->add_option("--p", p, "arc probability for random");
    gen_cmd->add_option("--name", name, "petersen heawood cycle:<n> complete_bipartite:<r>,<s>");

    try {
        std::vector<const char *> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("idcode");
        for (const auto & a : args)
            argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (admits_cmd->parsed()) {
            Digraph dg = load_digraph(input);
            return report_verdict(admits(dg, ell), machine, witness, out);
        }

        if (check_cmd->parsed()) {
            Digraph dg = load_digraph(input);
            VertexSet code = parse_code_list(code_text, dg.order());
            return report_verdict(is_identifying_code(dg, code, ell), machine, witness, out);
        }

        if (mincode_cmd->parsed()) {
            Digraph dg = load_digraph(input);
            SolveResult result = method == "greedy" ? greedy_code(dg, ell)
                                                    : minimum_identifying_code(dg, ell, budget);
            switch (result.status) {
                case SolveResult::Status::NotAdmissible:
                    out << (machine ? "not-admissible" : "not admissible") << '\n';
                    return 1;
                case SolveResult::Status::BudgetExceeded:
                    if (machine)
                        out << "budget-exceeded " << result.size() << ' ' << machine_set(*result.code) << '\n';
                    else
                        out << "budget exceeded after " << result.nodes_explored
                            << " nodes; best " << result.size() << ' ' << result.code->to_string() << '\n';
                    return 3;
                case SolveResult::Status::Found:
                    if (machine)
                        out << result.size() << ' ' << machine_set(*result.code) << '\n';
                    else {
                        out << "size " << result.size() << '\n'
                            << "code " << result.code->to_string() << '\n';
                        if (method != "greedy")
                            out << "nodes " << result.nodes_explored << '\n';
                    }
                    return 0;
            }
        }

        if (girth_cmd->parsed()) {
            Girth g = girth(load_digraph(input));
            out << (machine ? g.to_string() : "girth " + g.to_string()) << '\n';
            return 0;
        }

        if (twins_cmd->parsed()) {
            auto pairs = twins(load_digraph(input));
            if (! machine && pairs.empty())
                out << "none\n";
            for (auto [u, v] : pairs)
                out << u << ' ' << v << '\n';
            return 0;
        }

        if (bound_cmd->parsed()) {
            int b = max_ell_upper_bound(load_digraph(input));
            if (machine)
                out << b << '\n';
            else
                out << "max ell bound " << b << '\n';
            return 0;
        }

        if (lift_cmd->parsed()) {
            write_digraph(out, symmetric_lift(load_graph(input)));
            return 0;
        }

        if (match_cmd->parsed()) {
            if (builtin_opt->count() == 0 && pattern_opt->count() == 0)
                throw Error(Err::BadSpec, "match needs --builtin or --pattern");
            Digraph dg = load_digraph(input);
            std::vector<Pattern> patterns;
            if (builtin_opt->count() > 0)
                patterns.push_back(builtin_pattern(builtin_name));
            else {
                auto cat = load_catalog(pattern_path);
                patterns = std::move(cat.members);
            }
            MatchMode mode = all_occurrences ? MatchMode::AllOccurrences : MatchMode::FirstOnly;
            bool any = false;
            for (const auto & pattern : patterns)
                for (const auto & hit : match_pattern(dg, pattern, mode)) {
                    any = true;
                    out << pattern.name;
                    if (machine)
                        for (int hv : hit)
                            out << ' ' << hv;
                    else {
                        out << " ->";
                        for (std::size_t i = 0; i < hit.size(); ++i)
                            out << ' ' << i << ':' << hit[i];
                    }
                    out << '\n';
                }
            if (! any && ! machine)
                out << "no match\n";
            return any ? 0 : 1;
        }

        if (obstructions_cmd->parsed()) {
            if (max_size < 0)
                max_size = (d + 1) * ell;
            ObstructionCatalog cat = enumerate_obstructions(d, ell, max_size);
            if (out_path == "-")
                write_catalog(out, cat);
            else {
                save_catalog(out_path, cat);
                out << "members " << cat.members.size() << '\n';
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            HarnessOptions options;
            options.jobs = jobs;
            SuiteReport report;
            auto t2_universe = [&](int def_n) {
                return GeneratorSpec{GeneratorSpec::Family::All,
                        verify_n->count() ? n : def_n, {}, {}, {}, {}, {}};
            };
            auto user_patterns = [&]() {
                if (catalog_path.empty())
                    throw Error(Err::MissingCatalog, "suite " + suite + " needs --catalog");
                return load_catalog(catalog_path).members;
            };

            if (suite == "remark2")
                report = verify_remark2(verify_n->count() ? n : 4, options);
            else if (suite == "theorem3")
                report = verify_theorem3(verify_n->count() ? n : 6, options);
            else if (suite == "theorem2i")
                report = verify_theorem2(Theorem2Case::I, t2_universe(4), {}, options);
            else if (suite == "theorem2ii")
                report = verify_theorem2(Theorem2Case::II, t2_universe(4), {}, options);
            else if (suite == "theorem2iii")
                report = verify_theorem2(Theorem2Case::III, t2_universe(4), user_patterns(), options);
            else if (suite == "theorem2iv")
                report = verify_theorem2(Theorem2Case::IV, t2_universe(4), user_patterns(), options);
            else if (suite == "theorem2v")
                report = verify_theorem2(Theorem2Case::V, t2_universe(4), user_patterns(), options);
            else if (suite == "theorem4")
                report = verify_theorem4(verify_n->count() ? n : 5, options);
            else if (suite == "theorem5") {
                std::optional<std::uint64_t> sample;
                if (verify_samples->count())
                    sample = samples;
                report = verify_theorem5(verify_n->count() ? n : 5, sample, options);
            }
            else if (suite == "corollary3")
                report = verify_corollary3(options);
            else if (suite == "prop1") {
                if (! verify_seed->count())
                    throw Error(Err::BadSpec, "prop1 draws random digraphs and needs an explicit --seed");
                report = verify_prop1(verify_samples->count() ? samples : 1000, seed, options);
            }
            else
                throw Error(Err::UnknownName, "no suite '" + suite + "'");

            out << (machine ? report.machine_text() : report.human_text());
            return report.pass() ? 0 : 1;
        }

        if (gen_cmd->parsed()) {
            auto emit_stream = [&](std::uint64_t count, auto && instance) {
                for (std::uint64_t i = 0; i < count; ++i) {
                    if (i > 0)
                        out << '\n';
                    write_digraph(out, instance(i));
                }
            };
            if (family == "cycle") {
                if (! gen_n->count())
                    throw Error(Err::BadSpec, "cycle needs --n");
                write_digraph(out, directed_cycle(n));
            }
            else if (family == "all") {
                if (! gen_n->count())
                    throw Error(Err::BadSpec, "all needs --n");
                AllDigraphs family_gen(n);
                emit_stream(family_gen.count(), [&](std::uint64_t i) { return family_gen.at(i); });
            }
            else if (family == "one-in-regular") {
                if (! gen_n->count())
                    throw Error(Err::BadSpec, "one-in-regular needs --n");
                OneInRegularDigraphs family_gen(n);
                emit_stream(family_gen.count(), [&](std::uint64_t i) { return family_gen.at(i); });
            }
            else if (family == "d-in-regular") {
                if (! gen_n->count())
                    throw Error(Err::BadSpec, "d-in-regular needs --n and --d");
                DInRegularDigraphs family_gen(n, d);
                emit_stream(family_gen.count(), [&](std::uint64_t i) { return family_gen.at(i); });
            }
            else if (family == "random") {
                if (! gen_n->count() || ! gen_seed->count())
                    throw Error(Err::BadSpec, "random needs --n and an explicit --seed");
                if (d > 0)
                    write_digraph(out, random_d_in_regular(n, d, seed));
                else
                    write_digraph(out, random_digraph(n, p, seed));
            }
            else if (family == "named") {
                if (name.empty())
                    throw Error(Err::BadSpec, "named needs --name");
                write_graph(out, named_graph(name));
            }
            else
                throw Error(Err::UnknownName, "no family '" + family + "'");
            return 0;
        }
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }

    err << "error: no subcommand\n";
    return 2;
}

} // namespace idcode
