#include <ctl/chromatic.hh>
#include <ctl/classify.hh>
#include <ctl/constructions.hh>
#include <ctl/graph6.hh>
#include <ctl/named_graphs.hh>
#include <ctl/report_json.hh>
#include <ctl/verify.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

using nlohmann::json;
using std::size_t;
using std::string;
using std::vector;

using namespace ctl;

namespace
{
    enum class Format
    {
        json,
        graph6,
        human
    };

    struct RunConfig
    {
        size_t time_budget_secs = 60;
        std::optional<std::uint64_t> seed;
        Format output_format = Format::json;
        size_t parallelism = 1;

        auto deadline() const -> Deadline { return Deadline(std::chrono::seconds(time_budget_secs)); }
    };

    /// Failure that should end the run with exit code 2.
    struct OperationalError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto default_budget() -> size_t
    {
        if (const char * env = std::getenv("CTL_TIME_BUDGET")) {
            try {
                size_t pos = 0;
                long v = std::stol(env, &pos);
                if (pos == std::string_view(env).size() && v >= 1)
                    return static_cast<size_t>(v);
            }
            catch (const std::exception &) {
            }
            throw OperationalError("CTL_TIME_BUDGET must be a positive integer number of seconds");
        }
        return 60;
    }

    struct InputGraph
    {
        size_t line;
        string text;
        Graph graph;
    };

    auto read_stream(const string & path) -> string
    {
        if (path.empty() || path == "-") {
            std::stringstream ss;
            ss << std::cin.rdbuf();
            return ss.str();
        }
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw OperationalError("cannot open " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    auto trim(string s) -> string
    {
        while (! s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
            s.pop_back();
        size_t i = 0;
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        return s.substr(i);
    }

    /// Every non-blank line must parse; the first failure aborts with its line number.
    auto read_graphs(const string & path) -> vector<InputGraph>
    {
        std::istringstream in(read_stream(path));
        vector<InputGraph> out;
        string line;
        for (size_t number = 1; std::getline(in, line); ++number) {
            line = trim(line);
            if (line.empty())
                continue;
            try {
                out.push_back({number, line, parse_graph_line(line)});
            }
            catch (const std::exception & e) {
                throw OperationalError("line " + std::to_string(number) + ": " + e.what());
            }
        }
        return out;
    }

    /// A graph given as a file (first non-blank line), a catalog name, or a graph6/sparse6 string.
    auto load_graph(const string & target) -> Graph
    {
        std::ifstream probe(target);
        if (target == "-" || probe) {
            auto graphs = read_graphs(target);
            if (graphs.empty())
                throw OperationalError(target + ": no graph found");
            return graphs.front().graph;
        }
        if (auto g = graphs::by_name(target))
            return *g;
        try {
            return parse_graph_line(target);
        }
        catch (const std::exception & e) {
            throw OperationalError("'" + target + "' is not a file, a known name, or a graph6 string (" + e.what() + ")");
        }
    }

    auto human_report(const InputGraph & in, const ThresholdReport & r) -> string
    {
        return "line " + std::to_string(in.line) + ": n=" + std::to_string(in.graph.order()) + " chi=" + std::to_string(r.chi) +
            " class=" + to_string(r.class_tag) + " threshold=" + r.threshold.to_string();
    }

    struct ClassifyOptions
    {
        string input;
        bool certificate = false;
        bool check = false;
    };

    struct ClassifyOutcome
    {
        string text;
        bool ok = true;
    };

    auto classify_one(const InputGraph & in, size_t index, const ClassifyOptions & opts, const RunConfig & config) -> ClassifyOutcome
    {
        json head{{"schema", "ctl/1"}, {"index", index}, {"line", in.line}, {"graph6", in.text}};
        auto emit_error = [&](json extra) {
            head.update(extra);
            if (config.output_format == Format::human)
                return ClassifyOutcome{"line " + std::to_string(in.line) + ": " + extra.dump(), false};
            return ClassifyOutcome{head.dump(), false};
        };
        try {
            Deadline deadline = config.deadline();
            auto report = chromatic_threshold(in.graph, deadline);
            json check_json;
            if (opts.check) {
                auto check = check_threshold_witness(in.graph, report, {}, deadline);
                if (! check.pass)
                    return emit_error({{"error", "witness check failed"}, {"violations", check.violations}});
                check_json = {{"pass", true}, {"notes", check.notes}};
            }
            if (config.output_format == Format::human)
                return {human_report(in, report) + (opts.check ? " (checked)" : ""), true};
            json j = report_to_json(report, opts.certificate);
            head.update(j);
            if (opts.check)
                head["check"] = check_json;
            return {head.dump(), true};
        }
        catch (const BudgetExceeded & e) {
            return emit_error({{"error", "time budget exceeded"}, {"stage", e.stage()}});
        }
        catch (const SizingError & e) {
            return emit_error({{"error", e.what()}});
        }
    }

    /// Runs work items on config.parallelism threads, printing results strictly in input order.
    auto run_classify(const ClassifyOptions & opts, const RunConfig & config) -> int
    {
        auto inputs = read_graphs(opts.input);
        size_t n = inputs.size();
        vector<std::optional<ClassifyOutcome>> results(n);
        std::mutex mutex;
        std::condition_variable ready;
        std::atomic<size_t> next{0};

        auto worker = [&] {
            for (size_t i = next++; i < n; i = next++) {
                auto outcome = classify_one(inputs[i], i, opts, config);
                std::lock_guard lock(mutex);
                results[i] = std::move(outcome);
                ready.notify_all();
            }
        };
        vector<std::thread> pool;
        for (size_t t = 0; t < std::min(config.parallelism, std::max<size_t>(n, 1)); ++t)
            pool.emplace_back(worker);

        bool all_ok = true;
        for (size_t i = 0; i < n; ++i) {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return results[i].has_value(); });
            std::cout << results[i]->text << '\n' << std::flush;
            all_ok = all_ok && results[i]->ok;
        }
        for (auto & t : pool)
            t.join();
        return all_ok ? 0 : 1;
    }

    auto run_chi(const string & input, bool certificate, const RunConfig & config) -> int
    {
        bool ok = true;
        for (const auto & in : read_graphs(input)) {
            try {
                Deadline deadline = config.deadline();
                size_t chi = chromatic_number(in.graph, deadline);
                if (config.output_format == Format::human) {
                    std::cout << chi << '\n';
                    continue;
                }
                json j{{"schema", "ctl/1"}, {"line", in.line}, {"graph6", in.text}, {"chi", chi}};
                if (certificate)
                    j["coloring"] = is_k_colorable(in.graph, chi, deadline)->classes;
                std::cout << j.dump() << '\n';
            }
            catch (const BudgetExceeded & e) {
                ok = false;
                std::cout << json{{"schema", "ctl/1"}, {"line", in.line}, {"graph6", in.text}, {"error", "time budget exceeded"}, {"stage", e.stage()}}.dump()
                          << '\n';
            }
        }
        return ok ? 0 : 1;
    }

    struct ConstructOptions
    {
        string recipe_file;
        string out;
        string sidecar;
        string points_csv;
    };

    auto run_construct(const ConstructionRecipe & recipe, const ConstructOptions & opts, const RunConfig & config) -> int
    {
        Construction c;
        try {
            c = construct(recipe, config.deadline());
        }
        catch (const std::invalid_argument & e) {
            throw OperationalError(string("invalid parameters: ") + e.what());
        }
        catch (const SizingError & e) {
            throw OperationalError(e.what());
        }
        catch (const BudgetExceeded & e) {
            throw OperationalError(e.what());
        }

        string g6 = emit_graph6(c.graph);
        json sidecar{{"schema", "ctl/1"}, {"recipe", recipe.to_json()}, {"graph6", g6}, {"verified", c.verified}, {"reported", c.reported}};

        if (config.output_format == Format::json && opts.out.empty())
            std::cout << sidecar.dump(2) << '\n';
        else if (config.output_format == Format::human && opts.out.empty())
            std::cout << g6 << "\n" << sidecar["verified"].dump(2) << '\n';
        else if (opts.out.empty())
            std::cout << g6 << '\n';
        else {
            std::ofstream(opts.out) << g6 << '\n';
        }

        string sidecar_path = opts.sidecar;
        if (sidecar_path.empty() && ! opts.out.empty())
            sidecar_path = opts.out + ".json";
        if (! sidecar_path.empty())
            std::ofstream(sidecar_path) << sidecar.dump(2) << '\n';
        if (! opts.points_csv.empty()) {
            if (c.points.empty())
                throw OperationalError("this family produces no sphere points");
            std::ofstream(opts.points_csv) << points_csv(c.points);
        }
        return 0;
    }

    struct VerifyOptions
    {
        string target;
        string h_free;
        string min_degree;
        std::optional<size_t> chromatic_ge;
        string witness;
        bool json_out = false;
    };

    auto run_verify(const VerifyOptions & opts, const RunConfig & config) -> int
    {
        Graph g = load_graph(opts.target);
        Deadline deadline = config.deadline();
        json checks = json::array();
        bool pass = true;
        auto record = [&](const string & name, bool ok, json detail) {
            pass = pass && ok;
            checks.push_back({{"check", name}, {"pass", ok}, {"detail", detail}});
        };

        if (opts.h_free.empty() && opts.min_degree.empty() && ! opts.chromatic_ge && opts.witness.empty())
            throw OperationalError("verify needs at least one of --h-free, --min-degree, --chromatic-ge, --witness");

        try {
            if (! opts.h_free.empty()) {
                Graph h = load_graph(opts.h_free);
                auto e = contains_subgraph(g, h, deadline);
                record("h-free", ! e, e ? json{{"embedding", e->map}} : json("no copy found"));
            }
            if (! opts.min_degree.empty()) {
                Rational want;
                try {
                    want = Rational::parse(opts.min_degree);
                }
                catch (const std::exception & e) {
                    throw OperationalError("--min-degree: " + string(e.what()));
                }
                if (g.order() == 0)
                    throw OperationalError("--min-degree on an empty graph");
                Rational got = min_degree_fraction(g);
                record("min-degree", got >= want, {{"min_degree_fraction", rational_to_json(got)}, {"required", rational_to_json(want)}});
            }
            if (opts.chromatic_ge) {
                size_t c = *opts.chromatic_ge;
                bool ok = c == 0 || ! is_k_colorable(g, c - 1, deadline);
                record("chromatic-ge", ok, {{"chi", chromatic_number(g, deadline)}, {"required", c}});
            }
            if (! opts.witness.empty()) {
                ThresholdReport report;
                try {
                    report = report_from_json(json::parse(read_stream(opts.witness)));
                }
                catch (const std::exception & e) {
                    throw OperationalError("--witness: " + string(e.what()));
                }
                auto check = check_threshold_witness(g, report, {}, deadline);
                record("witness", check.pass, {{"violations", check.violations}, {"notes", check.notes}});
            }
        }
        catch (const BudgetExceeded & e) {
            throw OperationalError(e.what());
        }

        if (opts.json_out)
            std::cout << json{{"schema", "ctl/1"}, {"pass", pass}, {"checks", checks}}.dump(2) << '\n';
        else
            for (const auto & c : checks)
                std::cout << c["check"].get<string>() << ": " << (c["pass"].get<bool>() ? "pass" : "FAIL") << '\n';
        return pass ? 0 : 1;
    }

    auto parse_format(const string & s) -> Format
    {
        if (s == "json")
            return Format::json;
        if (s == "graph6")
            return Format::graph6;
        if (s == "human")
            return Format::human;
        throw OperationalError("unknown format " + s);
    }
}

auto main(int argc, char ** argv) -> int
{
    try {
        RunConfig config;
        config.time_budget_secs = default_budget();
        string format;

        CLI::App app{"Chromatic threshold classification, extremal constructions and independent checks"};
        app.require_subcommand(1);
        app.add_option("--budget", config.time_budget_secs, "Time budget per exact search, in seconds (default $CTL_TIME_BUDGET or 60)")
            ->check(CLI::PositiveNumber);
        app.add_option("--format", format, "json, graph6 or human (default: graph6 for construct, json otherwise)")->check(CLI::IsMember({"json", "graph6", "human"}));

        ClassifyOptions classify_opts;
        auto * classify = app.add_subcommand("classify", "Chromatic threshold of each graph6 line");
        classify->add_option("input", classify_opts.input, "graph6/sparse6 file, one graph per line (default stdin)");
        classify->add_flag("--certificate", classify_opts.certificate, "Include full witnesses");
        classify->add_flag("--check", classify_opts.check, "Re-check every report independently before emitting it");
        classify->add_option("--parallel", config.parallelism, "Worker threads")->check(CLI::PositiveNumber);

        string chi_input;
        bool chi_certificate = false;
        auto * chi = app.add_subcommand("chi", "Exact chromatic number of each graph6 line");
        chi->add_option("input", chi_input, "graph6/sparse6 file (default stdin)");
        chi->add_flag("--certificate", chi_certificate, "Include an optimal colouring");

        VerifyOptions verify_opts;
        auto * verify = app.add_subcommand("verify", "Check properties of a graph; exit 0 pass, 1 fail, 2 error");
        verify->add_option("target", verify_opts.target, "Graph file, name, or graph6 string")->required();
        verify->add_option("--h-free", verify_opts.h_free, "Pattern graph that must not occur as a subgraph");
        verify->add_option("--min-degree", verify_opts.min_degree, "Required minimum degree fraction, e.g. 1/2");
        verify->add_option("--chromatic-ge", verify_opts.chromatic_ge, "Required lower bound on the chromatic number");
        verify->add_option("--witness", verify_opts.witness, "Threshold report JSON to re-check");
        verify->add_flag("--json", verify_opts.json_out, "JSON diagnostics");

        ConstructOptions construct_opts;
        auto * construct_cmd = app.add_subcommand("construct", "Generate a graph from a family and parameters");
        construct_cmd->add_option("--recipe", construct_opts.recipe_file, "JSON recipe file");
        construct_cmd->add_option("--out", construct_opts.out, "Write graph6 here (sidecar goes to <out>.json)");
        construct_cmd->add_option("--sidecar", construct_opts.sidecar, "Write the JSON sidecar here");
        construct_cmd->add_option("--points-csv", construct_opts.points_csv, "Write sphere points as CSV");
        std::uint64_t seed = 0;
        construct_cmd->add_option("--seed", seed, "RNG seed for randomized families");

        std::optional<ConstructionRecipe> recipe;
        auto family = [&](const char * name, const char * help, Family f) {
            auto * sub = construct_cmd->add_subcommand(name, help);
            sub->callback([&recipe, f] {
                if (! recipe) {
                    recipe = ConstructionRecipe{};
                    recipe->family = f;
                }
            });
            return sub;
        };
        json params = json::object();
        auto int_opt = [&params](CLI::App * sub, const string & flag, const string & key, const string & help, bool required) {
            auto * o = sub->add_option_function<size_t>(flag, [&params, key](size_t v) { params[key] = v; }, help);
            if (required)
                o->required();
        };
        auto str_opt = [&params](CLI::App * sub, const string & flag, const string & key, const string & help, bool required) {
            auto * o = sub->add_option_function<string>(flag, [&params, key](const string & v) { params[key] = v; }, help);
            if (required)
                o->required();
        };

        auto * zy = family("zykov", "Modified Zykov graph", Family::zykov);
        int_opt(zy, "--edges", "edges", "Number of single-edge trees", false);
        zy->add_option_function<vector<string>>("--tree", [&params](const vector<string> & v) { params["trees"] = v; }, "Tree (name or graph6), repeatable");
        int_opt(zy, "-r", "r", "Chromatic number r >= 3", true);
        int_opt(zy, "-t", "t", "Blow-up size t >= 1", true);

        auto * kn = family("kneser", "Kneser graph Kn(n,k)", Family::kneser);
        int_opt(kn, "n", "n", "Ground set size", true);
        int_opt(kn, "k", "k", "Subset size", true);

        auto * ha = family("hajnal", "Hajnal graph H(k,l,m)", Family::hajnal);
        int_opt(ha, "k", "k", "k", true);
        int_opt(ha, "l", "l", "l (divisible by 2m+k)", true);
        int_opt(ha, "m", "m", "m", true);

        auto * bo = family("borsuk", "Sampled Borsuk graph", Family::borsuk);
        int_opt(bo, "--k", "k", "Sphere dimension", true);
        str_opt(bo, "--eps", "eps", "eps as a fraction of pi, e.g. 1/10", true);
        int_opt(bo, "--points", "points", "Number of sampled points", true);

        auto bh_options = [&](CLI::App * sub) {
            int_opt(sub, "--k", "k", "Sphere dimension", true);
            str_opt(sub, "--eps", "eps", "eps as a fraction of pi", true);
            str_opt(sub, "--delta", "delta", "delta as a fraction of pi", true);
            int_opt(sub, "--w-size", "w_size", "|W|, even", true);
            int_opt(sub, "--u-points", "u_points", "|U'|", true);
        };
        auto * bh = family("borsuk-hajnal", "Borsuk-Hajnal graph", Family::borsuk_hajnal);
        bh_options(bh);
        auto * bhr = family("borsuk-hajnal-r", "r-Borsuk-Hajnal graph", Family::borsuk_hajnal_r);
        bh_options(bhr);
        int_opt(bhr, "-r", "r", "r >= 3", true);

        auto * er = family("erdos", "Verified graph with chromatic number >= k and girth >= l", Family::erdos);
        int_opt(er, "k", "k", "k", true);
        int_opt(er, "l", "l", "l", true);

        auto * pw = family("pi-witness", "Lower-bound construction for graphs without a forest in the decomposition family", Family::pi_witness);
        str_opt(pw, "H", "h", "Forbidden graph (name or graph6)", true);
        int_opt(pw, "c", "c", "Chromatic lower bound", true);
        auto * tw = family("theta-witness", "Lower-bound construction for any graph", Family::theta_witness);
        str_opt(tw, "H", "h", "Forbidden graph (name or graph6)", true);
        int_opt(tw, "c", "c", "Chromatic lower bound", true);

        auto * lw = family("lambda-witness", "Borsuk-Hajnal lower-bound construction", Family::lambda_witness);
        str_opt(lw, "H", "h", "Forbidden graph, not r-near-acyclic", true);
        int_opt(lw, "--k", "k", "Sphere dimension", true);
        str_opt(lw, "--nu", "nu", "Slack nu (default 1/10)", false);
        int_opt(lw, "--u-points", "u_points", "|U'| (default 8)", false);

        auto * rc = family("random-construction", "Sparse random construction with a planted graph", Family::random_construction);
        int_opt(rc, "-r", "r", "r >= 3", true);
        int_opt(rc, "--n", "n", "Number of vertices", true);
        str_opt(rc, "--p", "p", "Edge probability, e.g. 3/10", true);
        str_opt(rc, "--f", "f", "Planted graph (name or graph6)", true);

        std::function<void(CLI::App *)> fall = [&](CLI::App * a) {
            for (auto * sub : a->get_subcommands([](CLI::App *) { return true; })) {
                sub->fallthrough();
                fall(sub);
            }
        };
        fall(&app);

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e);
            return code == 0 ? 0 : 2;
        }
        config.output_format = parse_format(format.empty() ? (construct_cmd->parsed() ? "graph6" : "json") : format);

        if (classify->parsed())
            return run_classify(classify_opts, config);
        if (chi->parsed())
            return run_chi(chi_input, chi_certificate, config);
        if (verify->parsed())
            return run_verify(verify_opts, config);

        if (! construct_opts.recipe_file.empty()) {
            if (recipe)
                throw OperationalError("give either --recipe or a family, not both");
            try {
                recipe = ConstructionRecipe::from_json(json::parse(read_stream(construct_opts.recipe_file)));
            }
            catch (const json::exception & e) {
                throw OperationalError(string("recipe: ") + e.what());
            }
            catch (const std::invalid_argument & e) {
                throw OperationalError(string("recipe: ") + e.what());
            }
        }
        else {
            if (! recipe)
                throw OperationalError("construct needs a family subcommand or --recipe");
            recipe->params = params;
            if (is_randomized(recipe->family))
                recipe->seed = seed;
        }
        return run_construct(*recipe, construct_opts, config);
    }
    catch (const OperationalError & e) {
        std::cerr << "ctl: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception & e) {
        std::cerr << "ctl: " << e.what() << '\n';
        return 2;
    }
}
