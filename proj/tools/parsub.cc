#include <parsub/approx.hh>
#include <parsub/count.hh>
#include <parsub/decide.hh>
#include <parsub/errors.hh>
#include <parsub/gf2.hh>
#include <parsub/graph.hh>
#include <parsub/reduction.hh>
#include <parsub/subsets.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace parsub;

using nlohmann::json;
using std::string;
using std::uint64_t;
using std::vector;

namespace
{
    constexpr int schema_version = 1;

    enum ExitCode
    {
        exit_success = 0,
        exit_input = 2,
        exit_budget = 3,
        exit_consistency = 4
    };

    using Clock = std::chrono::steady_clock;

    auto elapsed_ms(Clock::time_point start) -> double
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    auto big(const BigInt & x) -> json
    {
        // exact decimal string; plain numbers only when they are safe in JSON
        if (x >= 0 && x <= BigInt(uint64_t(1) << 53))
            return x.convert_to<uint64_t>();
        return to_string(x);
    }

    auto rational(const BigRational & x) -> json
    {
        return json{ { "exact", to_string(x) }, { "decimal", to_double(x) } };
    }

    auto members(const VertexSet & s) -> json
    {
        return s.members();
    }

    struct Common
    {
        string graph_file;
        unsigned k = 0;
        string parity = "even";
        unsigned workers = 1;
        uint64_t budget = default_budget;

        auto enumeration() const -> EnumerationOptions
        {
            return { .budget = budget, .workers = workers };
        }
    };

    auto add_graph_options(CLI::App * cmd, Common & c, bool with_k, bool with_parity) -> void
    {
        cmd->add_option("--graph", c.graph_file, "edge-list file")->required();
        if (with_k)
            cmd->add_option("--k", c.k, "subset size")->required();
        if (with_parity)
            cmd->add_option("--parity", c.parity, "even or odd")->required()->check(CLI::IsMember({ "even", "odd" }));
        cmd->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_option("--budget", c.budget, "maximum subsets to scan");
    }

    auto report(const string & command, const Graph & g, json result, Clock::time_point start, std::optional<uint64_t> seed = std::nullopt) -> json
    {
        json r{
            { "schema_version", schema_version },
            { "command", command },
            { "input", { { "vertices", g.size() }, { "edges", g.edge_count() } } },
            { "result", std::move(result) },
            { "timing_ms", elapsed_ms(start) },
        };
        r["seed"] = seed ? json(*seed) : json(nullptr);
        return r;
    }

    auto emit(const json & j) -> void
    {
        std::cout << j.dump(2) << std::endl;
    }

    auto run_count(const Common & c, bool tuples) -> void
    {
        auto start = Clock::now();
        auto g = read_graph_file(c.graph_file);
        auto t = parse_parity(c.parity);
        auto value = tuples ? count_parity_tuples(g, c.k, t, c.enumeration()) : count_parity_subsets(g, c.k, t, c.enumeration());
        emit(report("count", g, {
                    { "k", c.k }, { "parity", c.parity }, { "kind", tuples ? "tuples" : "subsets" }, { "count", big(value) } }, start));
    }

    auto run_decide(const Common & c, bool witness) -> void
    {
        auto start = Clock::now();
        auto g = read_graph_file(c.graph_file);
        DecideOptions o;
        o.enumeration = c.enumeration();
        o.want_witness = witness;
        auto d = decide(g, c.k, parse_parity(c.parity), o);
        json result{ { "k", c.k }, { "parity", c.parity }, { "exists", d.exists }, { "rule", to_string(d.rule) } };
        if (g.size() > 0)
            result["class"] = class_name(classify(g));
        if (witness && d.witness) {
            result["witness"] = members(*d.witness);
            result["witness_edges"] = induced_edge_count(g, *d.witness);
        }
        emit(report("decide", g, std::move(result), start));
    }

    struct ApproxArgs
    {
        double epsilon = 0.1, delta = 0.05;
        string mode = "adaptive";
        uint64_t seed = 0, sample_cap = 100'000'000;
        bool force = false;
    };

    auto run_approx(const Common & c, const ApproxArgs & a) -> void
    {
        auto start = Clock::now();
        auto g = read_graph_file(c.graph_file);
        EstimateOptions o;
        o.epsilon = a.epsilon;
        o.delta = a.delta;
        o.mode = parse_estimate_mode(a.mode);
        o.seed = a.seed;
        o.sample_cap = a.sample_cap;
        o.force = a.force;
        o.workers = c.workers;
        o.decision = c.enumeration();
        auto e = estimate_parity_count(g, c.k, parse_parity(c.parity), o);

        json result{
            { "k", c.k }, { "parity", c.parity }, { "mode", to_string(e.mode) },
            { "epsilon", e.epsilon }, { "delta", e.delta },
            { "estimate", rational(e.value) },
            { "samples_used", e.samples_used }, { "successes", e.successes },
            { "planned", big(e.planned) }, { "decided_zero", e.decided_zero },
        };
        if (e.density)
            result["density_bound"] = { { "bound", rational(e.density->bound) }, { "applicable", e.density->applicable } };
        else
            result["density_bound"] = { { "applicable", false } };
        emit(report("approx", g, std::move(result), start, a.seed));
    }

    auto run_total_even(const Common & c) -> void
    {
        auto start = Clock::now();
        auto g = read_graph_file(c.graph_file);
        emit(report("total-even", g, {
                    { "count", big(total_even_subgraphs(g)) },
                    { "includes_empty_set", true },
                    { "note", "counts vertex subsets of every size, the empty set included" } }, start));
    }

    struct ReduceArgs
    {
        string colours_file;
        bool trace = false, corrupt_oracle = false, allow_large = false;
        string solver = "automatic";
    };

    auto run_reduce(const Common & c, const ReduceArgs & a) -> void
    {
        auto start = Clock::now();
        auto g = read_graph_file(c.graph_file);
        auto f = read_colouring_file(a.colours_file, c.k, g.size());
        auto t = parse_parity(c.parity);

        auto oracle = exact_oracle(c.k, t, c.enumeration());
        if (a.corrupt_oracle)
            oracle = [inner = oracle] (const Graph & h, const Colouring & col) { return inner(h, col) + 1; };

        ReductionOptions o;
        o.allow_large = a.allow_large;
        if (a.solver == "elimination")
            o.solver = ReductionSolver::Elimination;
        else if (a.solver == "factorised")
            o.solver = ReductionSolver::Factorised;

        auto r = run_reduction(g, f, c.k, t, oracle, o);
        json result{
            { "k", c.k }, { "parity", c.parity },
            { "multicolour_cliques", big(r.cliques) },
            { "oracle_calls", r.oracle_calls },
            { "matrix_dimension", r.matrix.rows() },
            { "solver", to_string(r.solver_used) },
        };
        if (a.trace) {
            json trace = json::array();
            for (std::size_t i = 0 ; i < r.family.size() ; ++i)
                trace.push_back({ { "pattern", to_colour_pair_string(r.family[i]) }, { "z", big(r.z[i]) }, { "n", big(r.solution[i]) } });
            result["trace"] = std::move(trace);
        }
        emit(report("reduce", g, std::move(result), start));
    }

    struct GenArgs
    {
        string graph_class;
        vector<string> params;
        uint64_t seed = 0;
        string out;
    };

    auto parse_unsigned(const string & s) -> unsigned
    {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used != s.size() || s.empty() || v > 1'000'000)
            throw InputError("bad size parameter '" + s + "'");
        return unsigned(v);
    }

    auto spec_for(const GenArgs & a) -> GraphSpec
    {
        auto want = [&] (std::size_t n) {
            if (a.params.size() != n)
                throw InputError("class " + a.graph_class + " takes " + std::to_string(n) + " parameter(s)");
        };
        auto & p = a.params;
        if (a.graph_class == "clique") {
            want(1);
            return generators::Clique{ parse_unsigned(p[0]) };
        }
        if (a.graph_class == "independent") {
            want(1);
            return generators::Independent{ parse_unsigned(p[0]) };
        }
        if (a.graph_class == "two-cliques") {
            want(2);
            return generators::TwoCliques{ parse_unsigned(p[0]), parse_unsigned(p[1]) };
        }
        if (a.graph_class == "bipartite") {
            want(2);
            return generators::CompleteBipartite{ parse_unsigned(p[0]), parse_unsigned(p[1]) };
        }
        if (a.graph_class == "gnp") {
            want(2);
            double prob = 0;
            try {
                std::size_t used = 0;
                prob = std::stod(p[1], &used);
                if (used != p[1].size())
                    throw std::invalid_argument(p[1]);
            }
            catch (const std::exception &) {
                throw InputError("bad probability '" + p[1] + "'");
            }
            if (! (prob >= 0 && prob <= 1))
                throw InputError("probability must lie in [0, 1]");
            return generators::Gnp{ parse_unsigned(p[0]), prob, a.seed };
        }
        if (a.graph_class == "cycle") {
            want(1);
            return generators::Cycle{ parse_unsigned(p[0]) };
        }
        if (a.graph_class == "path") {
            want(1);
            return generators::Path{ parse_unsigned(p[0]) };
        }
        throw InputError("unknown graph class '" + a.graph_class + "'");
    }

    auto run_gen(const GenArgs & a) -> void
    {
        auto start = Clock::now();
        auto g = generate(spec_for(a));
        if (a.out.empty() || a.out == "-") {
            write_graph(std::cout, g);
            return;
        }
        std::ofstream out(a.out);
        if (! out)
            throw InputError("cannot write " + a.out);
        write_graph(out, g);
        out.close();
        if (! out)
            throw InputError("error writing " + a.out);
        emit(report("gen", g, { { "class", a.graph_class }, { "params", a.params }, { "out", a.out } }, start, a.seed));
    }

    auto run_census(const Common & c) -> void
    {
        auto start = Clock::now();
        auto g = read_graph_file(c.graph_file);
        auto h = edge_count_histogram(g, c.k, c.enumeration());
        json hist = json::object();
        BigCount even = 0, odd = 0;
        for (std::size_t e = 0 ; e < h.size() ; ++e) {
            hist[std::to_string(e)] = big(h[e]);
            (e % 2 == 0 ? even : odd) += h[e];
        }
        emit(report("census", g, { { "k", c.k }, { "histogram", std::move(hist) }, { "even", big(even) }, { "odd", big(odd) } }, start));
    }

    struct BenchInstance
    {
        string name;
        Graph g;
        unsigned k;
    };

    auto bench_instances(const string & suite, uint64_t seed) -> vector<BenchInstance>
    {
        if (suite == "small")
            return {
                { "gnp(40,0.5) k=5", generate(generators::Gnp{ 40, 0.5, seed }), 5 },
                { "gnp(80,0.3) k=4", generate(generators::Gnp{ 80, 0.3, seed + 1 }), 4 },
                { "gnp(200,0.5) k=3", generate(generators::Gnp{ 200, 0.5, seed + 2 }), 3 },
            };
        if (suite == "structured")
            return {
                { "clique(40) k=4", generate(generators::Clique{ 40 }), 4 },
                { "independent(40) k=4", generate(generators::Independent{ 40 }), 4 },
                { "two-cliques(20,20) k=4", generate(generators::TwoCliques{ 20, 20 }), 4 },
                { "bipartite(20,20) k=4", generate(generators::CompleteBipartite{ 20, 20 }), 4 },
            };
        throw InputError("unknown bench suite '" + suite + "'");
    }

    auto run_bench(const string & suite, uint64_t seed, unsigned workers) -> void
    {
        auto start = Clock::now();
        json rows = json::array();
        for (auto & inst : bench_instances(suite, seed)) {
            auto & g = inst.g;
            uint64_t subsets = binomial_u64(g.size(), inst.k).value();
            json kernels = json::object();
            uint64_t reference = 0;

            auto time = [&] (const string & name, auto && fn) {
                auto t0 = Clock::now();
                uint64_t even = fn();
                double secs = std::chrono::duration<double>(Clock::now() - t0).count();
                if (name == "pair-scan")
                    reference = even;
                else if (even != reference)
                    throw ConsistencyError("bench kernels disagree on " + inst.name);
                kernels[name] = { { "seconds", secs }, { "subsets_per_second", secs > 0 ? subsets / secs : 0.0 } };
            };

            time("pair-scan", [&] {
                uint64_t even = 0;
                for (auto it = KSubsets(g.size(), inst.k).begin() ; it != std::default_sentinel ; ++it) {
                    auto comb = it.combination();
                    unsigned e = 0;
                    for (std::size_t i = 0 ; i < comb.size() ; ++i)
                        for (std::size_t j = i + 1 ; j < comb.size() ; ++j)
                            e += g.adjacent(comb[i], comb[j]);
                    even += (e % 2 == 0);
                }
                return even;
            });
            time("popcount-mask", [&] {
                uint64_t even = 0;
                for (auto s : KSubsets(g.size(), inst.k))
                    even += (induced_edge_count(g, s) % 2 == 0);
                return even;
            });
            time("incremental", [&] {
                return count_parity_subsets(g, inst.k, ParityTarget::Even, { .workers = workers }).convert_to<uint64_t>();
            });

            rows.push_back({ { "instance", inst.name }, { "n", g.size() }, { "k", inst.k }, { "subsets", subsets },
                    { "even_subsets", reference }, { "kernels", std::move(kernels) } });
        }
        json r{
            { "schema_version", schema_version },
            { "command", "bench" },
            { "suite", suite },
            { "result", std::move(rows) },
            { "timing_ms", elapsed_ms(start) },
            { "seed", seed },
        };
        emit(r);
    }

    auto fail(int code, const string & kind, const string & message, json extra = json::object()) -> int
    {
        json e{ { "schema_version", schema_version }, { "error", { { "kind", kind }, { "message", message } } } };
        for (auto & [key, value] : extra.items())
            e["error"][key] = value;
        std::cerr << e.dump() << std::endl;
        return code;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Parity-constrained induced subgraph counting" };
    app.require_subcommand(1);

    Common common;
    bool tuples = false, witness = false;
    ApproxArgs approx;
    ReduceArgs reduce;
    GenArgs gen;
    string bench_suite = "small";
    uint64_t bench_seed = 1;

    auto count_cmd = app.add_subcommand("count", "exact number of k-subsets with the parity");
    add_graph_options(count_cmd, common, true, true);
    count_cmd->add_flag("--tuples", tuples, "count ordered tuples instead of subsets");

    auto decide_cmd = app.add_subcommand("decide", "is there a k-subset with the parity?");
    add_graph_options(decide_cmd, common, true, true);
    decide_cmd->add_flag("--witness", witness, "print a certifying subset");

    auto approx_cmd = app.add_subcommand("approx", "randomised estimate of the count");
    add_graph_options(approx_cmd, common, true, true);
    approx_cmd->add_option("--eps", approx.epsilon, "relative error")->check(CLI::PositiveNumber);
    approx_cmd->add_option("--delta", approx.delta, "failure probability")->check(CLI::Range(0.0, 1.0));
    approx_cmd->add_option("--mode", approx.mode, "guaranteed or adaptive")->check(CLI::IsMember({ "guaranteed", "adaptive" }));
    approx_cmd->add_option("--seed", approx.seed, "random seed");
    approx_cmd->add_option("--sample-cap", approx.sample_cap, "maximum number of samples");
    approx_cmd->add_flag("--force", approx.force, "run guaranteed mode even above the sample cap");

    auto total_cmd = app.add_subcommand("total-even", "even induced subgraphs of all sizes");
    add_graph_options(total_cmd, common, false, false);

    auto reduce_cmd = app.add_subcommand("reduce", "count multicolour cliques through the parity oracle");
    add_graph_options(reduce_cmd, common, true, true);
    reduce_cmd->add_option("--colours", reduce.colours_file, "colouring file")->required();
    reduce_cmd->add_flag("--trace", reduce.trace, "dump the family, z and N");
    reduce_cmd->add_flag("--corrupt-oracle", reduce.corrupt_oracle, "perturb oracle answers (negative control)");
    reduce_cmd->add_flag("--allow-large", reduce.allow_large, "lift the k limit");
    reduce_cmd->add_option("--solver", reduce.solver, "automatic, elimination or factorised")
        ->check(CLI::IsMember({ "automatic", "elimination", "factorised" }));

    auto gen_cmd = app.add_subcommand("gen", "generate a graph");
    gen_cmd->add_option("--class", gen.graph_class, "clique, independent, two-cliques, bipartite, gnp, cycle, path")->required();
    gen_cmd->add_option("--params", gen.params, "sizes, then p for gnp")->required()->delimiter(',');
    gen_cmd->add_option("--seed", gen.seed, "random seed (gnp)");
    gen_cmd->add_option("--out", gen.out, "output file (default standard output)");

    auto census_cmd = app.add_subcommand("census", "edge-count histogram over k-subsets");
    add_graph_options(census_cmd, common, true, false);

    auto bench_cmd = app.add_subcommand("bench", "enumeration throughput");
    bench_cmd->add_option("--suite", bench_suite, "small or structured")->check(CLI::IsMember({ "small", "structured" }));
    bench_cmd->add_option("--seed", bench_seed, "random seed");
    bench_cmd->add_option("--workers", common.workers, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        return fail(exit_input, "usage", e.what());
    }

    try {
        if (count_cmd->parsed())
            run_count(common, tuples);
        else if (decide_cmd->parsed())
            run_decide(common, witness);
        else if (approx_cmd->parsed())
            run_approx(common, approx);
        else if (total_cmd->parsed())
            run_total_even(common);
        else if (reduce_cmd->parsed())
            run_reduce(common, reduce);
        else if (gen_cmd->parsed())
            run_gen(gen);
        else if (census_cmd->parsed())
            run_census(common);
        else if (bench_cmd->parsed())
            run_bench(bench_suite, bench_seed, common.workers);
    }
    catch (const GuaranteedModeRefused & e) {
        return fail(exit_budget, "guaranteed-mode-refused", e.what(),
                { { "required_samples", to_string(e.required_samples()) }, { "sample_cap", e.limit() } });
    }
    catch (const BudgetExceeded & e) {
        return fail(exit_budget, "budget-exceeded", e.what(), { { "required", e.required() }, { "limit", e.limit() } });
    }
    catch (const ConsistencyError & e) {
        return fail(exit_consistency, "consistency", e.what());
    }
    catch (const InputError & e) {
        return fail(exit_input, "input", e.what(), { { "line", e.line() } });
    }
    catch (const std::invalid_argument & e) {
        return fail(exit_input, "input", e.what());
    }
    catch (const std::exception & e) {
        return fail(exit_consistency, "internal", e.what());
    }

    return exit_success;
}
