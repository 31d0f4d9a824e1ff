#include "kvcut/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kvcut/bitgraph.hpp"
#include "kvcut/components.hpp"
#include "kvcut/error.hpp"
#include "kvcut/generate.hpp"
#include "kvcut/io.hpp"
#include "kvcut/recognition.hpp"
#include "kvcut/reductions.hpp"
#include "kvcut/solvers.hpp"
#include "kvcut/special_classes.hpp"
#include "kvcut/witness.hpp"

namespace kvcut {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(file), {});
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw InputError("cannot write '" + path.string() + "'");
}

std::optional<Objective> parse_objective(const std::string& name) {
    for (Objective o : {Objective::max_components, Objective::min_pairwise, Objective::max_small_components}) {
        if (to_string(o) == name) return o;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
    std::string input = "-";
    std::string objective = "components";
    std::string budget = "1";
    std::size_t threshold = 0;
    bool weighted = false;
    std::string solver = "auto";
    std::optional<std::int64_t> time_limit_ms;
    bool serial = false;
    std::string dot;
};

int run_solve(const SolveArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    const Graph g = parse_instance(read_input(a.input, in));
    SolveConfig cfg;
    cfg.objective = *parse_objective(a.objective);
    cfg.budget = parse_weight(a.budget);
    if (cfg.budget < Weight(0)) throw InputError("--budget must be non-negative");
    cfg.weighted = a.weighted;
    cfg.threshold = a.threshold;
    cfg.parallel = !a.serial;
    if (a.time_limit_ms) cfg.time_limit = std::chrono::milliseconds(*a.time_limit_ms);

    const bool plain_kvcp = cfg.objective == Objective::max_components && !cfg.weighted;
    if ((a.solver == "bnb" || a.solver == "greedy") && !plain_kvcp)
        throw InputError("--solver " + a.solver + " supports only the unweighted components objective");

    const auto start = Clock::now();
    VertexCutSolution sol;
    std::string used = a.solver;
    if (a.solver == "brute") {
        sol = brute_force_vertex_cut(g, cfg);
    } else if (a.solver == "bnb") {
        sol = branch_and_bound_kvcp(g, cfg);
    } else if (a.solver == "greedy") {
        sol = greedy_kvcp(g, cfg);
    } else if (!plain_kvcp) {
        used = "auto:brute";
        sol = brute_force_vertex_cut(g, cfg);
    } else {
        const std::size_t k = cfg.cardinality();
        bool done = false;
        if (complete_bipartite_sides(g)) {
            used = "auto:complete-bipartite";
            sol = solve_complete_bipartite(g, k);
            done = true;
        } else if (const auto sp = recognize_split(g)) {
            try {
                sol = solve_split(g, *sp, k, cfg.parallel);
                used = "auto:split";
                done = true;
            } catch (const CapacityError&) {
                // Clique side too large for the exact search; fall through.
            }
        }
        if (!done && g.order() <= kMaskKernelLimit) {
            used = "auto:bnb";
            sol = branch_and_bound_kvcp(g, cfg);
        } else if (!done) {
            used = "auto:brute";
            sol = brute_force_vertex_cut(g, cfg);
        }
    }
    const double ms = elapsed_ms(start);

    const SolutionRecord rec = make_solution_record(g, cfg, sol, used, ms);
    if (!is_consistent(g, cfg, sol) || !validates(g, rec)) {
        err << "error: solution failed self-validation; no record emitted\n";
        return kExitCounterexample;
    }
    out << to_json_line(rec) << "\n";
    err << "solver " << used << ": |S| = " << sol.set.size() << ", components = " << sol.component_count
        << ", pairwise = " << sol.pairwise << (sol.optimal ? ", optimal" : ", not proven optimal") << " (" << ms
        << " ms)\n";
    if (!a.dot.empty()) write_file(a.dot, emit_dot(g, sol.set));
    return kExitOk;
}

// --------------------------------------------------------------- reduce

struct ReduceArgs {
    std::string input = "-";
    std::size_t budget = 1;
    std::string variant = "reinforced";
    std::string output;
    std::string mapping;
    std::string dot;
};

int run_reduce(const ReduceArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    const Graph g = parse_instance(read_input(a.input, in));
    const GadgetInstance gi = build_gadget(g, a.budget, *parse_gadget_variant(a.variant));
    const std::string instance = emit_instance(gi.g_prime);

    if (!a.mapping.empty()) write_file(a.mapping, emit_gadget_mapping(gi));
    if (!a.dot.empty()) write_file(a.dot, emit_dot(gi.g_prime, gi.u_set, "gadget"));
    if (a.output.empty()) {
        out << instance;
    } else {
        write_file(a.output, instance);
        json report;
        report["command"] = "reduce";
        report["instance_hash"] = instance_hash(g);
        report["budget"] = gi.budget;
        report["variant"] = to_string(gi.variant);
        report["vertices"] = gi.g_prime.order();
        report["edges"] = gi.g_prime.size();
        report["u_size"] = gi.u_set.size();
        report["bipartite"] = is_bipartite(gi.g_prime).has_value();
        report["output"] = a.output;
        if (!a.mapping.empty()) report["mapping"] = a.mapping;
        out << report.dump() << "\n";
    }
    err << "gadget (" << to_string(gi.variant) << ", k = " << gi.budget << "): " << gi.g_prime.order()
        << " vertices, " << gi.g_prime.size() << " edges, |U| = " << gi.u_set.size() << "\n";
    return kExitOk;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
    int theorem = 1;
    std::size_t max_n = 0;
    std::size_t max_edges = 10;
    std::size_t max_k = 4;
    std::uint64_t seed = 1;
    std::size_t trials = 0;
    std::string witness_dir;
    std::string variant = "reinforced";
    bool serial = false;
};

struct Failure {
    std::string check;
    std::uint64_t instance_seed = 0;
    std::size_t k = 0;
    Graph witness;
};

struct SweepTotals {
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::map<std::string, std::size_t> strong_misses;
    std::vector<Failure> failures;
};

void write_witnesses(const VerifyArgs& a, const SweepTotals& totals, std::ostream& err) {
    if (a.witness_dir.empty()) return;
    std::filesystem::create_directories(a.witness_dir);
    for (const Failure& f : totals.failures) {
        const std::string name = "theorem" + std::to_string(a.theorem) + "-" + f.check + "-seed" +
                                 std::to_string(f.instance_seed) + "-k" + std::to_string(f.k) + ".txt";
        std::string text = "# failed check: " + f.check + "\n# budget: " + std::to_string(f.k) +
                           "\n# instance seed: " + std::to_string(f.instance_seed) + "\n" + emit_instance(f.witness);
        write_file(std::filesystem::path(a.witness_dir) / name, text);
        err << "witness written: " << name << "\n";
    }
}

// Shrinks g against `fails` (any exception means "does not reproduce").
Graph minimal_witness(const Graph& g, const std::function<bool(const Graph&)>& fails) {
    return shrink_counterexample(g, [&](const Graph& h) {
        try {
            return fails(h);
        } catch (const Error&) {
            return false;
        }
    });
}

SweepTotals sweep_theorem1(const VerifyArgs& a) {
    Theorem1Limits limits;
    limits.max_vertices = a.max_n;
    limits.max_edges = a.max_edges;
    limits.variant = *parse_gadget_variant(a.variant);
    limits.parallel = !a.serial;

    SweepTotals totals;
    Rng master(a.seed);
    for (std::size_t t = 0; t < a.trials; ++t) {
        const std::uint64_t s = master.next();
        Rng local(s);
        const std::size_t n = local.between(2, a.max_n);
        const std::size_t cap = std::min(a.max_edges, n * (n - 1) / 2);
        const std::size_t extra = cap >= n - 1 ? local.between(0, cap - (n - 1)) : 0;
        const Graph g = random_connected_graph(n, extra, local.next());
        ++totals.instances;

        for (std::size_t k = 1; k <= std::min(g.size(), a.max_k); ++k) {
            auto theorem_fails = [&](const Graph& h) {
                const Theorem1Report rep = verify_theorem1(h, k, limits);
                return !rep.equal();
            };
            auto gadget_fails = [&](const Graph& h) {
                const GadgetInstance gi = build_gadget(h, k, limits.variant);
                return !is_bipartite(gi.g_prime) || !only_u_disconnects(gi).holds;
            };
            ++totals.checks;
            if (theorem_fails(g)) totals.failures.push_back({"equality", s, k, minimal_witness(g, theorem_fails)});
            if (gadget_fails(g)) totals.failures.push_back({"gadget", s, k, minimal_witness(g, gadget_fails)});
        }
    }
    return totals;
}

SweepTotals sweep_theorem2(const VerifyArgs& a) {
    SweepTotals totals;
    Rng master(a.seed);
    SolveConfig base;
    base.parallel = !a.serial;

    for (std::size_t t = 0; t < a.trials; ++t) {
        const std::uint64_t s = master.next();
        Rng local(s);
        const std::size_t n = local.between(1, a.max_n);
        GenParams params;
        params.n2 = local.between(1, n);
        params.n1 = n - params.n2;
        params.p = static_cast<double>(local.between(1, 9)) / 10.0;
        params.relabel = true;
        const Graph g = generate(GraphKind::split, params, local.next());
        ++totals.instances;

        auto residual_fails = [](const Graph& h) {
            const auto sp = recognize_split(h);
            if (!sp || h.order() > 8) return false;
            for (Mask m = 0; m < (Mask{1} << h.order()); ++m) {
                std::vector<Vertex> del;
                for (Vertex v = 0; v < h.order(); ++v)
                    if (m & bit(v)) del.push_back(v);
                if (!residual_shape(h, *sp, VertexSet(std::move(del))).ok) return true;
            }
            return false;
        };
        ++totals.checks;
        if (residual_fails(g)) totals.failures.push_back({"residual-shape", s, 0, minimal_witness(g, residual_fails)});

        for (std::size_t k = 0; k <= g.order(); ++k) {
            SolveConfig cfg = base;
            cfg.budget = static_cast<std::int64_t>(k);
            auto restriction_fails = [&](const Graph& h) {
                const auto sp = recognize_split(h);
                if (!sp) return false;
                const std::size_t oracle = brute_force_kvcp(h, cfg).component_count;
                return best_within_clique_side(h, *sp, k) != oracle ||
                       solve_split(h, *sp, k, cfg.parallel).component_count != oracle;
            };
            auto equivalence_fails = [&](const Graph& h) {
                const auto sp = recognize_split(h);
                return sp && !check_cnp_equivalence(h, *sp, k).holds_weak();
            };
            auto case1_fails = [&](const Graph& h) {
                const auto sp = recognize_split(h);
                if (!sp || k < sp->n_of_v1.size()) return false;
                const bool clique_left = sp->v2.size() > sp->n_of_v1.size();
                const VertexCutSolution sol = solve_split(h, *sp, k, cfg.parallel);
                return sol.component_count != sp->v1.size() + (clique_left ? 1 : 0) ||
                       components_after_vertex_deletion(h, sol.set).count != sol.component_count;
            };
            ++totals.checks;
            if (restriction_fails(g))
                totals.failures.push_back({"restriction", s, k, minimal_witness(g, restriction_fails)});
            if (equivalence_fails(g))
                totals.failures.push_back({"equivalence", s, k, minimal_witness(g, equivalence_fails)});
            if (case1_fails(g)) totals.failures.push_back({"case1", s, k, minimal_witness(g, case1_fails)});

            const auto sp = recognize_split(g);
            const EquivalenceReport eq = check_cnp_equivalence(g, *sp, k);
            if (!eq.every_cnp_optimal_is_kvcp_optimal) ++totals.strong_misses["cnp_to_kvcp"];
            if (!eq.every_kvcp_optimal_is_cnp_optimal) ++totals.strong_misses["kvcp_to_cnp"];
        }
    }
    return totals;
}

int run_verify(VerifyArgs a, std::ostream& out, std::ostream& err) {
    if (a.theorem != 1 && a.theorem != 2) throw InputError("--theorem must be 1 or 2");
    if (a.max_n == 0) a.max_n = a.theorem == 1 ? 6 : 10;
    if (a.trials == 0) a.trials = a.theorem == 1 ? 200 : 300;
    if (a.theorem == 1 && a.max_n < 2) throw InputError("--max-n must be at least 2 for --theorem 1");
    if (a.theorem == 2 && a.max_n > 16) throw CapacityError("--max-n above 16 is beyond the exhaustive checks");
    if (!parse_gadget_variant(a.variant)) throw InputError("unknown --variant '" + a.variant + "'");

    const auto start = Clock::now();
    const SweepTotals totals = a.theorem == 1 ? sweep_theorem1(a) : sweep_theorem2(a);
    const double ms = elapsed_ms(start);
    write_witnesses(a, totals, err);

    json report;
    report["command"] = "verify";
    report["theorem"] = a.theorem;
    report["seed"] = a.seed;
    report["trials"] = a.trials;
    report["max_n"] = a.max_n;
    report["instances"] = totals.instances;
    report["checks"] = totals.checks;
    report["counterexamples"] = totals.failures.size();
    json failures = json::array();
    for (const Failure& f : totals.failures) {
        failures.push_back({{"check", f.check}, {"instance_seed", f.instance_seed}, {"k", f.k},
                            {"witness", emit_instance(f.witness)}});
    }
    report["failures"] = failures;
    if (a.theorem == 2) report["strong_reading_misses"] = totals.strong_misses;
    report["all_equal"] = totals.failures.empty();
    report["wall_time_ms"] = ms;
    out << report.dump() << "\n";

    err << "verify --theorem " << a.theorem << ": " << totals.instances << " instances, " << totals.checks << " checks, "
        << totals.failures.size() << " counterexamples (" << ms << " ms)\n";
    return totals.failures.empty() ? kExitOk : kExitCounterexample;
}

// ------------------------------------------------------------------ gen

struct GenArgs {
    std::string kind = "gnp";
    GenParams params;
    std::uint64_t seed = 1;
    std::string output;
    std::string dot;
};

int run_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    const auto kind = parse_graph_kind(a.kind);
    const Graph g = generate(*kind, a.params, a.seed);
    const std::string text = emit_instance(g);
    if (a.output.empty()) {
        out << text;
    } else {
        write_file(a.output, text);
    }
    if (!a.dot.empty()) write_file(a.dot, emit_dot(g));
    err << "generated " << a.kind << ": n = " << g.order() << ", m = " << g.size() << ", seed = " << a.seed << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    std::size_t n = 18;
    std::size_t budget = 3;
    double p = 0.25;
    std::uint64_t seed = 1;
    std::size_t repeat = 3;
};

int run_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
    GenParams params;
    params.n = a.n;
    params.p = a.p;
    const Graph g = generate(GraphKind::gnp, params, a.seed);
    SolveConfig cfg = SolveConfig::with_budget(a.budget);

    auto best_time = [&](auto&& run) {
        double best = -1;
        VertexCutSolution sol;
        for (std::size_t r = 0; r < std::max<std::size_t>(a.repeat, 1); ++r) {
            const auto start = Clock::now();
            sol = run();
            const double ms = elapsed_ms(start);
            if (best < 0 || ms < best) best = ms;
        }
        return std::make_pair(best, sol);
    };
    cfg.parallel = false;
    const auto [serial_ms, serial] = best_time([&] { return brute_force_kvcp(g, cfg); });
    cfg.parallel = true;
    const auto [parallel_ms, parallel] = best_time([&] { return brute_force_kvcp(g, cfg); });
    const auto [bnb_ms, bnb] = best_time([&] { return branch_and_bound_kvcp(g, cfg); });

    const bool agree = serial.set == parallel.set && serial.component_count == parallel.component_count &&
                       bnb.component_count == serial.component_count;
    json report;
    report["command"] = "bench";
    report["n"] = g.order();
    report["m"] = g.size();
    report["budget"] = a.budget;
    report["seed"] = a.seed;
    report["brute_serial_ms"] = serial_ms;
    report["brute_parallel_ms"] = parallel_ms;
    report["bnb_ms"] = bnb_ms;
    report["components"] = serial.component_count;
    report["agree"] = agree;
    out << report.dump() << "\n";
    err << "brute serial " << serial_ms << " ms, parallel " << parallel_ms << " ms, bnb " << bnb_ms << " ms\n";
    return agree ? kExitOk : kExitCounterexample;
}

std::vector<std::string> names_of_objectives() {
    return {std::string(to_string(Objective::max_components)), std::string(to_string(Objective::min_pairwise)),
            std::string(to_string(Objective::max_small_components))};
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"K-way vertex cut toolkit: exact and heuristic solvers, the k-cut gadget, and sweep verifiers"};
    app.name(args.empty() ? "kvcut" : args.front());
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Solve a vertex-cut instance and print a solution record");
    s->add_option("input", solve.input, "Instance file, or - for standard input")->capture_default_str();
    s->add_option("--objective", solve.objective, "Objective")
        ->check(CLI::IsMember(names_of_objectives()))
        ->capture_default_str();
    s->add_option("--budget,-k", solve.budget, "Budget: cardinality, or total weight with --weighted (3, 3/2, 1.5)")
        ->capture_default_str();
    s->add_option("--threshold,-c", solve.threshold, "Size bound for the small-components objective");
    s->add_flag("--weighted", solve.weighted, "Budget bounds the total vertex weight");
    s->add_option("--solver", solve.solver, "Solver")
        ->check(CLI::IsMember({"brute", "bnb", "greedy", "auto"}))
        ->capture_default_str();
    s->add_option("--time-limit", solve.time_limit_ms, "Branch-and-bound time limit in milliseconds")
        ->check(CLI::NonNegativeNumber);
    s->add_flag("--serial", solve.serial, "Disable the parallel search kernels");
    s->add_option("--dot", solve.dot, "Also write a DOT rendering with the deleted set highlighted");

    ReduceArgs reduce;
    auto* r = app.add_subcommand("reduce", "Build the bipartite vertex-cut gadget of a k-cut instance");
    r->add_option("input", reduce.input, "Instance file, or - for standard input")->capture_default_str();
    r->add_option("--budget,-k", reduce.budget, "Edge budget k (>= 1)")->required();
    r->add_option("--variant", reduce.variant, "Gadget variant")
        ->check(CLI::IsMember({"reinforced", "subdivided", "literal"}))
        ->capture_default_str();
    r->add_option("--output,-o", reduce.output, "Write the gadget instance here (default: standard output)");
    r->add_option("--emit-mapping", reduce.mapping, "Write the U-vertex to source-edge table here");
    r->add_option("--dot", reduce.dot, "Also write a DOT rendering with U highlighted");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Randomized property sweep against brute-force oracles");
    v->add_option("--theorem", verify.theorem, "1: k-cut gadget equality; 2: split-graph properties")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    v->add_option("--max-n", verify.max_n, "Largest instance order (default 6 / 10)");
    v->add_option("--max-edges", verify.max_edges, "Gadget sweep (--theorem 1): largest edge count")->capture_default_str();
    v->add_option("--max-k", verify.max_k, "Gadget sweep (--theorem 1): largest budget")->capture_default_str();
    v->add_option("--seed", verify.seed, "Master seed")->capture_default_str();
    v->add_option("--trials", verify.trials, "Number of random instances (default 200 / 300)");
    v->add_option("--witness-dir", verify.witness_dir, "Directory for minimal counterexample files");
    v->add_option("--variant", verify.variant, "Gadget variant for the gadget sweep")
        ->check(CLI::IsMember({"reinforced", "subdivided", "literal"}))
        ->capture_default_str();
    v->add_flag("--serial", verify.serial, "Disable the parallel search kernels");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a seeded random instance");
    g->add_option("--kind", gen.kind, "Graph family")
        ->check(CLI::IsMember({"gnp", "bipartite", "split", "complete-bipartite", "path", "star", "cycle"}))
        ->capture_default_str();
    g->add_option("--n,-n", gen.params.n, "Order (gnp, path, star, cycle)");
    g->add_option("--n1", gen.params.n1, "First side (bipartite) or independent side (split)");
    g->add_option("--n2", gen.params.n2, "Second side (bipartite) or clique (split)");
    g->add_option("--p,-p", gen.params.p, "Edge probability")->capture_default_str();
    g->add_option("--seed", gen.seed, "Seed")->capture_default_str();
    g->add_flag("--relabel", gen.params.relabel, "Randomly relabel the vertices");
    g->add_option("--output,-o", gen.output, "Write here instead of standard output");
    g->add_option("--dot", gen.dot, "Also write a DOT rendering");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Time serial vs parallel brute force and branch and bound");
    b->add_option("--n,-n", bench.n, "Order of the G(n,p) instance")->capture_default_str();
    b->add_option("--budget,-k", bench.budget, "Budget")->capture_default_str();
    b->add_option("--p,-p", bench.p, "Edge probability")->capture_default_str();
    b->add_option("--seed", bench.seed, "Seed")->capture_default_str();
    b->add_option("--repeat", bench.repeat, "Repetitions (best time is reported)")->capture_default_str();

    try {
        // CLI11 consumes a reversed argument list without the program name.
        std::vector<std::string> rest;
        if (!args.empty()) rest.assign(args.rbegin(), args.rend() - 1);
        app.parse(std::move(rest));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (s->parsed()) return run_solve(solve, in, out, err);
        if (r->parsed()) return run_reduce(reduce, in, out, err);
        if (v->parsed()) return run_verify(verify, out, err);
        if (g->parsed()) return run_gen(gen, out, err);
        if (b->parsed()) return run_bench(bench, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCounterexample;
    }
    return kExitUsage;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return cli_main(args, std::cin, std::cout, std::cerr);
}

}  // namespace kvcut
