// coopcolor: generation, coloring, verification, oracles, bounds and
// reproducible experiment sweeps for cooperative hypergraph coloring.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coopcolor/chain_partition.hpp"
#include "coopcolor/hypergraph.hpp"
#include "coopcolor/json_io.hpp"
#include "coopcolor/multipartite.hpp"
#include "coopcolor/oracle.hpp"
#include "coopcolor/rng.hpp"

using namespace coopcolor;

namespace {

constexpr const char* kToolVersion = "0.1.0";

// Exit-code contract: 0 success, 1 negative verification verdict, 2 bad
// input, 3 internal invariant failure, 4 semi-random abort, 5 unsupported
// instance.
constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitAbort = 4;
constexpr int kExitUnsupported = 5;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long long millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void write_manifest(const std::string& artifact, const std::string& command,
                    const json& parameters, std::optional<std::uint64_t> seed,
                    const Stopwatch& watch) {
    json m;
    m["command"] = command;
    m["parameters"] = parameters;
    if (seed) m["seed"] = *seed;
    m["toolVersion"] = kToolVersion;
    m["elapsedMillis"] = watch.millis();
    save_json_file(artifact + ".manifest.json", m);
}

std::vector<int> parse_perm(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError("--perm: '" + tok + "' is not an integer");
        }
    }
    return out;
}

SearchBudget budget_from_env() {
    SearchBudget b;
    if (const char* env = std::getenv("COOPCOLOR_MAX_ORACLE")) {
        try {
            b.maxAssignments = std::stoll(env);
        } catch (const std::exception&) {
            throw ValidationError("COOPCOLOR_MAX_ORACLE is not an integer");
        }
    }
    return b;
}

struct GenCommon {
    std::string out;
    std::string chain_out;  // derived from out when empty
};

void write_chain_instance(const ChainInstance& ci, const GenCommon& g,
                          const std::string& command, const json& params,
                          const Stopwatch& watch) {
    CoopInstance inst{ci.hypergraph.n, {ci.hypergraph}};
    save_json_file(g.out, instance_to_json(inst));
    write_manifest(g.out, command, params, std::nullopt, watch);
    const std::string cpath = g.chain_out.empty() ? g.out + ".chain.json" : g.chain_out;
    save_json_file(cpath, chain_to_json(ci.chain));
    write_manifest(cpath, command, params, std::nullopt, watch);
}

int run(int argc, char** argv) {
    CLI::App app{"cooperative hypergraph coloring toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    struct {
        int n = 0, k = 3, m = 0, dmax = 1;
        std::uint64_t seed = 0;
        GenCommon io;
    } g;

    auto add_gen_io = [&](CLI::App* sub) {
        sub->add_option("-o,--out", g.io.out, "output instance file")->required();
        sub->add_option("--chain-out", g.io.chain_out,
                        "chain document path (default: <out>.chain.json)");
    };
    auto* gtc = gen->add_subcommand("tight-cycle", "k-uniform tight cycle");
    gtc->add_option("--n", g.n, "vertex count")->required();
    gtc->add_option("--k", g.k, "edge size")->required();
    add_gen_io(gtc);
    auto* gtp = gen->add_subcommand("tight-path", "k-uniform tight path");
    gtp->add_option("--n", g.n, "vertex count")->required();
    gtp->add_option("--k", g.k, "edge size")->required();
    add_gen_io(gtp);
    auto* glc = gen->add_subcommand("loose-cycle", "k-uniform loose cycle");
    glc->add_option("--m", g.m, "edge count")->required();
    glc->add_option("--k", g.k, "edge size")->required();
    add_gen_io(glc);
    auto* glp = gen->add_subcommand("loose-path", "k-uniform loose path");
    glp->add_option("--m", g.m, "edge count")->required();
    glp->add_option("--k", g.k, "edge size")->required();
    add_gen_io(glp);
    auto* glb = gen->add_subcommand("lower-bound", "complete k-partite power family");
    glb->add_option("--k", g.k, "parts per hypergraph")->required();
    glb->add_option("--m", g.m, "number of hypergraphs")->required();
    glb->add_option("-o,--out", g.io.out, "output instance file")->required();
    auto* grk = gen->add_subcommand("random-kpartite", "random degree-capped family");
    grk->add_option("--k", g.k, "parts per hypergraph")->required();
    grk->add_option("--m", g.m, "number of hypergraphs")->required();
    grk->add_option("--n", g.n, "vertex count")->required();
    grk->add_option("--dmax", g.dmax, "degree cap")->required();
    grk->add_option("--seed", g.seed, "random seed")->required();
    grk->add_option("-o,--out", g.io.out, "output instance file")->required();

    // partition
    auto* partition = app.add_subcommand("partition", "two-cycle B/R partition");
    struct {
        int n = 0;
        std::string perm;
        std::string out;
    } pt;
    partition->add_option("--n", pt.n, "size of Z_n")->required();
    partition->add_option("--perm", pt.perm, "comma-separated permutation")->required();
    partition->add_option("-o,--out", pt.out, "partition file (stdout when omitted)");

    // color
    auto* color = app.add_subcommand("color", "cooperative colorings");
    color->require_subcommand(1);
    struct {
        std::string a, b, instance, out;
        double epsilon = 0.1;
        std::uint64_t seed = 0;
        int max_rounds = -1;
    } co;
    auto* ccp = color->add_subcommand("chain-pair", "2-color two chain systems");
    ccp->add_option("--a", co.a, "first chain document")->required();
    ccp->add_option("--b", co.b, "second chain document")->required();
    ccp->add_option("-o,--out", co.out, "coloring file")->required();
    auto* csr = color->add_subcommand("semirandom", "semi-random k-partite coloring");
    csr->add_option("--instance", co.instance, "instance file")->required();
    csr->add_option("--seed", co.seed, "random seed")->required();
    csr->add_option("--epsilon", co.epsilon, "slack parameter");
    csr->add_option("--max-rounds", co.max_rounds, "resampling cap (default 10n)");
    csr->add_option("-o,--out", co.out, "coloring or failure-report file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check a coloring against an instance");
    struct {
        std::string instance, coloring;
    } vf;
    verify->add_option("--instance", vf.instance, "instance file")->required();
    verify->add_option("--coloring", vf.coloring, "coloring file")->required();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "lower/upper bound formulas");
    struct {
        int k = 3;
        double d = 2.0, epsilon = 0.1;
    } bo;
    bounds->add_option("--k", bo.k, "uniformity")->required();
    bounds->add_option("--d", bo.d, "degree bound")->required();
    bounds->add_option("--epsilon", bo.epsilon, "slack parameter");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive searches");
    oracle->require_subcommand(1);
    struct {
        std::string instance;
        int n = 0;
        std::string perm;
        long long max_assignments = -1;
    } orc;
    auto* osolve = oracle->add_subcommand("solve", "exact cooperative coloring search");
    osolve->add_option("--instance", orc.instance, "instance file")->required();
    osolve->add_option("--max-assignments", orc.max_assignments, "search budget");
    auto* obr = oracle->add_subcommand("br", "brute-force B/R partition search");
    obr->add_option("--n", orc.n, "size of Z_n")->required();
    obr->add_option("--perm", orc.perm, "comma-separated permutation")->required();

    // experiment
    auto* experiment = app.add_subcommand("experiment", "reproducible sweeps");
    experiment->require_subcommand(1);
    struct {
        int k = 3, n = 0, dmax = 1, trials = 10;
        std::string m_range;
        std::uint64_t seed = 0;
        std::string out;
    } ex;
    auto* sweep = experiment->add_subcommand("sweep", "semi-random success rate over m");
    sweep->add_option("--k", ex.k, "parts per hypergraph")->required();
    sweep->add_option("--n", ex.n, "vertex count")->required();
    sweep->add_option("--dmax", ex.dmax, "degree cap")->required();
    sweep->add_option("--m", ex.m_range, "m range lo:hi")->required();
    sweep->add_option("--trials", ex.trials, "trials per m")->required();
    sweep->add_option("--seed", ex.seed, "base seed")->required();
    sweep->add_option("-o,--out", ex.out, "CSV output")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "partition timing over a geometric n-grid");
    struct {
        int n0 = 1000, levels = 4, factor = 2, reps = 5;
        std::uint64_t seed = 0;
        std::string out;
    } be;
    bench->add_option("--n0", be.n0, "smallest n");
    bench->add_option("--levels", be.levels, "grid size");
    bench->add_option("--factor", be.factor, "growth factor");
    bench->add_option("--reps", be.reps, "repetitions per n");
    bench->add_option("--seed", be.seed, "random seed");
    bench->add_option("-o,--out", be.out, "CSV output")->required();

    CLI11_PARSE(app, argc, argv);
    Stopwatch watch;

    if (gen->parsed()) {
        json params;
        if (gtc->parsed()) {
            params = {{"n", g.n}, {"k", g.k}};
            write_chain_instance(make_tight_cycle(g.n, g.k), g.io, "gen tight-cycle",
                                 params, watch);
        } else if (gtp->parsed()) {
            params = {{"n", g.n}, {"k", g.k}};
            write_chain_instance(make_tight_path(g.n, g.k), g.io, "gen tight-path",
                                 params, watch);
        } else if (glc->parsed()) {
            params = {{"m", g.m}, {"k", g.k}};
            write_chain_instance(make_loose_cycle(g.m, g.k), g.io, "gen loose-cycle",
                                 params, watch);
        } else if (glp->parsed()) {
            params = {{"m", g.m}, {"k", g.k}};
            write_chain_instance(make_loose_path(g.m, g.k), g.io, "gen loose-path",
                                 params, watch);
        } else if (glb->parsed()) {
            params = {{"k", g.k}, {"m", g.m}};
            auto fam = build_lower_bound_family(g.k, g.m);
            save_json_file(g.io.out, instance_to_json(fam.instance));
            write_manifest(g.io.out, "gen lower-bound", params, std::nullopt, watch);
        } else if (grk->parsed()) {
            params = {{"k", g.k}, {"m", g.m}, {"n", g.n}, {"dmax", g.dmax}};
            auto inst = gen_random_kpartite(g.k, g.m, g.n, g.dmax, g.seed);
            save_json_file(g.io.out, instance_to_json(inst));
            write_manifest(g.io.out, "gen random-kpartite", params, g.seed, watch);
        }
        return 0;
    }

    if (partition->parsed()) {
        TwoCycleInstance inst{pt.n, parse_perm(pt.perm)};
        auto [p, trace] = partition_two_cycles(inst);
        json doc = partition_to_json(inst, p, trace);
        if (pt.out.empty()) {
            std::cout << doc.dump(2) << "\n";
        } else {
            save_json_file(pt.out, doc);
            write_manifest(pt.out, "partition", json{{"n", pt.n}, {"perm", pt.perm}},
                           std::nullopt, watch);
        }
        std::cerr << "caseTag " << to_string(trace.caseTag) << ", checker OK\n";
        return 0;
    }

    if (color->parsed()) {
        if (ccp->parsed()) {
            auto c1 = chain_from_json(load_json_file(co.a));
            auto c2 = chain_from_json(load_json_file(co.b));
            auto coloring = coop_color_chain_pair(c1, c2);
            CoopInstance inst{c1.n, {chain_hypergraph(c1), chain_hypergraph(c2)}};
            if (!verify_coop_coloring(inst, coloring)) {
                throw InvariantError("chain-pair coloring failed verification");
            }
            save_json_file(co.out, coloring_to_json(coloring, 2));
            write_manifest(co.out, "color chain-pair", json{{"a", co.a}, {"b", co.b}},
                           std::nullopt, watch);
            return 0;
        }
        auto inst = instance_from_json(load_json_file(co.instance));
        SemiRandomConfig cfg;
        cfg.epsilon = co.epsilon;
        cfg.seed = co.seed;
        if (co.max_rounds >= 0) cfg.maxRounds = co.max_rounds;
        auto res = semi_random_coloring(inst, cfg);
        json params = {{"instance", co.instance},
                       {"epsilon", co.epsilon},
                       {"maxRounds", cfg.maxRounds.value_or(10 * inst.n)}};
        if (res.success) {
            save_json_file(co.out, coloring_to_json(res.coloring, inst.size()));
            write_manifest(co.out, "color semirandom", params, co.seed, watch);
            std::cerr << "success after " << res.rounds << " resampling rounds\n";
            return 0;
        }
        json fail = {{"success", false},
                     {"rounds", res.rounds},
                     {"badVertices", res.badVertices}};
        save_json_file(co.out, fail);
        write_manifest(co.out, "color semirandom", params, co.seed, watch);
        std::cerr << "abort: " << res.badVertices.size()
                  << " bad vertices after " << res.rounds << " rounds\n";
        return kExitAbort;
    }

    if (verify->parsed()) {
        auto inst = instance_from_json(load_json_file(vf.instance));
        auto coloring = coloring_from_json(load_json_file(vf.coloring));
        auto verdict = verify_coop_coloring(inst, coloring);
        if (verdict.ok) {
            std::cout << "ok\n";
            return 0;
        }
        std::cout << "violation: hypergraph " << verdict.witness->hypergraph
                  << ", edge [";
        for (std::size_t i = 0; i < verdict.witness->edge.size(); ++i) {
            std::cout << (i ? "," : "") << verdict.witness->edge[i];
        }
        std::cout << "]\n";
        return kExitVerdict;
    }

    if (bounds->parsed()) {
        auto b = compute_bounds(bo.k, bo.d, bo.epsilon);
        std::printf("lower %.12g\nupper %.12g\nlll-diagnostic %.12g\n", b.lower, b.upper,
                    lll_diagnostic(bo.k, bo.d));
        return 0;
    }

    if (oracle->parsed()) {
        if (osolve->parsed()) {
            auto inst = instance_from_json(load_json_file(orc.instance));
            SearchBudget budget = budget_from_env();
            if (orc.max_assignments > 0) budget.maxAssignments = orc.max_assignments;
            auto r = exact_coop_coloring(inst, budget);
            switch (r.status) {
                case SearchStatus::Found: {
                    std::cout << "found "
                              << coloring_to_json(r.coloring, inst.size())["assignment"].dump()
                              << "\n";
                    return 0;
                }
                case SearchStatus::None:
                    std::cout << "none\n";
                    return 0;
                case SearchStatus::BudgetExceeded:
                    std::cout << "budget-exceeded\n";
                    return kExitVerdict;
            }
        }
        TwoCycleInstance inst{orc.n, parse_perm(orc.perm)};
        auto r = exists_br_partition(inst);
        if (!r.found) {
            std::cout << "none\n";
            return kExitVerdict;
        }
        json doc;
        doc["B"] = r.partition.blue();
        doc["R"] = r.partition.red();
        std::cout << "found " << doc.dump() << "\n";
        return 0;
    }

    if (experiment->parsed()) {
        int lo = 0, hi = 0;
        if (std::sscanf(ex.m_range.c_str(), "%d:%d", &lo, &hi) != 2 || lo > hi || lo < 1) {
            throw ValidationError("--m expects a range lo:hi with 1 <= lo <= hi");
        }
        std::ofstream csv(ex.out);
        if (!csv) throw ValidationError("cannot open " + ex.out + " for writing");
        csv << "m,successes,trials,meanRounds\n";
        for (int m = lo; m <= hi; ++m) {
            int successes = 0;
            long long rounds = 0;
            for (int t = 0; t < ex.trials; ++t) {
                const std::uint64_t seed = ex.seed + static_cast<std::uint64_t>(t);
                auto inst = gen_random_kpartite(ex.k, m, ex.n, ex.dmax, seed);
                SemiRandomConfig cfg;
                cfg.seed = seed;
                auto res = semi_random_coloring(inst, cfg);
                if (res.success) ++successes;
                rounds += res.rounds;
            }
            csv << m << "," << successes << "," << ex.trials << ","
                << static_cast<double>(rounds) / ex.trials << "\n";
        }
        csv.close();
        write_manifest(ex.out, "experiment sweep",
                       json{{"k", ex.k},
                            {"n", ex.n},
                            {"dmax", ex.dmax},
                            {"m", ex.m_range},
                            {"trials", ex.trials}},
                       ex.seed, watch);
        return 0;
    }

    if (bench->parsed()) {
        if (be.n0 < 3 || be.levels < 1 || be.factor < 2 || be.reps < 1) {
            throw ValidationError("bench: need n0 >= 3, levels >= 1, factor >= 2, reps >= 1");
        }
        SplitMix64 rng(be.seed);
        std::ofstream csv(be.out);
        if (!csv) throw ValidationError("cannot open " + be.out + " for writing");
        csv << "n,rep,caseTag,millis\n";
        long long n = be.n0;
        for (int level = 0; level < be.levels; ++level, n *= be.factor) {
            for (int rep = 0; rep < be.reps; ++rep) {
                std::vector<int> a(static_cast<std::size_t>(n));
                std::iota(a.begin(), a.end(), 0);
                rng.shuffle(a);
                TwoCycleInstance inst{static_cast<int>(n), std::move(a)};
                const auto t0 = std::chrono::steady_clock::now();
                auto [p, trace] = partition_two_cycles(inst);
                const auto t1 = std::chrono::steady_clock::now();
                (void)p;
                csv << n << "," << rep << "," << to_string(trace.caseTag) << ","
                    << std::chrono::duration<double, std::milli>(t1 - t0).count() << "\n";
            }
        }
        csv.close();
        write_manifest(be.out, "bench",
                       json{{"n0", be.n0},
                            {"levels", be.levels},
                            {"factor", be.factor},
                            {"reps", be.reps}},
                       be.seed, watch);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UnsupportedInstanceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
