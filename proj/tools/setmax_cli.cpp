// setmax: generate, solve, audit, and benchmark monotone set-function
// maximization instances under independence-system constraints.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "setmax/audit.hpp"
#include "setmax/constructions.hpp"
#include "setmax/errors.hpp"
#include "setmax/greedy.hpp"
#include "setmax/json_io.hpp"

using namespace setmax;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFalsified = 3;

std::optional<int> env_brute_cap() {
    const char* raw = std::getenv("SETMAX_BRUTE_CAP");
    if (!raw || !*raw) return std::nullopt;
    try {
        return std::stoi(raw);
    } catch (const std::exception&) {
        throw parameter_error("SETMAX_BRUTE_CAP must be an integer");
    }
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) { return m == 0 ? 0 : rng() % m; }

// ---------------------------------------------------------------------------
// Seeded input generators for the reduction-style constructions.

KdmHypergraph random_kdm(int sides, int verts, int edges, std::uint64_t seed) {
    if (sides < 1 || verts < 1 || edges < 0)
        throw parameter_error("kdm generator: need sides >= 1, vertices >= 1, edges >= 0");
    std::mt19937_64 rng(seed);
    KdmHypergraph g;
    g.sides = sides;
    for (int e = 0; e < edges; ++e) {
        std::vector<int> tuple;
        for (int s = 0; s < sides; ++s)
            tuple.push_back(static_cast<int>(bounded(rng, static_cast<std::uint64_t>(verts))));
        g.edges.push_back(std::move(tuple));
    }
    return g;
}

std::vector<BidderUtility> random_bidders(int bidders, int items, int edges_each, std::uint64_t seed) {
    if (bidders < 0 || items < 0 || edges_each < 0)
        throw parameter_error("welfare generator: negative parameter");
    std::mt19937_64 rng(seed);
    std::vector<BidderUtility> out;
    for (int b = 0; b < bidders; ++b) {
        BidderUtility util;
        util.items = items;
        std::vector<ElementSet> seen;
        for (int e = 0; e < edges_each && items > 0; ++e) {
            const int rank = 1 + static_cast<int>(bounded(rng, 2)); // rank 1 or 2
            ElementSet members;
            while (members.size() < rank)
                members.insert(static_cast<int>(bounded(rng, static_cast<std::uint64_t>(items))));
            bool dup = false;
            for (const auto& s : seen) dup |= (s == members);
            if (dup) continue;
            seen.push_back(members);
            util.edges.push_back({members, Value(1 + bounded(rng, 6), 1 + bounded(rng, 3))});
        }
        out.push_back(std::move(util));
    }
    return out;
}

std::vector<std::pair<int, int>> random_graph(int nodes, int edges, std::uint64_t seed) {
    if (nodes < 0 || edges < 0) throw parameter_error("graph generator: negative parameter");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> out;
    auto have = [&](int a, int b) {
        for (const auto& e : out)
            if (e.first == a && e.second == b) return true;
        return false;
    };
    int attempts = 0;
    while (static_cast<int>(out.size()) < edges && attempts < 20 * edges + 100) {
        ++attempts;
        if (nodes < 2) break;
        int a = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(nodes)));
        int b = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(nodes)));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (have(a, b)) continue;
        out.push_back({a, b});
    }
    return out;
}

RandomConstraint parse_constraint(const std::string& name) {
    if (name == "uniform") return RandomConstraint::Uniform;
    if (name == "partition") return RandomConstraint::Partition;
    if (name == "intersection2") return RandomConstraint::TwoIntersection;
    throw parameter_error("unknown constraint kind: " + name +
                          " (expected uniform | partition | intersection2)");
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parameter_error("cannot write " + path);
    out << text;
}

void emit_instance(const Instance& inst, const std::string& path) {
    write_text(path, canonical_text(instance_to_json(inst)));
}

// ---------------------------------------------------------------------------
// Solving and reporting.

struct AlgRun {
    std::string alg;
    SolveResult result;
    std::int64_t wall_ms = 0;
};

AlgRun run_algorithm(const Instance& inst, const std::string& alg) {
    const SetFunction& f = *inst.oracles.f;
    const IndependenceSystem& sys = *inst.system;
    AlgRun run;
    run.alg = alg;
    const auto start = std::chrono::steady_clock::now();
    if (alg == "ext-super") {
        run.result = extendible_greedy_supermodular(f, sys, inst.oracles.sdep);
    } else if (alg == "ext-dep") {
        run.result = extendible_greedy_dependency(f, sys, inst.oracles.dep);
    } else if (alg == "simple" || alg == "guess") {
        const auto* uniform = dynamic_cast<const UniformMatroid*>(&sys);
        if (!uniform)
            throw parameter_error("--alg " + alg + " requires a uniform-matroid constraint");
        run.result = (alg == "simple") ? simple_greedy_uniform(f, uniform->k(), inst.oracles.sdep)
                                       : guess_greedy_uniform(f, uniform->k(), inst.oracles.sdep);
    } else if (alg == "brute") {
        const auto cert = brute_force_opt(f, sys, env_brute_cap());
        run.result.solution = cert.opt_set;
        run.result.value = cert.opt_value;
        run.result.trace.sets.push_back(cert.opt_set);
        run.result.d_used = inst.oracles.sdep.max_set_size();
    } else {
        throw parameter_error("unknown algorithm: " + alg +
                              " (expected ext-super | ext-dep | simple | guess | brute)");
    }
    const auto stop = std::chrono::steady_clock::now();
    run.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return run;
}

/// The fraction of OPT the theory promises for this run. For guess, the bound
/// belongs to the guess matching the brute-forced optimum.
std::optional<Value> theory_bound(const Instance& inst, const std::string& alg, const SolveResult& run,
                                  const OptCertificate* cert) {
    const int k = inst.system->extendibility();
    const int d = run.d_used;
    if (alg == "ext-super") return Value(1, k * (d + 1) + 1);
    if (alg == "ext-dep") return Value(1, k * (d + 1));
    if (alg == "brute") return Value(1);
    const auto* uniform = dynamic_cast<const UniformMatroid*>(inst.system.get());
    if (!uniform) return std::nullopt;
    const int budget = uniform->k();
    if (budget == 0) return Value(0);
    if (alg == "simple") {
        const int ell = budget / (d + 1);
        return Value(1) - one_minus_inv_pow(budget, ell);
    }
    if (alg == "guess") {
        if (!cert) return std::nullopt;
        ElementSet opt = cert->opt_set;
        for (int u = 0; u < inst.ground_size() && opt.size() < budget; ++u) opt.insert(u);
        int d_prime = 0;
        opt.for_each([&](int u) {
            const ElementSet inside = inst.oracles.sdep.of(u) & opt;
            d_prime = std::max(d_prime, inside.size());
        });
        const int r = budget % (d_prime + 1);
        const int k_prime = budget - r;
        const int ell = k_prime / (d_prime + 1);
        if (k_prime == 0) return Value(0);
        return Value(1) - one_minus_inv_pow(k_prime, ell);
    }
    return std::nullopt;
}

json trace_to_json(const GreedyTrace& trace) {
    json iterations = json::array();
    for (const auto& it : trace.iterations) {
        json ids = json::array();
        it.dep_chosen.for_each([&](int id) { ids.push_back(id); });
        iterations.push_back({{"element", it.element},
                              {"dep", std::move(ids)},
                              {"gain", to_rational_string(it.gain)},
                              {"score", to_rational_string(it.score)},
                              {"value_queries", it.value_queries},
                              {"independence_queries", it.independence_queries}});
    }
    return {{"iterations", std::move(iterations)}};
}

json solution_ids(const ElementSet& s) {
    json out = json::array();
    s.for_each([&](int id) { out.push_back(id); });
    return out;
}

struct SolveOutcome {
    json report;
    bool falsified = false;
};

SolveOutcome solve_instance(const Instance& inst, const std::string& alg, bool want_opt, bool want_audit,
                            const std::string& source_label) {
    SolveOutcome outcome;
    const json inst_json = instance_to_json(inst);
    const std::uint64_t fp = fingerprint(inst_json);

    AlgRun run = run_algorithm(inst, alg);
    run.result.fingerprint = fp;

    json report = {{"schema", 1},
                   {"instance",
                    {{"source", source_label},
                     {"fingerprint", fingerprint_hex(inst_json)},
                     {"n", inst.ground_size()},
                     {"construction", inst.construction}}},
                   {"algorithm", alg},
                   {"solution", solution_ids(run.result.solution)},
                   {"value", to_rational_string(run.result.value)},
                   {"d_used", run.result.d_used},
                   {"queries",
                    {{"value", run.result.value_queries},
                     {"independence", run.result.independence_queries},
                     {"dependency", run.result.dep_queries}}},
                   {"wall_ms", run.wall_ms},
                   {"trace", trace_to_json(run.result.trace)}};
    if (run.result.guess) {
        report["guess"] = {{"u_star", run.result.guess->u_star},
                           {"set", solution_ids(run.result.guess->guessed_set)},
                           {"d_prime", run.result.guess->d_prime},
                           {"r", run.result.guess->r},
                           {"ell", run.result.guess->ell}};
    }

    std::optional<OptCertificate> cert;
    if (want_opt) {
        cert = brute_force_opt(*inst.oracles.f, *inst.system, env_brute_cap());
        cert->fingerprint = fp;
        const Value ratio = approximation_ratio(run.result, *cert);
        report["opt"] = {{"value", to_rational_string(cert->opt_value)},
                         {"set", solution_ids(cert->opt_set)},
                         {"enumerated", cert->enumerated_count}};
        report["ratio"] = to_rational_string(ratio);
        if (const auto bound = theory_bound(inst, alg, run.result, &*cert)) {
            const bool holds = ratio >= *bound;
            report["bound"] = {{"ratio_at_least", to_rational_string(*bound)}, {"holds", holds}};
            if (!holds) outcome.falsified = true;
        }
    }

    if (want_audit) {
        json audits = json::object();
        const int n = inst.ground_size();
        const int hybrid_cap = env_brute_cap().value_or(kDefaultBruteCapGeneral);
        if ((alg == "ext-super" || alg == "ext-dep") && cert) {
            if (n <= hybrid_cap) {
                const auto mode = (alg == "ext-super") ? AuditMode::Supermodular : AuditMode::Dependency;
                const auto hybrid =
                    hybrid_audit(*inst.oracles.f, *inst.system, run.result, *cert, mode, hybrid_cap);
                audits["hybrid"] = {{"ok", hybrid.ok},
                                    {"iterations", hybrid.iterations},
                                    {"failure", hybrid.failure}};
                if (!hybrid.ok) outcome.falsified = true;
            } else {
                audits["hybrid"] = {{"skipped_size_cap", true}};
            }
        }
        const int soundness_cap = env_brute_cap().value_or(12);
        if (n <= soundness_cap) {
            std::vector<ElementSet> dep_sets, sdep_sets;
            for (int u = 0; u < n; ++u) {
                dep_sets.push_back(inst.oracles.dep.of(u));
                sdep_sets.push_back(inst.oracles.sdep.of(u));
            }
            const auto dep_ok =
                dep_soundness_audit(*inst.oracles.f, dep_sets, AuditMode::Dependency, soundness_cap);
            const auto sdep_ok =
                dep_soundness_audit(*inst.oracles.f, sdep_sets, AuditMode::Supermodular, soundness_cap);
            audits["dep_soundness"] = {{"ok", dep_ok.ok && sdep_ok.ok}};
            if (!dep_ok.ok || !sdep_ok.ok) outcome.falsified = true;
        } else {
            audits["dep_soundness"] = {{"skipped_size_cap", true}};
        }
        report["audits"] = std::move(audits);
    }

    outcome.report = std::move(report);
    return outcome;
}

void print_solve_summary(const json& report) {
    std::cout << "instance    " << report["instance"]["source"].get<std::string>() << "  (n="
              << report["instance"]["n"] << ", " << report["instance"]["construction"].get<std::string>()
              << ", fingerprint " << report["instance"]["fingerprint"].get<std::string>() << ")\n";
    std::cout << "algorithm   " << report["algorithm"].get<std::string>() << "\n";
    std::cout << "value       " << report["value"].get<std::string>() << "   |S|="
              << report["solution"].size() << "   d_used=" << report["d_used"] << "\n";
    std::cout << "queries     value=" << report["queries"]["value"]
              << " independence=" << report["queries"]["independence"]
              << " dependency=" << report["queries"]["dependency"] << "\n";
    if (report.contains("opt")) {
        std::cout << "opt         " << report["opt"]["value"].get<std::string>() << "   ratio "
                  << report["ratio"].get<std::string>();
        if (report.contains("bound"))
            std::cout << "   bound " << report["bound"]["ratio_at_least"].get<std::string>()
                      << (report["bound"]["holds"].get<bool>() ? " (holds)" : " (VIOLATED)");
        std::cout << "\n";
    }
    if (report.contains("audits")) {
        std::cout << "audits      ";
        bool first = true;
        for (const auto& [name, body] : report["audits"].items()) {
            if (!first) std::cout << ", ";
            first = false;
            std::cout << name << "=";
            if (body.contains("skipped_size_cap"))
                std::cout << "skipped";
            else
                std::cout << (body["ok"].get<bool>() ? "ok" : "FAILED");
        }
        std::cout << "\n";
    }
}

// ---------------------------------------------------------------------------
// Bench.

Instance instance_from_spec(const json& spec, std::uint64_t seed) {
    const std::string gen = spec.at("gen").get<std::string>();
    if (gen == "random") {
        std::optional<int> k;
        if (spec.contains("k")) k = spec.at("k").get<int>();
        return random_instance(spec.at("n").get<int>(), spec.at("d").get<int>(),
                               parse_constraint(spec.at("constraint").get<std::string>()), seed, k);
    }
    if (gen == "tight-supermodular")
        return build_tight_supermodular(spec.at("k").get<int>(), spec.at("d").get<int>(),
                                        parse_rational(spec.at("eps").get<std::string>()));
    if (gen == "tight-dependency")
        return build_tight_dependency(spec.at("k").get<int>(), spec.at("d").get<int>(),
                                      parse_rational(spec.at("eps").get<std::string>()));
    if (gen == "kdm") {
        Instance inst = reduce_kdm(random_kdm(spec.at("sides").get<int>(), spec.at("vertices").get<int>(),
                                              spec.at("edges").get<int>(), seed),
                                   spec.at("k").get<int>(), spec.at("d").get<int>());
        inst.params["seed"] = std::to_string(seed);
        return inst;
    }
    if (gen == "welfare") {
        Instance inst = welfare_to_instance(random_bidders(spec.at("bidders").get<int>(),
                                                           spec.at("items").get<int>(),
                                                           spec.value("edges_per_bidder", 4), seed));
        inst.params["seed"] = std::to_string(seed);
        return inst;
    }
    if (gen == "graph-uniform") {
        const int nodes = spec.at("nodes").get<int>();
        Instance inst = graph_to_uniform_instance(
            nodes, random_graph(nodes, spec.at("edges").get<int>(), seed),
            parse_rational(spec.at("delta").get<std::string>()));
        inst.params["seed"] = std::to_string(seed);
        return inst;
    }
    throw parameter_error("unknown generator in bench spec: " + gen);
}

std::string spec_label(const json& spec, std::uint64_t seed) {
    std::string out = spec.at("gen").get<std::string>() + "(";
    bool first = true;
    for (const auto& [key, value] : spec.items()) {
        if (key == "gen") continue;
        if (!first) out += ",";
        first = false;
        out += key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    out += (first ? "seed=" : ",seed=") + std::to_string(seed) + ")";
    return out;
}

int run_bench(const std::string& config_path, const std::string& out_prefix) {
    std::ifstream in(config_path);
    if (!in) throw parameter_error("cannot read " + config_path);
    json config;
    try {
        in >> config;
    } catch (const json::exception& e) {
        throw parameter_error(std::string("malformed bench config: ") + e.what());
    }
    const json instances = config.value("instances", json::array());
    std::vector<std::string> algs;
    for (const auto& a : config.value("algs", json::array())) algs.push_back(a.get<std::string>());
    std::vector<std::uint64_t> seeds;
    for (const auto& s : config.value("seeds", json::array())) seeds.push_back(s.get<std::uint64_t>());
    if (seeds.empty()) seeds.push_back(0);
    const bool want_opt = config.value("opt", true);

    std::string csv = "instance,alg,seed,n,k,d,value,opt,ratio,bound,bound_ok,value_queries,"
                      "independence_queries,wall_ms,status\n";
    json rows = json::array();
    int violations = 0, errors = 0;

    for (const auto& spec : instances) {
        for (const std::uint64_t seed : seeds) {
            for (const std::string& alg : algs) {
                const std::string label = spec_label(spec, seed);
                json row = {{"instance", label}, {"alg", alg}, {"seed", seed}};
                std::string status = "ok";
                std::string value_s, opt_s, ratio_s, bound_s, bound_ok;
                int n = 0, k = 0, d = 0;
                std::uint64_t vq = 0, iq = 0;
                std::int64_t ms = 0;
                try {
                    const Instance inst = instance_from_spec(spec, seed);
                    n = inst.ground_size();
                    k = inst.system->extendibility();
                    AlgRun run = run_algorithm(inst, alg);
                    d = run.result.d_used;
                    ms = run.wall_ms;
                    vq = run.result.value_queries;
                    iq = run.result.independence_queries;
                    value_s = to_rational_string(run.result.value);
                    if (want_opt) {
                        const auto cert = brute_force_opt(*inst.oracles.f, *inst.system, env_brute_cap());
                        opt_s = to_rational_string(cert.opt_value);
                        const Value ratio = approximation_ratio(run.result, cert);
                        ratio_s = to_rational_string(ratio);
                        if (const auto bound = theory_bound(inst, alg, run.result, &cert)) {
                            bound_s = to_rational_string(*bound);
                            const bool holds = ratio >= *bound;
                            bound_ok = holds ? "1" : "0";
                            if (!holds) {
                                ++violations;
                                status = "bound-violated";
                            }
                        }
                    }
                } catch (const std::exception& e) {
                    status = std::string("error: ") + e.what();
                    ++errors;
                }
                csv += label + "," + alg + "," + std::to_string(seed) + "," + std::to_string(n) + "," +
                       std::to_string(k) + "," + std::to_string(d) + "," + value_s + "," + opt_s + "," +
                       ratio_s + "," + bound_s + "," + bound_ok + "," + std::to_string(vq) + "," +
                       std::to_string(iq) + "," + std::to_string(ms) + ",\"" + status + "\"\n";
                row["n"] = n;
                row["k"] = k;
                row["d"] = d;
                row["value"] = value_s;
                row["opt"] = opt_s;
                row["ratio"] = ratio_s;
                row["bound"] = bound_s;
                row["bound_ok"] = bound_ok;
                row["value_queries"] = vq;
                row["independence_queries"] = iq;
                row["wall_ms"] = ms;
                row["status"] = status;
                rows.push_back(std::move(row));
            }
        }
    }

    const std::size_t row_count = rows.size();
    write_text(out_prefix + ".csv", csv);
    const json aggregate = {
        {"rows", std::move(rows)},
        {"summary", {{"rows", row_count}, {"violations", violations}, {"errors", errors}}}};
    write_text(out_prefix + ".json", canonical_text(aggregate));
    std::cout << "bench: " << row_count << " rows, " << violations << " violations, " << errors
              << " errors\n";
    return violations > 0 ? kExitFalsified : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"monotone set-function maximization under independence systems"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    gen->require_subcommand(1);
    std::string out_path;

    int ts_k = 1, ts_d = 0;
    std::string ts_eps = "1/10";
    auto* g_ts = gen->add_subcommand("tight-supermodular", "worst case for the supermodular greedy");
    g_ts->add_option("--k", ts_k, "intersection parameter (>= 1)");
    g_ts->add_option("--d", ts_d, "supermodular degree (>= 0)");
    g_ts->add_option("--eps", ts_eps, "bump, a positive rational");
    g_ts->add_option("-o,--output", out_path, "output file (default stdout)");

    int td_k = 1, td_d = 0;
    std::string td_eps = "1/10";
    auto* g_td = gen->add_subcommand("tight-dependency", "worst case for the dependency greedy");
    g_td->add_option("--k", td_k, "intersection parameter (>= 1)");
    g_td->add_option("--d", td_d, "dependency degree (>= 0)");
    g_td->add_option("--eps", td_eps, "bump, a positive rational");
    g_td->add_option("-o,--output", out_path, "output file (default stdout)");

    int kdm_sides = 2, kdm_verts = 3, kdm_edges = 4, kdm_k = 1, kdm_d = 1;
    std::uint64_t kdm_seed = 0;
    auto* g_kdm = gen->add_subcommand("kdm", "random r-dimensional matching, reduced");
    g_kdm->add_option("--sides", kdm_sides, "sides r of the hypergraph");
    g_kdm->add_option("--vertices", kdm_verts, "vertices per side");
    g_kdm->add_option("--edges", kdm_edges, "edge count");
    g_kdm->add_option("--k", kdm_k, "intersection parameter");
    g_kdm->add_option("--d", kdm_d, "degree parameter (r <= k(d+1))");
    g_kdm->add_option("--seed", kdm_seed, "rng seed");
    g_kdm->add_option("-o,--output", out_path, "output file (default stdout)");

    int w_bidders = 2, w_items = 3, w_edges = 4;
    std::uint64_t w_seed = 0;
    auto* g_w = gen->add_subcommand("welfare", "random welfare-maximization instance");
    g_w->add_option("--bidders", w_bidders, "bidder count");
    g_w->add_option("--items", w_items, "item count");
    g_w->add_option("--edges-per-bidder", w_edges, "hyperedges per bidder utility");
    g_w->add_option("--seed", w_seed, "rng seed");
    g_w->add_option("-o,--output", out_path, "output file (default stdout)");

    int gu_nodes = 6, gu_edges = 8;
    std::string gu_delta = "1/2";
    std::uint64_t gu_seed = 0;
    auto* g_gu = gen->add_subcommand("graph-uniform", "random graph, induced-edge objective");
    g_gu->add_option("--nodes", gu_nodes, "vertex count");
    g_gu->add_option("--edges", gu_edges, "edge count");
    g_gu->add_option("--delta", gu_delta, "budget fraction (rational)");
    g_gu->add_option("--seed", gu_seed, "rng seed");
    g_gu->add_option("-o,--output", out_path, "output file (default stdout)");

    int r_n = 8, r_d = 1;
    std::string r_constraint = "uniform";
    std::uint64_t r_seed = 0;
    int r_k = -1;
    auto* g_r = gen->add_subcommand("random", "random bounded-degree monotone hypergraph");
    g_r->add_option("--n", r_n, "ground set size");
    g_r->add_option("--d", r_d, "co-occurrence degree bound");
    g_r->add_option("--constraint", r_constraint, "uniform | partition | intersection2");
    g_r->add_option("--k", r_k, "uniform budget (random when omitted)");
    g_r->add_option("--seed", r_seed, "rng seed");
    g_r->add_option("-o,--output", out_path, "output file (default stdout)");

    // ---- solve ----
    std::string solve_path, solve_alg = "ext-super", report_path;
    bool want_opt = true, want_audit = false;
    auto* solve = app.add_subcommand("solve", "run an algorithm on an instance file");
    solve->add_option("instance", solve_path, "instance JSON file")->required();
    solve->add_option("--alg", solve_alg, "ext-super | ext-dep | simple | guess | brute");
    solve->add_flag("--opt,!--no-opt", want_opt, "also brute-force the optimum (default on)");
    solve->add_flag("--audit", want_audit, "run hybrid and oracle-soundness audits");
    solve->add_option("-o,--output", report_path, "report file (default stdout)");

    // ---- bench ----
    std::string bench_config, bench_prefix = "bench";
    auto* bench = app.add_subcommand("bench", "run an instances x algorithms x seeds matrix");
    bench->add_option("config", bench_config, "bench config JSON")->required();
    bench->add_option("-o,--output", bench_prefix, "output prefix for .csv and .json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (g_ts->parsed()) {
            emit_instance(build_tight_supermodular(ts_k, ts_d, parse_rational(ts_eps)), out_path);
        } else if (g_td->parsed()) {
            emit_instance(build_tight_dependency(td_k, td_d, parse_rational(td_eps)), out_path);
        } else if (g_kdm->parsed()) {
            Instance inst = reduce_kdm(random_kdm(kdm_sides, kdm_verts, kdm_edges, kdm_seed), kdm_k, kdm_d);
            inst.params["seed"] = std::to_string(kdm_seed);
            emit_instance(inst, out_path);
        } else if (g_w->parsed()) {
            Instance inst = welfare_to_instance(random_bidders(w_bidders, w_items, w_edges, w_seed));
            inst.params["seed"] = std::to_string(w_seed);
            emit_instance(inst, out_path);
        } else if (g_gu->parsed()) {
            Instance inst = graph_to_uniform_instance(gu_nodes, random_graph(gu_nodes, gu_edges, gu_seed),
                                                      parse_rational(gu_delta));
            inst.params["seed"] = std::to_string(gu_seed);
            emit_instance(inst, out_path);
        } else if (g_r->parsed()) {
            std::optional<int> k;
            if (r_k >= 0) k = r_k;
            emit_instance(random_instance(r_n, r_d, parse_constraint(r_constraint), r_seed, k), out_path);
        } else if (solve->parsed()) {
            if (want_audit && !want_opt)
                throw parameter_error("--audit needs the optimum; drop --no-opt");
            const Instance inst = load_instance(solve_path);
            const SolveOutcome outcome = solve_instance(inst, solve_alg, want_opt, want_audit, solve_path);
            print_solve_summary(outcome.report);
            write_text(report_path, canonical_text(outcome.report));
            return outcome.falsified ? kExitFalsified : kExitOk;
        } else if (bench->parsed()) {
            return run_bench(bench_config, bench_prefix);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
