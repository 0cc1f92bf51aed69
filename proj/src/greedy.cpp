#include "setmax/greedy.hpp"

#include <algorithm>
#include <bit>

#include "setmax/errors.hpp"

namespace setmax {

namespace {

constexpr int kMaxDepPoolBits = 25;

bool pair_beats(const Value& score, int u, const ElementSet& d, const PairChoice& best) {
    if (score != best.score) return score > best.score;
    if (u != best.element) return u < best.element;
    return ElementSet::lex_compare(d, best.dep_set) < 0;
}

struct QuerySnapshot {
    std::uint64_t value;
    std::uint64_t independence;
};

QuerySnapshot snap(const SetFunction& f, const IndependenceSystem& sys) {
    return {f.value_queries(), sys.independence_queries()};
}

} // namespace

std::optional<PairChoice> best_pair(const SetFunction& f, const IndependenceSystem& sys,
                                    const ElementSet& current, const Value& current_value,
                                    const ElementSet& candidates, const DepOracle& dep_of,
                                    PairObjective objective, std::optional<int> size_cap) {
    std::optional<PairChoice> best;
    candidates.for_each([&](int u) {
        if (current.contains(u)) return;
        const std::vector<int> pool = (dep_of.of(u) - current).to_vector();
        if (pool.size() > kMaxDepPoolBits)
            throw size_limit_error("best_pair: dependency pool of " + std::to_string(pool.size()) +
                                   " elements is past the exhaustive-search limit");
        const std::uint64_t subsets = std::uint64_t{1} << pool.size();
        for (std::uint64_t m = 0; m < subsets; ++m) {
            if (size_cap && std::popcount(m) > *size_cap) continue;
            ElementSet d;
            for (std::size_t b = 0; b < pool.size(); ++b)
                if ((m >> b) & 1u) d.insert(pool[b]);
            ElementSet extended = current | d;
            extended.insert(u);
            if (!sys.is_independent(extended)) continue;
            PairChoice cand;
            cand.element = u;
            cand.dep_set = d;
            cand.new_value = f.evaluate(extended);
            cand.joint_gain = cand.new_value - current_value;
            if (objective == PairObjective::Joint) {
                cand.score = cand.joint_gain;
            } else {
                cand.score = cand.new_value - f.evaluate(current | d);
            }
            if (!best || pair_beats(cand.score, u, d, *best)) best = std::move(cand);
        }
    });
    return best;
}

namespace {

SolveResult run_extendible(const SetFunction& f, const IndependenceSystem& sys, const DepOracle& oracle,
                           PairObjective objective) {
    SolveResult out;
    out.d_used = oracle.max_set_size();
    const auto run_start = snap(f, sys);
    const std::uint64_t dep_start = oracle.queries();
    const ElementSet everyone = ElementSet::all(f.ground_size());

    ElementSet s;
    Value v = f.evaluate(s);
    out.trace.sets.push_back(s);
    while (true) {
        const auto before = snap(f, sys);
        auto pick = best_pair(f, sys, s, v, everyone, oracle, objective);
        if (!pick) break; // S is a base: no independent extension exists
        const auto after = snap(f, sys);
        s |= pick->dep_set;
        s.insert(pick->element);
        IterationRecord rec;
        rec.element = pick->element;
        rec.dep_chosen = pick->dep_set;
        rec.score = pick->score;
        rec.gain = pick->joint_gain;
        rec.value_queries = after.value - before.value;
        rec.independence_queries = after.independence - before.independence;
        out.trace.iterations.push_back(std::move(rec));
        out.trace.sets.push_back(s);
        v = pick->new_value;
    }
    out.solution = s;
    out.value = v;
    const auto run_end = snap(f, sys);
    out.value_queries = run_end.value - run_start.value;
    out.independence_queries = run_end.independence - run_start.independence;
    out.dep_queries = oracle.queries() - dep_start;
    return out;
}

} // namespace

SolveResult extendible_greedy_supermodular(const SetFunction& f, const IndependenceSystem& sys,
                                           const DepOracle& sdep) {
    return run_extendible(f, sys, sdep, PairObjective::Joint);
}

SolveResult extendible_greedy_dependency(const SetFunction& f, const IndependenceSystem& sys,
                                         const DepOracle& dep) {
    return run_extendible(f, sys, dep, PairObjective::Conditional);
}

SolveResult simple_greedy_uniform(const SetFunction& f, int k, const DepOracle& sdep) {
    if (k < 0) throw parameter_error("simple_greedy_uniform: k must be >= 0");
    const int n = f.ground_size();
    SolveResult out;
    out.d_used = sdep.max_set_size();
    const int d = out.d_used;
    const UniformMatroid budget(n, k);
    const auto run_start = snap(f, budget);
    const std::uint64_t dep_start = sdep.queries();

    ElementSet s;
    Value v = f.evaluate(s);
    out.trace.sets.push_back(s);
    const int ell = k / (d + 1);
    for (int i = 0; i < ell; ++i) {
        // Whole-set steps: D is forced to sdep(u) \ S, so feasibility holds by
        // the iteration count and no independence queries are issued.
        const auto before = snap(f, budget);
        std::optional<PairChoice> best;
        for (int u = 0; u < n; ++u) {
            if (s.contains(u)) continue;
            const ElementSet d_set = sdep.of(u) - s;
            ElementSet extended = s | d_set;
            extended.insert(u);
            PairChoice cand;
            cand.element = u;
            cand.dep_set = d_set;
            cand.new_value = f.evaluate(extended);
            cand.joint_gain = cand.new_value - v;
            cand.score = cand.joint_gain;
            if (!best || pair_beats(cand.score, u, d_set, *best)) best = std::move(cand);
        }
        if (!best) break; // ground set exhausted
        const auto after = snap(f, budget);
        s |= best->dep_set;
        s.insert(best->element);
        IterationRecord rec;
        rec.element = best->element;
        rec.dep_chosen = best->dep_set;
        rec.score = best->score;
        rec.gain = best->joint_gain;
        rec.value_queries = after.value - before.value;
        rec.independence_queries = 0;
        out.trace.iterations.push_back(std::move(rec));
        out.trace.sets.push_back(s);
        v = best->new_value;
    }
    if (s.size() < k) {
        // One completion step; the pair (element + set) fits the leftover budget.
        const auto before = snap(f, budget);
        auto pick = best_pair(f, budget, s, v, ElementSet::all(n), sdep, PairObjective::Joint,
                              k - s.size() - 1);
        if (pick) {
            const auto after = snap(f, budget);
            s |= pick->dep_set;
            s.insert(pick->element);
            IterationRecord rec;
            rec.element = pick->element;
            rec.dep_chosen = pick->dep_set;
            rec.score = pick->score;
            rec.gain = pick->joint_gain;
            rec.value_queries = after.value - before.value;
            rec.independence_queries = after.independence - before.independence;
            out.trace.iterations.push_back(std::move(rec));
            out.trace.sets.push_back(s);
            v = pick->new_value;
        }
    }
    out.solution = s;
    out.value = v;
    const auto run_end = snap(f, budget);
    out.value_queries = run_end.value - run_start.value;
    out.independence_queries = run_end.independence - run_start.independence;
    out.dep_queries = sdep.queries() - dep_start;
    return out;
}

namespace {

// Ascending-cardinality, lexicographic-within-cardinality walk over the
// nonempty subsets of `pool` (pool already ascending).
template <typename Fn>
void for_each_guess_subset(const std::vector<int>& pool, Fn&& fn) {
    const int p = static_cast<int>(pool.size());
    std::vector<int> idx;
    for (int c = 1; c <= p; ++c) {
        idx.assign(static_cast<std::size_t>(c), 0);
        for (int i = 0; i < c; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            ElementSet chosen;
            for (int i : idx) chosen.insert(pool[static_cast<std::size_t>(i)]);
            fn(chosen);
            int i = c - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - c + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < c; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

struct GuessRun {
    ElementSet solution;
    Value value;
    GreedyTrace trace;
    GuessInfo info;
};

GuessRun run_one_guess(const SetFunction& f, const UniformMatroid& budget, const DepOracle& sdep, int k,
                       int u_star, const ElementSet& guessed_c) {
    GuessRun run;
    run.info.u_star = u_star;
    run.info.guessed_set = guessed_c;
    run.info.d_prime = guessed_c.size();
    run.info.r = k % (run.info.d_prime + 1);
    run.info.ell = (k - run.info.r) / (run.info.d_prime + 1);

    ElementSet s;
    {
        int taken = 0;
        guessed_c.for_each([&](int id) {
            if (taken < run.info.r) {
                s.insert(id);
                ++taken;
            }
        });
    }
    Value v = f.evaluate(s);
    run.trace.sets.push_back(s);
    const ElementSet everyone = ElementSet::all(f.ground_size());
    for (int i = 0; i < run.info.ell; ++i) {
        const auto before = snap(f, budget);
        auto pick = best_pair(f, budget, s, v, everyone, sdep, PairObjective::Joint, run.info.d_prime);
        if (!pick) break;
        const auto after = snap(f, budget);
        s |= pick->dep_set;
        s.insert(pick->element);
        IterationRecord rec;
        rec.element = pick->element;
        rec.dep_chosen = pick->dep_set;
        rec.score = pick->score;
        rec.gain = pick->joint_gain;
        rec.value_queries = after.value - before.value;
        rec.independence_queries = after.independence - before.independence;
        run.trace.iterations.push_back(std::move(rec));
        run.trace.sets.push_back(s);
        v = pick->new_value;
    }
    run.solution = s;
    run.value = v;
    return run;
}

} // namespace

SolveResult guess_greedy_uniform(const SetFunction& f, int k, const DepOracle& sdep) {
    if (k < 0) throw parameter_error("guess_greedy_uniform: k must be >= 0");
    const int n = f.ground_size();
    SolveResult out;
    out.d_used = sdep.max_set_size();
    const UniformMatroid budget(n, k);
    const auto run_start = snap(f, budget);
    const std::uint64_t dep_start = sdep.queries();

    if (k == 0 || n == 0) {
        out.value = f.evaluate(ElementSet{});
        out.trace.sets.push_back(ElementSet{});
        out.guess = GuessInfo{};
        out.value_queries = f.value_queries() - run_start.value;
        return out;
    }

    std::optional<GuessRun> best;
    auto consider = [&](GuessRun run) {
        if (!best || run.value > best->value) best = std::move(run);
    };
    // The degenerate guess C = {} runs identically for every u*, so it is
    // enumerated once, first.
    consider(run_one_guess(f, budget, sdep, k, -1, ElementSet{}));
    for (int u_star = 0; u_star < n; ++u_star) {
        const std::vector<int> pool = sdep.of(u_star).to_vector();
        if (pool.size() > kMaxDepPoolBits)
            throw size_limit_error("guess_greedy_uniform: supermodular set too large to guess over");
        for_each_guess_subset(pool, [&](const ElementSet& c) {
            consider(run_one_guess(f, budget, sdep, k, u_star, c));
        });
    }

    out.solution = best->solution;
    out.value = best->value;
    out.trace = std::move(best->trace);
    out.guess = best->info;
    const auto run_end = snap(f, budget);
    out.value_queries = run_end.value - run_start.value;
    out.independence_queries = run_end.independence - run_start.independence;
    out.dep_queries = sdep.queries() - dep_start;
    return out;
}

} // namespace setmax
