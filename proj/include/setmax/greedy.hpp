#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setmax/element_set.hpp"
#include "setmax/independence.hpp"
#include "setmax/oracles.hpp"
#include "setmax/rational.hpp"

namespace setmax {

/// Selection objective of a greedy step.
///  Joint:       score(u, D) = f(D + u | S)        (supermodular-degree greedy)
///  Conditional: score(u, D) = f(u | D u S)        (dependency-degree greedy)
enum class PairObjective { Joint, Conditional };

struct IterationRecord {
    int element = -1;        // u_i
    ElementSet dep_chosen;   // D, drawn from the oracle set of u_i minus S_{i-1}
    Value score;             // objective value that won the selection
    Value gain;              // f(S_i) - f(S_{i-1}); equals score for Joint steps
    std::uint64_t value_queries = 0;
    std::uint64_t independence_queries = 0;
};

struct GreedyTrace {
    std::vector<ElementSet> sets; // S_0 .. S_l
    std::vector<IterationRecord> iterations;
};

/// The guess that produced Guess Greedy's returned run.
struct GuessInfo {
    int u_star = -1;        // -1 for the degenerate empty guess
    ElementSet guessed_set; // C
    int d_prime = 0;        // |C|
    int r = 0;              // k mod (d' + 1)
    int ell = 0;            // (k - r) / (d' + 1)
};

struct SolveResult {
    ElementSet solution;
    Value value;
    GreedyTrace trace;
    int d_used = 0; // degree bound the solver assumed: max oracle-set size
    std::uint64_t value_queries = 0;
    std::uint64_t independence_queries = 0;
    std::uint64_t dep_queries = 0;
    std::optional<GuessInfo> guess;
    std::optional<std::uint64_t> fingerprint; // instance content hash, set by the caller
};

struct PairChoice {
    int element = -1;
    ElementSet dep_set;
    Value score;
    Value joint_gain; // f(S u D + u) - f(S)
    Value new_value;  // f(S u D + u)
};

/// Exhaustive search over pairs (u, D): u ranges over candidates \ S, D over
/// subsets of dep_of(u) \ S with |D| <= size_cap (if given), keeping only
/// pairs with S u D + u independent. Ties break by (score, smallest u,
/// lexicographically smallest D), making every solver trace deterministic.
/// `current_value` is f(S), supplied by the caller so Joint steps cost one
/// value query per feasible pair. Returns nothing iff S is a base.
std::optional<PairChoice> best_pair(const SetFunction& f, const IndependenceSystem& sys,
                                    const ElementSet& current, const Value& current_value,
                                    const ElementSet& candidates, const DepOracle& dep_of,
                                    PairObjective objective, std::optional<int> size_cap = {});

/// Greedy over a hereditary system guided by a supermodular oracle: while S
/// is not a base, add the pair (u, D), D within sdep(u), maximizing
/// f(D + u | S). Output is always a base. Guarantee, for a k-extendible
/// system and d = max |sdep(u)|: value >= OPT / (k(d+1) + 1).
SolveResult extendible_greedy_supermodular(const SetFunction& f, const IndependenceSystem& sys,
                                           const DepOracle& sdep);

/// Same loop with the conditional objective f(u | D u S) over the full
/// dependency oracle. Guarantee: value >= OPT / (k(d+1)).
SolveResult extendible_greedy_dependency(const SetFunction& f, const IndependenceSystem& sys,
                                         const DepOracle& dep);

/// Uniform-matroid greedy: floor(k/(d+1)) iterations each adding the whole
/// set sdep(u) + u with the joint objective, then one completion step capped
/// to the remaining budget when |S| < k.
SolveResult simple_greedy_uniform(const SetFunction& f, int k, const DepOracle& sdep);

/// Uniform-matroid greedy with exhaustive guessing of (u*, C within
/// sdep(u*)); each guess seeds S_0 with the r = k mod (|C|+1) smallest ids of
/// C and runs (k-r)/(|C|+1) joint steps with |D| <= |C|. Returns the
/// best-valued run; first guess in enumeration order wins ties.
SolveResult guess_greedy_uniform(const SetFunction& f, int k, const DepOracle& sdep);

} // namespace setmax
