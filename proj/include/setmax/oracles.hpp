#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "setmax/element_set.hpp"
#include "setmax/rational.hpp"
#include "setmax/set_function.hpp"

namespace setmax {

/// Default cap for routines that enumerate all 2^n subsets.
inline constexpr int kDefaultDegreeCap = 16;

/// All 2^n values of f, indexed by member bitmask. Building it issues 2^n
/// value queries; the exhaustive degree/audit routines below run off the
/// table so each marginal test costs two lookups instead of four queries.
class ValueTable {
public:
    ValueTable(const SetFunction& f, int cap = kDefaultDegreeCap);

    int n() const { return n_; }
    const Value& at_mask(std::uint64_t mask) const { return vals_[mask]; }
    const Value& at(const ElementSet& s) const { return vals_[s.mask64()]; }

    /// f(u | S) for u not in S (by mask).
    Value marginal(std::uint64_t set_mask, int u) const {
        return vals_[set_mask | (std::uint64_t{1} << u)] - vals_[set_mask];
    }

private:
    int n_;
    std::vector<Value> vals_;
};

/// Exact dependency set D(u): all v whose presence can change u's marginal,
/// found by exhaustive enumeration of every S over the remaining elements.
ElementSet exact_dependency_set(const SetFunction& f, int u, int cap = kDefaultDegreeCap);

/// Exact supermodular dependency set D+(u): all v whose presence can strictly
/// increase u's marginal.
ElementSet exact_supermodular_set(const SetFunction& f, int u, int cap = kDefaultDegreeCap);

/// All exact dependency (resp. supermodular) sets at once, sharing one value
/// table across elements.
std::vector<ElementSet> exact_dependency_sets(const SetFunction& f, int cap = kDefaultDegreeCap);
std::vector<ElementSet> exact_supermodular_sets(const SetFunction& f, int cap = kDefaultDegreeCap);

/// max_u |D(u)| and max_u |D+(u)|.
int dependency_degree(const SetFunction& f, int cap = kDefaultDegreeCap);
int supermodular_degree(const SetFunction& f, int cap = kDefaultDegreeCap);

struct MonotoneReport {
    bool monotone = true;
    // First violating pair: f(set + element) < f(set).
    std::optional<std::pair<ElementSet, int>> witness;
};

/// Monotonicity check: exhaustive over all (S, u) pairs when n <= 14, else
/// `trials` random permutation chains under `seed`. A violation is a result,
/// never an error.
MonotoneReport check_monotone(const SetFunction& f, int trials = 64, std::uint64_t seed = 0);

/// Dependency-style oracle: u -> a fixed ElementSet. The stored sets may be
/// safe supersets of the true dependency/supermodular sets; correctness of
/// every consumer only needs that elements OUTSIDE the returned set cannot
/// change (resp. raise) marginals. Lookups are counted.
class DepOracle {
public:
    DepOracle() = default;
    explicit DepOracle(std::vector<ElementSet> sets);

    DepOracle(const DepOracle& o);
    DepOracle& operator=(const DepOracle& o);

    int ground_size() const { return static_cast<int>(sets_.size()); }
    const ElementSet& of(int u) const;

    /// max_u |sets(u)|: the degree bound d a solver run assumes.
    int max_set_size() const;

    std::uint64_t queries() const { return queries_.load(std::memory_order_relaxed); }

private:
    std::vector<ElementSet> sets_;
    mutable std::atomic<std::uint64_t> queries_{0};
};

/// Value + dependency + supermodular oracles for one problem instance.
/// Invariant (checked): sdep(u) subset-of dep(u) subset-of ground - u.
struct OracleBundle {
    std::shared_ptr<const SetFunction> f;
    DepOracle dep;
    DepOracle sdep;

    OracleBundle() = default;
    OracleBundle(std::shared_ptr<const SetFunction> fn, std::vector<ElementSet> dep_sets,
                 std::vector<ElementSet> sdep_sets);
};

} // namespace setmax
