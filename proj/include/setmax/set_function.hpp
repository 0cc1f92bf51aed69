#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "setmax/element_set.hpp"
#include "setmax/rational.hpp"

namespace setmax {

/// Value-oracle interface for a set function f : 2^{0..n-1} -> Q. Evaluation
/// is pure and safe to call concurrently; only the query counter mutates
/// (atomically). Marginals f(u|S) and f(T|S) are derived here so every
/// backend gets identical query accounting.
class SetFunction {
public:
    virtual ~SetFunction() = default;

    int ground_size() const { return n_; }

    /// f(S). Validates S against the ground set, counts one value query.
    Value evaluate(const ElementSet& s) const;

    /// f(u | S) = f(S + u) - f(S); returns 0 without queries when u is in S.
    Value marginal_element(int u, const ElementSet& s) const;

    /// f(T | S) = f(S u T) - f(S); returns 0 without queries when T \ S is empty.
    Value marginal_set(const ElementSet& t, const ElementSet& s) const;

    std::uint64_t value_queries() const { return queries_.load(std::memory_order_relaxed); }

protected:
    explicit SetFunction(int n);
    virtual Value value_of(const ElementSet& s) const = 0;

private:
    void check_members(const ElementSet& s) const;
    int n_;
    mutable std::atomic<std::uint64_t> queries_{0};
};

/// Weighted-hyperedge representation of a set function:
/// f(S) = sum of w(e) over hyperedges e with e a subset of S. Empty edges are
/// rejected so f(empty) = 0; duplicate member sets are rejected. Negative
/// weights are allowed (monotonicity is checked elsewhere, never assumed).
class HypergraphFunction : public SetFunction {
public:
    struct Edge {
        ElementSet members;
        Value weight;
    };

    HypergraphFunction(int n, std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }

    /// Elements co-occurring with u in some nonzero-weight edge. A sound
    /// superset of both the dependency set D(u) and the supermodular set
    /// D+(u): every element outside it leaves u's marginal unchanged.
    const ElementSet& dep_superset(int u) const;

protected:
    Value value_of(const ElementSet& s) const override;

private:
    std::vector<Edge> edges_;
    std::vector<ElementSet> cooccur_; // per element, excludes the element itself
};

/// Free-function spellings for the hypergraph oracle surface.
inline Value evaluate(const HypergraphFunction& f, const ElementSet& s) { return f.evaluate(s); }
inline ElementSet hypergraph_dep_superset(const HypergraphFunction& f, int u) { return f.dep_superset(u); }

} // namespace setmax
