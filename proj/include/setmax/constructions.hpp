#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "setmax/instance.hpp"
#include "setmax/set_function.hpp"

namespace setmax {

/// Objective of the supermodular tight example: points of a (k+1)-dimensional
/// grid; f'(S) counts the distinct last-coordinate rows hit by S, capped at
/// one per row, and f adds eps exactly when all d+1 "hat" points are present.
/// min-capped row counting is not a bounded-rank hypergraph, so this ships as
/// a direct value oracle with its certified supermodular sets attached.
class TightSupermodularFunction : public SetFunction {
public:
    TightSupermodularFunction(int k, int d, Value eps, std::vector<int> rows, ElementSet hats);

    int rows_total() const { return rows_total_; }
    int row_of(int u) const { return rows_[static_cast<std::size_t>(u)]; }
    const ElementSet& hats() const { return hats_; }
    const Value& eps() const { return eps_; }

protected:
    Value value_of(const ElementSet& s) const override;

private:
    Value eps_;
    int rows_total_;
    std::vector<int> rows_; // last coordinate per element
    ElementSet hats_;
};

/// Objective of the dependency tight example: counts u-type elements, plus
/// eps when the hat element and all of v_1..v_d are present.
class TightDependencyFunction : public SetFunction {
public:
    TightDependencyFunction(int n, Value eps, ElementSet u_elements, int hat, ElementSet bump_vs);

    const ElementSet& u_elements() const { return u_elements_; }
    int hat() const { return hat_; }
    const ElementSet& bump_vs() const { return bump_vs_; }
    const Value& eps() const { return eps_; }

protected:
    Value value_of(const ElementSet& s) const override;

private:
    Value eps_;
    ElementSet u_elements_;
    int hat_;
    ElementSet bump_vs_;
};

/// Tight example for the supermodular-degree greedy over a k-intersection
/// system: the greedy output is worth exactly 1 + eps while the certified
/// independent set S* is worth k(d+1) + 1.
Instance build_tight_supermodular(int k, int d, const Value& eps);

/// Tight example for the dependency-degree greedy: greedy gets 1 + eps, the
/// certified set k(d+1).
Instance build_tight_dependency(int k, int d, const Value& eps);

/// r-sided hypergraph: every edge holds exactly one vertex of each side.
struct KdmHypergraph {
    int sides = 0;
    std::vector<std::vector<int>> edges; // edge -> vertex id per side
};

/// Encodes r-dimensional matching as monotone maximization over a
/// k-intersection system with r <= k(d+1): every edge splits into d+1 block
/// elements (one ground element per (edge, block) pair), the objective pays 1
/// per fully-selected edge, and k partition matroids forbid two splits
/// sharing a side vertex. Sides are padded to k(d+1) with per-edge dummy
/// vertices. The instance optimum equals the maximum matching size.
Instance reduce_kdm(const KdmHypergraph& graph, int k, int d);

/// One bidder's utility over items 0..items-1, as a hypergraph.
struct BidderUtility {
    int items = 0;
    std::vector<HypergraphFunction::Edge> edges;
};

/// Welfare maximization: ground set of (bidder, item) pairs, a partition
/// matroid giving each item to at most one bidder, and the summed lifted
/// utilities as the objective. Utilities must be monotone.
Instance welfare_to_instance(const std::vector<BidderUtility>& bidders);

/// Induced-edge-count objective (unit weight per graph edge) under a uniform
/// matroid of rank floor(delta * |V|).
Instance graph_to_uniform_instance(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                                   const Value& delta);

enum class RandomConstraint { Uniform, Partition, TwoIntersection };

/// Random monotone hypergraph whose rank >= 2 edges stay inside disjoint
/// groups of at most d+1 elements, so every co-occurrence set has at most d
/// members. Deterministic for a fixed seed.
Instance random_instance(int n, int d, RandomConstraint constraint, std::uint64_t seed,
                         std::optional<int> uniform_k = {});

} // namespace setmax
