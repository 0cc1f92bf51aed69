#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "setmax/element_set.hpp"
#include "setmax/rational.hpp"

namespace setmax {

enum class SystemKind { Uniform, Partition, Intersection, Custom };

/// Independence-oracle contract over a hereditary family I of subsets of
/// {0..n-1}. Systems are immutable; membership queries are pure and counted
/// atomically. Hereditariness is the constructor's contract for Custom kinds
/// and is verified by brute force in tests, never assumed blindly elsewhere.
class IndependenceSystem {
public:
    virtual ~IndependenceSystem() = default;

    int ground_size() const { return n_; }
    SystemKind kind() const { return kind_; }

    /// Membership S in I; one independence query.
    bool is_independent(const ElementSet& s) const;

    /// The k for which this system is known to be k-extendible: 1 for a
    /// matroid, the sum over constituents for an intersection, caller-declared
    /// for Custom.
    virtual int extendibility() const = 0;

    std::uint64_t independence_queries() const { return queries_.load(std::memory_order_relaxed); }

protected:
    IndependenceSystem(int n, SystemKind kind);
    virtual bool contains(const ElementSet& s) const = 0;

private:
    int n_;
    SystemKind kind_;
    mutable std::atomic<std::uint64_t> queries_{0};
};

/// |S| <= k.
class UniformMatroid : public IndependenceSystem {
public:
    UniformMatroid(int n, int k);
    int k() const { return k_; }
    int extendibility() const override { return 1; }

protected:
    bool contains(const ElementSet& s) const override;

private:
    int k_;
};

/// At most capacity[i] elements from part i; parts are pairwise disjoint and
/// need not cover the ground set — uncovered elements are unconstrained.
class PartitionMatroid : public IndependenceSystem {
public:
    PartitionMatroid(int n, std::vector<ElementSet> parts, std::vector<int> capacities);
    /// All capacities 1.
    PartitionMatroid(int n, std::vector<ElementSet> parts);

    const std::vector<ElementSet>& parts() const { return parts_; }
    const std::vector<int>& capacities() const { return capacities_; }
    int extendibility() const override { return 1; }

protected:
    bool contains(const ElementSet& s) const override;

private:
    std::vector<ElementSet> parts_;
    std::vector<int> capacities_;
};

/// S independent iff independent in every constituent system.
class IntersectionSystem : public IndependenceSystem {
public:
    IntersectionSystem(int n, std::vector<std::shared_ptr<const IndependenceSystem>> systems);
    const std::vector<std::shared_ptr<const IndependenceSystem>>& constituents() const { return systems_; }
    int extendibility() const override;

protected:
    bool contains(const ElementSet& s) const override;

private:
    std::vector<std::shared_ptr<const IndependenceSystem>> systems_;
};

/// Oracle-backed system. Hereditariness (and the declared extendibility) are
/// the caller's contract.
class CustomSystem : public IndependenceSystem {
public:
    CustomSystem(int n, std::function<bool(const ElementSet&)> oracle, int extendibility_hint);
    int extendibility() const override { return extendibility_; }

protected:
    bool contains(const ElementSet& s) const override;

private:
    std::function<bool(const ElementSet&)> oracle_;
    int extendibility_;
};

/// True iff S is independent and no element outside S extends it. Candidate
/// elements are scanned in ascending id with short-circuit, so the query
/// count is deterministic and at most n.
/// Throws parameter_error when S itself is not independent.
bool is_base(const IndependenceSystem& sys, const ElementSet& s);

struct HereditaryReport {
    bool hereditary = true;
    std::optional<std::pair<ElementSet, int>> witness; // (S in I, u in S) with S - u not in I
};

struct ExtendibleReport {
    bool extendible = true;
    // (S, T, u): T subset of S in I, T + u in I, but no Y subset of S \ T with
    // |Y| <= k and S \ Y + u in I.
    std::optional<std::tuple<ElementSet, ElementSet, int>> witness;
};

struct MatroidReport {
    bool matroid = true;
    std::optional<std::pair<ElementSet, ElementSet>> witness; // (S, T) failing augmentation
};

/// Exhaustive checks over all of 2^n; capped.
HereditaryReport verify_hereditary(const IndependenceSystem& sys, int cap = 14);
ExtendibleReport verify_k_extendible(const IndependenceSystem& sys, int k, int cap = 14);
MatroidReport verify_matroid(const IndependenceSystem& sys, int cap = 14);

/// (largest base of S) / (smallest base of S), bases enumerated exhaustively;
/// 1 by convention when the only base is empty. Always >= 1.
Value k_system_ratio(const IndependenceSystem& sys, const ElementSet& s, int cap = 14);

/// max over every S subset of the ground set.
Value k_system_ratio_global(const IndependenceSystem& sys, int cap = 14);

} // namespace setmax
