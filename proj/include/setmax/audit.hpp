#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "setmax/element_set.hpp"
#include "setmax/greedy.hpp"
#include "setmax/independence.hpp"
#include "setmax/oracles.hpp"
#include "setmax/rational.hpp"

namespace setmax {

inline constexpr int kDefaultBruteCapMatroid = 20; // uniform / partition
inline constexpr int kDefaultBruteCapGeneral = 14;

struct OptCertificate {
    ElementSet opt_set;
    Value opt_value;
    std::uint64_t enumerated_count = 0; // independent sets visited
    std::optional<std::uint64_t> fingerprint;
};

/// Exhaustive maximization of f over the independence system by depth-first
/// search from the empty set, pruning at dependent extensions (sound because
/// the family is hereditary). Ties break toward the lexicographically
/// smallest set. Caps: 20 for uniform/partition systems, 14 otherwise,
/// overridable.
OptCertificate brute_force_opt(const SetFunction& f, const IndependenceSystem& sys,
                               std::optional<int> cap_override = {});

/// value / opt_value as an exact rational; 1 when opt_value = 0. Throws
/// parameter_error when both sides carry fingerprints and they differ.
Value approximation_ratio(const SolveResult& result, const OptCertificate& cert);

enum class AuditMode { Supermodular, Dependency };

struct HybridAuditReport {
    bool ok = true;
    int iterations = 0;
    std::vector<ElementSet> hybrids; // H_0 .. H_l
    std::string failure;             // empty when ok
};

/// Replays the hybrid argument against a traced run of the extendible greedy:
/// H_0 extends OPT to a base (ascending-id augmentation); each H_i is the
/// maximum-size independent subset of H_{i-1} u S_i containing S_i
/// (lexicographically smallest among maximum ones). Checks at every i:
///   |H_{i-1} \ H_i| <= k |S_i \ H_{i-1}|  and  |S_i \ H_{i-1}| <= d+1,
///   f(H_{i-1}) - f(H_i) <= C * score_i
/// with C = k(d+1) in Supermodular mode and C = k(d+1) - 1 in Dependency
/// mode, and finally H_l = S_l. k is the system's extendibility parameter and
/// d the degree bound the run assumed. An inequality violation is reported as
/// a finding, never swallowed.
HybridAuditReport hybrid_audit(const SetFunction& f, const IndependenceSystem& sys,
                               const SolveResult& run, const OptCertificate& cert, AuditMode mode,
                               int cap = kDefaultBruteCapGeneral);

struct DepSoundnessReport {
    bool ok = true;
    // (u, v, S): v outside the claimed set of u, yet f(u|S+v) raises (or, in
    // Dependency mode, changes) f(u|S).
    std::optional<std::tuple<int, int, ElementSet>> witness;
};

/// Exhaustively certifies that oracle_sets are sound for f: for every u,
/// every v outside oracle_sets[u], and every S over the rest,
///   Supermodular mode: f(u|S+v) <= f(u|S)
///   Dependency mode:   f(u|S+v) == f(u|S).
DepSoundnessReport dep_soundness_audit(const SetFunction& f, const std::vector<ElementSet>& oracle_sets,
                                       AuditMode mode, int cap = 12);

} // namespace setmax
