#include "setmax/independence.hpp"

#include <algorithm>
#include <bit>

#include "setmax/errors.hpp"

namespace setmax {

IndependenceSystem::IndependenceSystem(int n, SystemKind kind) : n_(n), kind_(kind) {
    if (n < 0) throw parameter_error("ground set size must be >= 0");
}

bool IndependenceSystem::is_independent(const ElementSet& s) const {
    if (s.max_element() >= n_)
        throw invalid_instance_error("independence query with element outside ground set");
    queries_.fetch_add(1, std::memory_order_relaxed);
    return contains(s);
}

UniformMatroid::UniformMatroid(int n, int k) : IndependenceSystem(n, SystemKind::Uniform), k_(k) {
    if (k < 0) throw parameter_error("uniform matroid rank must be >= 0");
}

bool UniformMatroid::contains(const ElementSet& s) const { return s.size() <= k_; }

PartitionMatroid::PartitionMatroid(int n, std::vector<ElementSet> parts, std::vector<int> capacities)
    : IndependenceSystem(n, SystemKind::Partition), parts_(std::move(parts)), capacities_(std::move(capacities)) {
    if (parts_.size() != capacities_.size())
        throw invalid_instance_error("partition matroid: one capacity per part required");
    ElementSet seen;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].max_element() >= n)
            throw invalid_instance_error("partition matroid: part member outside ground set");
        if (parts_[i].intersects(seen))
            throw invalid_instance_error("partition matroid: parts must be pairwise disjoint");
        if (capacities_[i] < 0) throw invalid_instance_error("partition matroid: negative capacity");
        seen |= parts_[i];
    }
}

PartitionMatroid::PartitionMatroid(int n, std::vector<ElementSet> parts)
    : PartitionMatroid(n, parts, std::vector<int>(parts.size(), 1)) {}

bool PartitionMatroid::contains(const ElementSet& s) const {
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (s.intersection_size(parts_[i]) > capacities_[i]) return false;
    return true;
}

IntersectionSystem::IntersectionSystem(int n, std::vector<std::shared_ptr<const IndependenceSystem>> systems)
    : IndependenceSystem(n, SystemKind::Intersection), systems_(std::move(systems)) {
    if (systems_.empty()) throw invalid_instance_error("intersection of zero systems");
    for (const auto& sys : systems_)
        if (!sys || sys->ground_size() != n)
            throw invalid_instance_error("intersection constituents must share the ground set");
}

int IntersectionSystem::extendibility() const {
    int k = 0;
    for (const auto& sys : systems_) k += sys->extendibility();
    return k;
}

bool IntersectionSystem::contains(const ElementSet& s) const {
    for (const auto& sys : systems_)
        if (!sys->is_independent(s)) return false;
    return true;
}

CustomSystem::CustomSystem(int n, std::function<bool(const ElementSet&)> oracle, int extendibility_hint)
    : IndependenceSystem(n, SystemKind::Custom), oracle_(std::move(oracle)), extendibility_(extendibility_hint) {
    if (!oracle_) throw parameter_error("custom system needs an oracle");
    if (extendibility_ < 1) throw parameter_error("extendibility hint must be >= 1");
}

bool CustomSystem::contains(const ElementSet& s) const { return oracle_(s); }

bool is_base(const IndependenceSystem& sys, const ElementSet& s) {
    if (!s.empty() && !sys.is_independent(s)) throw parameter_error("is_base: set is not independent");
    for (int u = 0; u < sys.ground_size(); ++u) {
        if (s.contains(u)) continue;
        if (sys.is_independent(s.with(u))) return false;
    }
    return true;
}

namespace {

void require_scan_cap(const IndependenceSystem& sys, int cap, const char* who) {
    if (sys.ground_size() > cap)
        throw size_limit_error(std::string(who) + ": ground set size " +
                               std::to_string(sys.ground_size()) + " exceeds cap " + std::to_string(cap));
}

// Membership table over all of 2^n; the verifiers work off it so they make
// exactly 2^n oracle queries and no assumption of hereditariness.
std::vector<char> membership_table(const IndependenceSystem& sys) {
    const int n = sys.ground_size();
    std::vector<char> indep(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        indep[m] = sys.is_independent(ElementSet::from_mask(m)) ? 1 : 0;
    return indep;
}

} // namespace

HereditaryReport verify_hereditary(const IndependenceSystem& sys, int cap) {
    require_scan_cap(sys, cap, "verify_hereditary");
    const int n = sys.ground_size();
    const auto indep = membership_table(sys);
    HereditaryReport report;
    if (!indep[0]) {
        report.hereditary = false;
        report.witness = {ElementSet{}, -1}; // empty set must be independent
        return report;
    }
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (!indep[m]) continue;
        for (int u = 0; u < n; ++u) {
            if (!((m >> u) & 1u)) continue;
            if (!indep[m & ~(std::uint64_t{1} << u)]) {
                report.hereditary = false;
                report.witness = {ElementSet::from_mask(m), u};
                return report;
            }
        }
    }
    return report;
}

ExtendibleReport verify_k_extendible(const IndependenceSystem& sys, int k, int cap) {
    require_scan_cap(sys, cap, "verify_k_extendible");
    if (k < 0) throw parameter_error("verify_k_extendible: k must be >= 0");
    const int n = sys.ground_size();
    const auto indep = membership_table(sys);
    ExtendibleReport report;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (!indep[s]) continue;
        // T walks the submasks of S.
        std::uint64_t t = s;
        while (true) {
            for (int u = 0; u < n; ++u) {
                const std::uint64_t ubit = std::uint64_t{1} << u;
                if ((s & ubit) || (t & ubit)) continue; // u in S is trivial (Y = {})
                if (!indep[t | ubit]) continue;
                bool ok = false;
                const std::uint64_t pool = s & ~t;
                for (std::uint64_t y = pool;; y = (y - 1) & pool) {
                    if (std::popcount(y) <= k && indep[(s & ~y) | ubit]) {
                        ok = true;
                        break;
                    }
                    if (y == 0) break;
                }
                if (!ok) {
                    report.extendible = false;
                    report.witness = {ElementSet::from_mask(s), ElementSet::from_mask(t), u};
                    return report;
                }
            }
            if (t == 0) break;
            t = (t - 1) & s;
        }
    }
    return report;
}

MatroidReport verify_matroid(const IndependenceSystem& sys, int cap) {
    require_scan_cap(sys, cap, "verify_matroid");
    const int n = sys.ground_size();
    const auto indep = membership_table(sys);
    std::vector<std::uint64_t> members;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (indep[m]) members.push_back(m);
    MatroidReport report;
    for (std::uint64_t s : members) {
        const int ssz = std::popcount(s);
        for (std::uint64_t t : members) {
            if (std::popcount(t) >= ssz) continue;
            bool ok = false;
            std::uint64_t options = s & ~t;
            while (options) {
                const std::uint64_t ubit = options & (~options + 1);
                if (indep[t | ubit]) {
                    ok = true;
                    break;
                }
                options &= options - 1;
            }
            if (!ok) {
                report.matroid = false;
                report.witness = {ElementSet::from_mask(s), ElementSet::from_mask(t)};
                return report;
            }
        }
    }
    return report;
}

Value k_system_ratio(const IndependenceSystem& sys, const ElementSet& s, int cap) {
    require_scan_cap(sys, cap, "k_system_ratio");
    if (s.max_element() >= sys.ground_size())
        throw invalid_instance_error("k_system_ratio: set outside ground set");
    const std::uint64_t smask = s.mask64();
    // Bases of S: independent submasks with no independent one-element extension inside S.
    int min_base = -1, max_base = -1;
    std::uint64_t b = smask;
    while (true) {
        if (sys.is_independent(ElementSet::from_mask(b))) {
            bool maximal = true;
            std::uint64_t options = smask & ~b;
            while (options && maximal) {
                const std::uint64_t ubit = options & (~options + 1);
                if (sys.is_independent(ElementSet::from_mask(b | ubit))) maximal = false;
                options &= options - 1;
            }
            if (maximal) {
                const int sz = std::popcount(b);
                min_base = (min_base < 0) ? sz : std::min(min_base, sz);
                max_base = std::max(max_base, sz);
            }
        }
        if (b == 0) break;
        b = (b - 1) & smask;
    }
    if (max_base <= 0) return Value(1); // only the empty base
    return Value(max_base, min_base);
}

Value k_system_ratio_global(const IndependenceSystem& sys, int cap) {
    require_scan_cap(sys, cap, "k_system_ratio_global");
    const int n = sys.ground_size();
    Value worst(1);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        worst = std::max(worst, k_system_ratio(sys, ElementSet::from_mask(m), cap));
    return worst;
}

} // namespace setmax
