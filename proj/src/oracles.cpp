#include "setmax/oracles.hpp"

#include <algorithm>
#include <random>

#include "setmax/errors.hpp"

namespace setmax {

namespace {

void require_cap(const SetFunction& f, int cap, const char* who) {
    const int n = f.ground_size();
    if (n > cap)
        throw size_limit_error(std::string(who) + ": ground set size " + std::to_string(n) +
                               " exceeds cap " + std::to_string(cap));
    if (cap > 25 && n > 25)
        throw size_limit_error(std::string(who) + ": 2^n table infeasible for n = " + std::to_string(n));
}

} // namespace

ValueTable::ValueTable(const SetFunction& f, int cap) : n_(f.ground_size()) {
    require_cap(f, cap, "ValueTable");
    vals_.reserve(std::size_t{1} << n_);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n_); ++m)
        vals_.push_back(f.evaluate(ElementSet::from_mask(m)));
}

namespace {

// Shared worker: for fixed u, scan every v != u and every S over the
// remaining n-2 elements; `strict` selects the supermodular (increase-only)
// test against the dependency (any-change) test.
ElementSet scan_dependencies(const ValueTable& table, int u, bool strict) {
    const int n = table.n();
    ElementSet out;
    for (int v = 0; v < n; ++v) {
        if (v == u) continue;
        const std::uint64_t rest =
            ((std::uint64_t{1} << n) - 1) & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
        bool hit = false;
        // Enumerate subsets of `rest` via the standard submask walk.
        std::uint64_t s = rest;
        while (true) {
            const std::uint64_t with_v = s | (std::uint64_t{1} << v);
            const Value lhs = table.marginal(with_v, u);
            const Value rhs = table.marginal(s, u);
            if (strict ? (lhs > rhs) : (lhs != rhs)) {
                hit = true;
                break;
            }
            if (s == 0) break;
            s = (s - 1) & rest;
        }
        if (hit) out.insert(v);
    }
    return out;
}

} // namespace

ElementSet exact_dependency_set(const SetFunction& f, int u, int cap) {
    if (u < 0 || u >= f.ground_size()) throw invalid_instance_error("exact_dependency_set: bad element id");
    ValueTable table(f, cap);
    return scan_dependencies(table, u, /*strict=*/false);
}

ElementSet exact_supermodular_set(const SetFunction& f, int u, int cap) {
    if (u < 0 || u >= f.ground_size()) throw invalid_instance_error("exact_supermodular_set: bad element id");
    ValueTable table(f, cap);
    return scan_dependencies(table, u, /*strict=*/true);
}

std::vector<ElementSet> exact_dependency_sets(const SetFunction& f, int cap) {
    ValueTable table(f, cap);
    std::vector<ElementSet> out;
    out.reserve(static_cast<std::size_t>(f.ground_size()));
    for (int u = 0; u < f.ground_size(); ++u) out.push_back(scan_dependencies(table, u, false));
    return out;
}

std::vector<ElementSet> exact_supermodular_sets(const SetFunction& f, int cap) {
    ValueTable table(f, cap);
    std::vector<ElementSet> out;
    out.reserve(static_cast<std::size_t>(f.ground_size()));
    for (int u = 0; u < f.ground_size(); ++u) out.push_back(scan_dependencies(table, u, true));
    return out;
}

namespace {

int max_size(const std::vector<ElementSet>& sets) {
    int d = 0;
    for (const ElementSet& s : sets) d = std::max(d, s.size());
    return d;
}

} // namespace

int dependency_degree(const SetFunction& f, int cap) { return max_size(exact_dependency_sets(f, cap)); }

int supermodular_degree(const SetFunction& f, int cap) { return max_size(exact_supermodular_sets(f, cap)); }

MonotoneReport check_monotone(const SetFunction& f, int trials, std::uint64_t seed) {
    const int n = f.ground_size();
    MonotoneReport report;
    if (n == 0) return report;
    if (n <= 14) {
        ValueTable table(f, 14);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            for (int u = 0; u < n; ++u) {
                if ((m >> u) & 1u) continue;
                if (table.at_mask(m | (std::uint64_t{1} << u)) < table.at_mask(m)) {
                    report.monotone = false;
                    report.witness = {ElementSet::from_mask(m), u};
                    return report;
                }
            }
        }
        return report;
    }
    std::mt19937_64 rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int t = 0; t < trials; ++t) {
        // Fisher-Yates with rng()%m keeps the sequence toolchain-independent.
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1))]);
        ElementSet s;
        Value prev = f.evaluate(s);
        for (int u : perm) {
            const Value next = f.evaluate(s.with(u));
            if (next < prev) {
                report.monotone = false;
                report.witness = {s, u};
                return report;
            }
            s.insert(u);
            prev = next;
        }
    }
    return report;
}

DepOracle::DepOracle(std::vector<ElementSet> sets) : sets_(std::move(sets)) {}

DepOracle::DepOracle(const DepOracle& o) : sets_(o.sets_), queries_(o.queries()) {}

DepOracle& DepOracle::operator=(const DepOracle& o) {
    sets_ = o.sets_;
    queries_.store(o.queries(), std::memory_order_relaxed);
    return *this;
}

const ElementSet& DepOracle::of(int u) const {
    if (u < 0 || u >= ground_size()) throw invalid_instance_error("dependency oracle: bad element id");
    queries_.fetch_add(1, std::memory_order_relaxed);
    return sets_[static_cast<std::size_t>(u)];
}

int DepOracle::max_set_size() const {
    int d = 0;
    for (const ElementSet& s : sets_) d = std::max(d, s.size());
    return d;
}

OracleBundle::OracleBundle(std::shared_ptr<const SetFunction> fn, std::vector<ElementSet> dep_sets,
                           std::vector<ElementSet> sdep_sets)
    : f(std::move(fn)) {
    const int n = f->ground_size();
    if (static_cast<int>(dep_sets.size()) != n || static_cast<int>(sdep_sets.size()) != n)
        throw invalid_instance_error("oracle bundle: dependency sets sized differently from ground set");
    for (int u = 0; u < n; ++u) {
        const ElementSet& d = dep_sets[static_cast<std::size_t>(u)];
        const ElementSet& sd = sdep_sets[static_cast<std::size_t>(u)];
        if (d.contains(u) || sd.contains(u))
            throw invalid_instance_error("oracle bundle: element inside its own dependency set");
        if (d.max_element() >= n)
            throw invalid_instance_error("oracle bundle: dependency set leaves the ground set");
        if (!sd.subset_of(d))
            throw invalid_instance_error("oracle bundle: supermodular set not within dependency set");
    }
    dep = DepOracle(std::move(dep_sets));
    sdep = DepOracle(std::move(sdep_sets));
}

} // namespace setmax
