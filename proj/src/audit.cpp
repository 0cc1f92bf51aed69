#include "setmax/audit.hpp"

#include <algorithm>

#include "setmax/errors.hpp"

namespace setmax {

namespace {

int default_brute_cap(const IndependenceSystem& sys) {
    switch (sys.kind()) {
        case SystemKind::Uniform:
        case SystemKind::Partition:
            return kDefaultBruteCapMatroid;
        default:
            return kDefaultBruteCapGeneral;
    }
}

} // namespace

OptCertificate brute_force_opt(const SetFunction& f, const IndependenceSystem& sys,
                               std::optional<int> cap_override) {
    if (f.ground_size() != sys.ground_size())
        throw invalid_instance_error("brute_force_opt: function and system disagree on ground size");
    const int n = f.ground_size();
    const int cap = cap_override.value_or(default_brute_cap(sys));
    if (n > cap)
        throw size_limit_error("brute_force_opt: ground set size " + std::to_string(n) +
                               " exceeds cap " + std::to_string(cap));

    OptCertificate cert;
    cert.opt_set = ElementSet{};
    cert.opt_value = f.evaluate(cert.opt_set);
    cert.enumerated_count = 1;

    ElementSet current;
    auto consider = [&](const ElementSet& s, const Value& v) {
        ++cert.enumerated_count;
        if (v > cert.opt_value ||
            (v == cert.opt_value && ElementSet::lex_compare(s, cert.opt_set) < 0)) {
            cert.opt_set = s;
            cert.opt_value = v;
        }
    };
    // Ascending-id DFS reaches every independent set exactly once: each set's
    // id-prefixes are independent by hereditariness.
    auto visit = [&](auto&& self, int start) -> void {
        for (int u = start; u < n; ++u) {
            current.insert(u);
            if (sys.is_independent(current)) {
                consider(current, f.evaluate(current));
                self(self, u + 1);
            }
            current.erase(u);
        }
    };
    visit(visit, 0);
    return cert;
}

Value approximation_ratio(const SolveResult& result, const OptCertificate& cert) {
    if (result.fingerprint && cert.fingerprint && *result.fingerprint != *cert.fingerprint)
        throw parameter_error("approximation_ratio: result and certificate come from different instances");
    if (cert.opt_value == 0) return Value(1);
    return result.value / cert.opt_value;
}

namespace {

/// Maximum-size independent subset of pool u fixed containing fixed; ties
/// broken lexicographically smallest.
ElementSet max_independent_superset(const IndependenceSystem& sys, const ElementSet& fixed,
                                    const ElementSet& pool) {
    const std::vector<int> extra = (pool - fixed).to_vector();
    if (extra.size() > 25)
        throw size_limit_error("hybrid_audit: candidate pool too large for exhaustive search");
    ElementSet best = fixed;
    bool have = sys.is_independent(fixed);
    if (!have)
        throw parameter_error("hybrid_audit: trace set is not independent");
    const std::uint64_t subsets = std::uint64_t{1} << extra.size();
    for (std::uint64_t m = 1; m < subsets; ++m) {
        ElementSet cand = fixed;
        for (std::size_t b = 0; b < extra.size(); ++b)
            if ((m >> b) & 1u) cand.insert(extra[b]);
        if (!sys.is_independent(cand)) continue;
        if (cand.size() > best.size() ||
            (cand.size() == best.size() && ElementSet::lex_compare(cand, best) < 0))
            best = cand;
    }
    return best;
}

} // namespace

HybridAuditReport hybrid_audit(const SetFunction& f, const IndependenceSystem& sys,
                               const SolveResult& run, const OptCertificate& cert, AuditMode mode,
                               int cap) {
    const int n = f.ground_size();
    if (n > cap)
        throw size_limit_error("hybrid_audit: ground set size exceeds cap " + std::to_string(cap));
    HybridAuditReport report;
    report.iterations = static_cast<int>(run.trace.iterations.size());
    const int k = sys.extendibility();
    const int d = run.d_used;

    auto fail = [&](std::string why) {
        report.ok = false;
        report.failure = std::move(why);
        return report;
    };

    // H_0: extend OPT to a base by ascending-id augmentation.
    ElementSet h = cert.opt_set;
    for (int u = 0; u < n; ++u) {
        if (h.contains(u)) continue;
        if (sys.is_independent(h.with(u))) h.insert(u);
    }
    report.hybrids.push_back(h);
    if (f.evaluate(h) != cert.opt_value)
        return fail("base extension of OPT changed the value (non-monotone f or stale certificate)");

    if (run.trace.sets.size() != run.trace.iterations.size() + 1)
        return fail("trace sets and iterations are inconsistent");

    const Value constant = (mode == AuditMode::Supermodular) ? Value(k * (d + 1))
                                                             : Value(k * (d + 1) - 1);
    for (std::size_t i = 1; i < run.trace.sets.size(); ++i) {
        const ElementSet& s_i = run.trace.sets[i];
        const ElementSet h_prev = report.hybrids.back();
        const ElementSet h_i = max_independent_superset(sys, s_i, h_prev | s_i);
        report.hybrids.push_back(h_i);

        const int removed = (h_prev - h_i).size();
        const int fresh = (s_i - h_prev).size();
        if (fresh > d + 1)
            return fail("iteration " + std::to_string(i) + ": |S_i \\ H_{i-1}| = " +
                        std::to_string(fresh) + " > d+1");
        if (removed > k * fresh)
            return fail("iteration " + std::to_string(i) + ": |H_{i-1} \\ H_i| = " +
                        std::to_string(removed) + " > k |S_i \\ H_{i-1}| = " +
                        std::to_string(k * fresh));

        const Value drop = f.evaluate(h_prev) - f.evaluate(h_i);
        const Value budget = constant * run.trace.iterations[i - 1].score;
        if (drop > budget)
            return fail("iteration " + std::to_string(i) + ": hybrid value drop " +
                        to_rational_string(drop) + " exceeds " + to_rational_string(constant) +
                        " * score = " + to_rational_string(budget));
    }
    if (report.hybrids.back() != run.trace.sets.back())
        return fail("final hybrid differs from the greedy output");
    return report;
}

DepSoundnessReport dep_soundness_audit(const SetFunction& f, const std::vector<ElementSet>& oracle_sets,
                                       AuditMode mode, int cap) {
    const int n = f.ground_size();
    if (static_cast<int>(oracle_sets.size()) != n)
        throw invalid_instance_error("dep_soundness_audit: one oracle set per element required");
    DepSoundnessReport report;
    if (n == 0) return report;
    ValueTable table(f, cap);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (v == u || oracle_sets[static_cast<std::size_t>(u)].contains(v)) continue;
            const std::uint64_t rest =
                ((std::uint64_t{1} << n) - 1) & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
            std::uint64_t s = rest;
            while (true) {
                const Value with_v = table.marginal(s | (std::uint64_t{1} << v), u);
                const Value without = table.marginal(s, u);
                const bool bad =
                    (mode == AuditMode::Supermodular) ? (with_v > without) : (with_v != without);
                if (bad) {
                    report.ok = false;
                    report.witness = {u, v, ElementSet::from_mask(s)};
                    return report;
                }
                if (s == 0) break;
                s = (s - 1) & rest;
            }
        }
    }
    return report;
}

} // namespace setmax
