#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "setmax/constructions.hpp"
#include "setmax/element_set.hpp"
#include "setmax/independence.hpp"
#include "setmax/set_function.hpp"

namespace setmax::testing {

/// Full 2^n scan optimum. Test-side oracle: deliberately independent of the
/// branch-and-prune search in the library.
inline std::pair<ElementSet, Value> naive_opt(const SetFunction& f, const IndependenceSystem& sys) {
    const int n = f.ground_size();
    ElementSet best_set;
    Value best_value = f.evaluate(best_set);
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        const ElementSet s = ElementSet::from_mask(m);
        if (!sys.is_independent(s)) continue;
        const Value v = f.evaluate(s);
        if (v > best_value || (v == best_value && ElementSet::lex_compare(s, best_set) < 0)) {
            best_set = s;
            best_value = v;
        }
    }
    return {best_set, best_value};
}

/// Brute-force maximum matching of an r-sided hypergraph: largest set of
/// edges that pairwise share no side vertex.
inline int max_matching_brute(const KdmHypergraph& g) {
    const int m = static_cast<int>(g.edges.size());
    auto disjoint = [&](int a, int b) {
        for (int s = 0; s < g.sides; ++s)
            if (g.edges[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)] ==
                g.edges[static_cast<std::size_t>(b)][static_cast<std::size_t>(s)])
                return false;
        return true;
    };
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<int> chosen;
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1u) chosen.push_back(e);
        bool ok = true;
        for (std::size_t i = 0; i < chosen.size() && ok; ++i)
            for (std::size_t j = i + 1; j < chosen.size() && ok; ++j)
                ok = disjoint(chosen[i], chosen[j]);
        if (ok) best = std::max(best, static_cast<int>(chosen.size()));
    }
    return best;
}

inline HypergraphFunction::Edge edge(std::initializer_list<int> members, const Value& w) {
    return {ElementSet(members), w};
}

} // namespace setmax::testing
