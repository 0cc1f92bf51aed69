#include "setmax/set_function.hpp"

#include <algorithm>

#include "setmax/errors.hpp"

namespace setmax {

SetFunction::SetFunction(int n) : n_(n) {
    if (n < 0) throw parameter_error("ground set size must be >= 0");
}

void SetFunction::check_members(const ElementSet& s) const {
    if (s.max_element() >= n_)
        throw invalid_instance_error("element id " + std::to_string(s.max_element()) +
                                     " outside ground set of size " + std::to_string(n_));
}

Value SetFunction::evaluate(const ElementSet& s) const {
    check_members(s);
    queries_.fetch_add(1, std::memory_order_relaxed);
    return value_of(s);
}

Value SetFunction::marginal_element(int u, const ElementSet& s) const {
    if (u < 0 || u >= n_) throw invalid_instance_error("marginal_element: bad element id");
    if (s.contains(u)) return Value(0);
    return evaluate(s.with(u)) - evaluate(s);
}

Value SetFunction::marginal_set(const ElementSet& t, const ElementSet& s) const {
    check_members(t);
    if ((t - s).empty()) return Value(0);
    return evaluate(s | t) - evaluate(s);
}

HypergraphFunction::HypergraphFunction(int n, std::vector<Edge> edges)
    : SetFunction(n), edges_(std::move(edges)), cooccur_(static_cast<std::size_t>(n)) {
    for (const Edge& e : edges_) {
        if (e.members.empty()) throw invalid_instance_error("empty hyperedge is forbidden");
        if (e.members.max_element() >= n)
            throw invalid_instance_error("hyperedge member outside ground set");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (std::size_t j = i + 1; j < edges_.size(); ++j)
            if (edges_[i].members == edges_[j].members)
                throw invalid_instance_error("duplicate hyperedge " + edges_[i].members.to_string());
    for (const Edge& e : edges_) {
        if (e.weight == 0) continue;
        e.members.for_each([&](int u) {
            cooccur_[static_cast<std::size_t>(u)] |= e.members;
            cooccur_[static_cast<std::size_t>(u)].erase(u);
        });
    }
}

Value HypergraphFunction::value_of(const ElementSet& s) const {
    Value total(0);
    for (const Edge& e : edges_)
        if (e.members.subset_of(s)) total += e.weight;
    return total;
}

const ElementSet& HypergraphFunction::dep_superset(int u) const {
    if (u < 0 || u >= ground_size()) throw invalid_instance_error("dep_superset: bad element id");
    return cooccur_[static_cast<std::size_t>(u)];
}

} // namespace setmax
