#include "setmax/constructions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "setmax/errors.hpp"

namespace setmax {

namespace {

constexpr std::uint64_t kMaxGridPoints = 8u << 20; // tight-example enumeration guard

std::string coords_label(const std::vector<int>& coords) {
    std::string out = "u(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coords[i]);
    }
    out += ")";
    return out;
}

// Lexicographic enumeration of [0,m)^dims filtered by `keep`.
std::vector<std::vector<int>> enumerate_grid(int dims, int m, const std::function<bool(const std::vector<int>&)>& keep) {
    std::uint64_t total = 1;
    for (int i = 0; i < dims; ++i) {
        total *= static_cast<std::uint64_t>(m);
        if (total > kMaxGridPoints)
            throw size_limit_error("tight construction grid is too large to enumerate");
    }
    std::vector<std::vector<int>> out;
    std::vector<int> coords(static_cast<std::size_t>(dims), 0);
    for (std::uint64_t it = 0; it < total; ++it) {
        if (keep(coords)) out.push_back(coords);
        for (int i = dims - 1; i >= 0; --i) {
            if (++coords[static_cast<std::size_t>(i)] < m) break;
            coords[static_cast<std::size_t>(i)] = 0;
        }
    }
    return out;
}

int positive_mod(long long value, int m) {
    const long long r = value % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

} // namespace

TightSupermodularFunction::TightSupermodularFunction(int k, int d, Value eps, std::vector<int> rows,
                                                     ElementSet hats)
    : SetFunction(static_cast<int>(rows.size())),
      eps_(std::move(eps)),
      rows_total_((d + 1) * (k + 1)),
      rows_(std::move(rows)),
      hats_(std::move(hats)) {}

Value TightSupermodularFunction::value_of(const ElementSet& s) const {
    int rows_hit = 0;
    if (rows_total_ <= 64) {
        std::uint64_t hit = 0;
        s.for_each([&](int u) { hit |= std::uint64_t{1} << rows_[static_cast<std::size_t>(u)]; });
        rows_hit = std::popcount(hit);
    } else {
        std::vector<char> hit(static_cast<std::size_t>(rows_total_), 0);
        s.for_each([&](int u) {
            char& flag = hit[static_cast<std::size_t>(rows_[static_cast<std::size_t>(u)])];
            if (!flag) {
                flag = 1;
                ++rows_hit;
            }
        });
    }
    Value out(rows_hit);
    if (!hats_.empty() && hats_.subset_of(s)) out += eps_;
    return out;
}

TightDependencyFunction::TightDependencyFunction(int n, Value eps, ElementSet u_elements, int hat,
                                                 ElementSet bump_vs)
    : SetFunction(n), eps_(std::move(eps)), u_elements_(std::move(u_elements)), hat_(hat),
      bump_vs_(std::move(bump_vs)) {}

Value TightDependencyFunction::value_of(const ElementSet& s) const {
    Value out(s.intersection_size(u_elements_));
    if (s.contains(hat_) && bump_vs_.subset_of(s)) out += eps_;
    return out;
}

Instance build_tight_supermodular(int k, int d, const Value& eps) {
    if (k < 1 || d < 0) throw parameter_error("build_tight_supermodular: need k >= 1 and d >= 0");
    if (k > 4096 || d > 4096) throw parameter_error("build_tight_supermodular: parameters out of range");
    if (eps <= 0) throw parameter_error("build_tight_supermodular: eps must be positive");
    const int m = (d + 1) * (k + 1);

    const auto points = enumerate_grid(k + 1, m, [&](const std::vector<int>& c) {
        bool some_small = false;
        for (int x : c) some_small |= (x <= d);
        const int last = c[static_cast<std::size_t>(k)];
        return some_small && (last == 0 || last > d);
    });
    const int n = static_cast<int>(points.size());

    std::map<std::vector<int>, int> id_of;
    for (int u = 0; u < n; ++u) id_of[points[static_cast<std::size_t>(u)]] = u;

    std::vector<int> rows(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) rows[static_cast<std::size_t>(u)] = points[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)];

    ElementSet hats;
    for (int x = 0; x <= d; ++x) {
        std::vector<int> hat(static_cast<std::size_t>(k + 1), x);
        hat[static_cast<std::size_t>(k)] = 0;
        hats.insert(id_of.at(hat));
    }

    // One partition matroid per coordinate 1..k: at most one chosen point per
    // coordinate value.
    std::vector<std::shared_ptr<const IndependenceSystem>> matroids;
    for (int i = 0; i < k; ++i) {
        std::map<int, ElementSet> classes;
        for (int u = 0; u < n; ++u)
            classes[points[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)]].insert(u);
        std::vector<ElementSet> parts;
        parts.reserve(classes.size());
        for (auto& [x, part] : classes) parts.push_back(std::move(part));
        matroids.push_back(std::make_shared<PartitionMatroid>(n, std::move(parts)));
    }
    std::shared_ptr<const IndependenceSystem> system;
    if (k == 1)
        system = matroids.front();
    else
        system = std::make_shared<IntersectionSystem>(n, std::move(matroids));

    auto f = std::make_shared<TightSupermodularFunction>(k, d, eps, rows, hats);

    // Certified oracle sets: the hats feed each other's bump; everything else
    // behaves submodularly. Dependency sets are the row mates.
    std::map<int, ElementSet> row_groups;
    for (int u = 0; u < n; ++u) row_groups[rows[static_cast<std::size_t>(u)]].insert(u);
    std::vector<ElementSet> dep_sets(static_cast<std::size_t>(n));
    std::vector<ElementSet> sdep_sets(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        dep_sets[static_cast<std::size_t>(u)] = row_groups[rows[static_cast<std::size_t>(u)]].without(u);
        if (hats.contains(u)) sdep_sets[static_cast<std::size_t>(u)] = hats.without(u);
    }

    Instance inst;
    inst.oracles = OracleBundle(f, std::move(dep_sets), std::move(sdep_sets));
    inst.system = std::move(system);
    inst.construction = "tight-supermodular";
    inst.params = {{"k", std::to_string(k)}, {"d", std::to_string(d)}, {"eps", to_rational_string(eps)}};
    for (int u = 0; u < n; ++u) inst.labels.push_back(coords_label(points[static_cast<std::size_t>(u)]));

    CertifiedSets certified;
    for (int j = 0; j <= k * (d + 1); ++j) {
        std::vector<int> coords(static_cast<std::size_t>(k + 1));
        for (int i = 1; i <= k + 1; ++i)
            coords[static_cast<std::size_t>(i - 1)] = positive_mod(static_cast<long long>(i) * (d + 1) - j, m);
        certified.opt_set.insert(id_of.at(coords));
    }
    certified.opt_value = std::max(Value(k * (d + 1) + 1), Value(1) + eps);
    certified.expected_alg_value = Value(1) + eps;
    inst.certified = std::move(certified);
    return inst;
}

Instance build_tight_dependency(int k, int d, const Value& eps) {
    if (k < 1 || d < 0) throw parameter_error("build_tight_dependency: need k >= 1 and d >= 0");
    if (k > 4096 || d > 4096) throw parameter_error("build_tight_dependency: parameters out of range");
    if (eps <= 0) throw parameter_error("build_tight_dependency: eps must be positive");
    const int m = k * (d + 1);

    const auto points = enumerate_grid(k, m, [&](const std::vector<int>& c) {
        for (int x : c)
            if (x <= d) return true;
        return false;
    });
    const int nu = static_cast<int>(points.size());
    const int n = nu + m; // u-elements then v_0..v_{m-1}

    std::map<std::vector<int>, int> id_of;
    for (int u = 0; u < nu; ++u) id_of[points[static_cast<std::size_t>(u)]] = u;

    ElementSet u_elements;
    for (int u = 0; u < nu; ++u) u_elements.insert(u);

    const int hat = id_of.at(std::vector<int>(static_cast<std::size_t>(k), 0));
    ElementSet bump_vs;
    for (int x = 1; x <= d; ++x) bump_vs.insert(nu + x);

    std::vector<std::shared_ptr<const IndependenceSystem>> matroids;
    for (int i = 0; i < k; ++i) {
        std::map<int, ElementSet> classes;
        for (int x = 0; x < m; ++x) classes[x].insert(nu + x); // v_x blocks value x everywhere
        for (int u = 0; u < nu; ++u)
            classes[points[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)]].insert(u);
        std::vector<ElementSet> parts;
        parts.reserve(classes.size());
        for (auto& [x, part] : classes) parts.push_back(std::move(part));
        matroids.push_back(std::make_shared<PartitionMatroid>(n, std::move(parts)));
    }
    std::shared_ptr<const IndependenceSystem> system;
    if (k == 1)
        system = matroids.front();
    else
        system = std::make_shared<IntersectionSystem>(n, std::move(matroids));

    auto f = std::make_shared<TightDependencyFunction>(n, eps, u_elements, hat, bump_vs);

    std::vector<ElementSet> dep_sets(static_cast<std::size_t>(n));
    const ElementSet bump_club = bump_vs.with(hat);
    bump_club.for_each([&](int u) { dep_sets[static_cast<std::size_t>(u)] = bump_club.without(u); });
    dep_sets[static_cast<std::size_t>(hat)] = bump_vs; // exactly the v's
    std::vector<ElementSet> sdep_sets = dep_sets;

    Instance inst;
    inst.oracles = OracleBundle(f, std::move(dep_sets), std::move(sdep_sets));
    inst.system = std::move(system);
    inst.construction = "tight-dependency";
    inst.params = {{"k", std::to_string(k)}, {"d", std::to_string(d)}, {"eps", to_rational_string(eps)}};
    for (int u = 0; u < nu; ++u) inst.labels.push_back(coords_label(points[static_cast<std::size_t>(u)]));
    for (int x = 0; x < m; ++x) inst.labels.push_back("v" + std::to_string(x));

    CertifiedSets certified;
    for (int j = 1; j <= m; ++j) {
        std::vector<int> coords(static_cast<std::size_t>(k));
        for (int i = 1; i <= k; ++i)
            coords[static_cast<std::size_t>(i - 1)] = positive_mod(static_cast<long long>(i) * (d + 1) - j, m);
        certified.opt_set.insert(id_of.at(coords));
    }
    certified.opt_value = std::max(Value(m), Value(1) + eps);
    certified.expected_alg_value = Value(1) + eps;
    inst.certified = std::move(certified);
    return inst;
}

Instance reduce_kdm(const KdmHypergraph& graph, int k, int d) {
    if (k < 1 || d < 0) throw parameter_error("reduce_kdm: need k >= 1 and d >= 0");
    if (k > 4096 || d > 4096) throw parameter_error("reduce_kdm: parameters out of range");
    const int r = graph.sides;
    const int r_pad = k * (d + 1);
    if (r < 1 || r > r_pad)
        throw parameter_error("reduce_kdm: need 1 <= r <= k(d+1)");
    for (const auto& e : graph.edges) {
        if (static_cast<int>(e.size()) != r)
            throw invalid_instance_error("reduce_kdm: every edge must hold exactly one vertex per side");
        for (int v : e)
            if (v < 0) throw invalid_instance_error("reduce_kdm: negative vertex id");
    }
    const int num_edges = static_cast<int>(graph.edges.size());
    const int blocks = d + 1;
    const int n = num_edges * blocks;

    // Sides r..r_pad-1 are padding; every edge gets its own vertex there so
    // the padded sides never constrain anything.
    auto vertex_on = [&](int e, int side) {
        return side < r ? graph.edges[static_cast<std::size_t>(e)][static_cast<std::size_t>(side)] : e;
    };

    std::vector<HypergraphFunction::Edge> hyperedges;
    hyperedges.reserve(static_cast<std::size_t>(num_edges));
    for (int e = 0; e < num_edges; ++e) {
        ElementSet members;
        for (int b = 0; b < blocks; ++b) members.insert(e * blocks + b);
        hyperedges.push_back({members, Value(1)});
    }
    auto f = std::make_shared<HypergraphFunction>(n, std::move(hyperedges));

    std::vector<std::shared_ptr<const IndependenceSystem>> matroids;
    for (int j = 0; j < k; ++j) {
        std::map<std::pair<int, int>, ElementSet> classes; // (side, vertex) -> split elements
        for (int e = 0; e < num_edges; ++e) {
            for (int b = 0; b < blocks; ++b) {
                const int side = b * k + j;
                classes[{side, vertex_on(e, side)}].insert(e * blocks + b);
            }
        }
        std::vector<ElementSet> parts;
        parts.reserve(classes.size());
        for (auto& [key, part] : classes) parts.push_back(std::move(part));
        matroids.push_back(std::make_shared<PartitionMatroid>(n, std::move(parts)));
    }
    std::shared_ptr<const IndependenceSystem> system;
    if (k == 1)
        system = matroids.front();
    else
        system = std::make_shared<IntersectionSystem>(n, std::move(matroids));

    std::vector<ElementSet> dep_sets(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) dep_sets[static_cast<std::size_t>(u)] = f->dep_superset(u);

    Instance inst;
    inst.oracles = OracleBundle(f, dep_sets, dep_sets);
    inst.system = std::move(system);
    inst.construction = "kdm";
    inst.params = {{"k", std::to_string(k)},
                   {"d", std::to_string(d)},
                   {"r", std::to_string(r)},
                   {"edges", std::to_string(num_edges)}};
    for (int e = 0; e < num_edges; ++e)
        for (int b = 0; b < blocks; ++b)
            inst.labels.push_back("e" + std::to_string(e) + "#" + std::to_string(b));
    return inst;
}

Instance welfare_to_instance(const std::vector<BidderUtility>& bidders) {
    const int num_bidders = static_cast<int>(bidders.size());
    const int items = bidders.empty() ? 0 : bidders.front().items;
    for (const auto& b : bidders)
        if (b.items != items)
            throw invalid_instance_error("welfare_to_instance: bidders must share the item universe");
    const int n = num_bidders * items;

    std::vector<HypergraphFunction::Edge> lifted;
    for (int b = 0; b < num_bidders; ++b) {
        HypergraphFunction utility(items, bidders[static_cast<std::size_t>(b)].edges);
        const auto mono = check_monotone(utility, 256, 0);
        if (!mono.monotone)
            throw invalid_instance_error("welfare_to_instance: bidder " + std::to_string(b) +
                                         " utility is not monotone");
        for (const auto& e : utility.edges()) {
            ElementSet members;
            e.members.for_each([&](int item) { members.insert(b * items + item); });
            lifted.push_back({members, e.weight});
        }
    }
    auto f = std::make_shared<HypergraphFunction>(n, std::move(lifted));

    std::vector<ElementSet> parts;
    for (int item = 0; item < items; ++item) {
        ElementSet part;
        for (int b = 0; b < num_bidders; ++b) part.insert(b * items + item);
        parts.push_back(part);
    }
    auto system = std::make_shared<PartitionMatroid>(n, std::move(parts));

    std::vector<ElementSet> dep_sets(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) dep_sets[static_cast<std::size_t>(u)] = f->dep_superset(u);

    Instance inst;
    inst.oracles = OracleBundle(f, dep_sets, dep_sets);
    inst.system = std::move(system);
    inst.construction = "welfare";
    inst.params = {{"bidders", std::to_string(num_bidders)}, {"items", std::to_string(items)}};
    for (int b = 0; b < num_bidders; ++b)
        for (int item = 0; item < items; ++item)
            inst.labels.push_back("b" + std::to_string(b) + ":i" + std::to_string(item));
    return inst;
}

Instance graph_to_uniform_instance(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                                   const Value& delta) {
    if (num_vertices < 0) throw parameter_error("graph_to_uniform_instance: negative vertex count");
    if (delta < 0) throw parameter_error("graph_to_uniform_instance: delta must be >= 0");
    std::vector<HypergraphFunction::Edge> hyperedges;
    for (const auto& [a, b] : edges) {
        if (a == b) throw invalid_instance_error("graph_to_uniform_instance: self-loop rejected");
        if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices)
            throw invalid_instance_error("graph_to_uniform_instance: vertex id out of range");
        hyperedges.push_back({ElementSet{a, b}, Value(1)});
    }
    auto f = std::make_shared<HypergraphFunction>(num_vertices, std::move(hyperedges));

    // floor(delta * |V|); the source problem wants exactly delta * |V|, the
    // discrepancy is noted in the params.
    BigInt k_big = (numerator(delta) * num_vertices) / denominator(delta);
    if (k_big > num_vertices) k_big = num_vertices; // a larger budget never binds
    const int k = static_cast<int>(k_big);
    auto system = std::make_shared<UniformMatroid>(num_vertices, k);

    std::vector<ElementSet> dep_sets(static_cast<std::size_t>(num_vertices));
    for (int u = 0; u < num_vertices; ++u) dep_sets[static_cast<std::size_t>(u)] = f->dep_superset(u);

    Instance inst;
    inst.oracles = OracleBundle(f, dep_sets, dep_sets);
    inst.system = std::move(system);
    inst.construction = "graph-uniform";
    inst.params = {{"nodes", std::to_string(num_vertices)},
                   {"edges", std::to_string(edges.size())},
                   {"delta", to_rational_string(delta)},
                   {"k_floor", std::to_string(k)}};
    return inst;
}

namespace {

// rng()%m keeps generated instances identical across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) { return m == 0 ? 0 : rng() % m; }

std::vector<int> shuffled_ids(std::mt19937_64& rng, int n) {
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(ids[static_cast<std::size_t>(i)],
                  ids[bounded(rng, static_cast<std::uint64_t>(i + 1))]);
    return ids;
}

std::shared_ptr<PartitionMatroid> random_partition_matroid(std::mt19937_64& rng, int n, bool vary_caps) {
    const std::vector<int> ids = shuffled_ids(rng, n);
    std::vector<ElementSet> parts;
    std::vector<int> caps;
    std::size_t at = 0;
    while (at < ids.size()) {
        const std::size_t take = std::min(ids.size() - at, 1 + bounded(rng, 3));
        ElementSet part;
        for (std::size_t i = 0; i < take; ++i) part.insert(ids[at + i]);
        parts.push_back(part);
        caps.push_back(vary_caps && bounded(rng, 5) == 0 ? 2 : 1);
        at += take;
    }
    return std::make_shared<PartitionMatroid>(n, std::move(parts), std::move(caps));
}

} // namespace

Instance random_instance(int n, int d, RandomConstraint constraint, std::uint64_t seed,
                         std::optional<int> uniform_k) {
    if (n < 0) throw parameter_error("random_instance: n must be >= 0");
    if (d < 0 || (n > 0 && d > n - 1) || (n == 0 && d > 0))
        throw parameter_error("random_instance: need 0 <= d <= n-1");
    if (d > 12) throw parameter_error("random_instance: d > 12 is past desk scale");
    std::mt19937_64 rng(seed);

    // Co-occurrence groups of size d+1: rank >= 2 edges live inside a group,
    // which caps every dependency superset at d elements.
    const std::vector<int> ids = shuffled_ids(rng, n);
    std::vector<std::vector<int>> groups;
    for (std::size_t at = 0; at < ids.size(); at += static_cast<std::size_t>(d + 1)) {
        const std::size_t take = std::min(ids.size() - at, static_cast<std::size_t>(d + 1));
        groups.emplace_back(ids.begin() + static_cast<std::ptrdiff_t>(at),
                            ids.begin() + static_cast<std::ptrdiff_t>(at + take));
    }

    std::vector<HypergraphFunction::Edge> edges;
    for (int u = 0; u < n; ++u) {
        if (bounded(rng, 4) == 3) continue; // leave some elements worthless
        edges.push_back({ElementSet{u}, Value(1 + bounded(rng, 8), 1 + bounded(rng, 4))});
    }
    for (const auto& group : groups) {
        if (group.size() < 2) continue;
        const std::uint64_t subsets = std::uint64_t{1} << group.size();
        for (std::uint64_t m = 0; m < subsets; ++m) {
            if (std::popcount(m) < 2) continue;
            if (bounded(rng, 2) == 0) continue;
            ElementSet members;
            for (std::size_t b = 0; b < group.size(); ++b)
                if ((m >> b) & 1u) members.insert(group[b]);
            edges.push_back({members, Value(1 + bounded(rng, 6), 1 + bounded(rng, 3))});
        }
    }
    auto f = std::make_shared<HypergraphFunction>(n, std::move(edges));

    std::shared_ptr<const IndependenceSystem> system;
    std::string constraint_name;
    int k_used = 0;
    switch (constraint) {
        case RandomConstraint::Uniform: {
            k_used = uniform_k.value_or(n > 0 ? static_cast<int>(1 + bounded(rng, static_cast<std::uint64_t>(n))) : 0);
            if (k_used < 0 || k_used > n) throw parameter_error("random_instance: uniform k out of range");
            system = std::make_shared<UniformMatroid>(n, k_used);
            constraint_name = "uniform";
            break;
        }
        case RandomConstraint::Partition:
            system = random_partition_matroid(rng, n, /*vary_caps=*/true);
            constraint_name = "partition";
            break;
        case RandomConstraint::TwoIntersection: {
            std::vector<std::shared_ptr<const IndependenceSystem>> two;
            two.push_back(random_partition_matroid(rng, n, /*vary_caps=*/false));
            two.push_back(random_partition_matroid(rng, n, /*vary_caps=*/false));
            system = std::make_shared<IntersectionSystem>(n, std::move(two));
            constraint_name = "intersection2";
            break;
        }
    }

    std::vector<ElementSet> dep_sets(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) dep_sets[static_cast<std::size_t>(u)] = f->dep_superset(u);

    Instance inst;
    inst.oracles = OracleBundle(f, dep_sets, dep_sets);
    inst.system = std::move(system);
    inst.construction = "random";
    inst.params = {{"n", std::to_string(n)},
                   {"d", std::to_string(d)},
                   {"seed", std::to_string(seed)},
                   {"constraint", constraint_name}};
    if (constraint == RandomConstraint::Uniform) inst.params["k"] = std::to_string(k_used);
    return inst;
}

} // namespace setmax
