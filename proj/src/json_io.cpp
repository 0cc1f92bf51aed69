#include "setmax/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "setmax/constructions.hpp"
#include "setmax/errors.hpp"

namespace setmax {

namespace {

json ids_to_json(const ElementSet& s) {
    json out = json::array();
    s.for_each([&](int id) { out.push_back(id); });
    return out;
}

ElementSet ids_from_json(const json& j) {
    ElementSet s;
    for (const auto& v : j) s.insert(v.get<int>());
    return s;
}

json hypergraph_to_json(const HypergraphFunction& f) {
    std::vector<const HypergraphFunction::Edge*> order;
    for (const auto& e : f.edges()) order.push_back(&e);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        return ElementSet::lex_compare(a->members, b->members) < 0;
    });
    json edges = json::array();
    for (const auto* e : order)
        edges.push_back({{"members", ids_to_json(e->members)}, {"weight", to_rational_string(e->weight)}});
    return {{"type", "hypergraph"}, {"edges", std::move(edges)}};
}

} // namespace

json system_to_json(const IndependenceSystem& sys) {
    switch (sys.kind()) {
        case SystemKind::Uniform: {
            const auto& u = static_cast<const UniformMatroid&>(sys);
            return {{"type", "uniform"}, {"k", u.k()}};
        }
        case SystemKind::Partition: {
            const auto& p = static_cast<const PartitionMatroid&>(sys);
            std::vector<std::size_t> order(p.parts().size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return p.parts()[a].min_element() < p.parts()[b].min_element();
            });
            json parts = json::array();
            json caps = json::array();
            for (std::size_t i : order) {
                parts.push_back(ids_to_json(p.parts()[i]));
                caps.push_back(p.capacities()[i]);
            }
            return {{"type", "partition"}, {"parts", std::move(parts)}, {"capacities", std::move(caps)}};
        }
        case SystemKind::Intersection: {
            const auto& x = static_cast<const IntersectionSystem&>(sys);
            json of = json::array();
            for (const auto& part : x.constituents()) of.push_back(system_to_json(*part));
            return {{"type", "intersection"}, {"of", std::move(of)}};
        }
        case SystemKind::Custom:
            throw invalid_instance_error("custom systems are not file-serializable");
    }
    throw invalid_instance_error("unknown system kind");
}

std::shared_ptr<const IndependenceSystem> system_from_json(const json& j, int n) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "uniform") return std::make_shared<UniformMatroid>(n, j.at("k").get<int>());
    if (type == "partition") {
        std::vector<ElementSet> parts;
        for (const auto& p : j.at("parts")) parts.push_back(ids_from_json(p));
        std::vector<int> caps;
        for (const auto& c : j.at("capacities")) caps.push_back(c.get<int>());
        return std::make_shared<PartitionMatroid>(n, std::move(parts), std::move(caps));
    }
    if (type == "intersection") {
        std::vector<std::shared_ptr<const IndependenceSystem>> of;
        for (const auto& s : j.at("of")) of.push_back(system_from_json(s, n));
        return std::make_shared<IntersectionSystem>(n, std::move(of));
    }
    if (type == "custom") throw invalid_instance_error("custom systems are not file-loadable");
    throw invalid_instance_error("unknown constraint type: " + type);
}

json instance_to_json(const Instance& inst) {
    json function;
    const SetFunction& f = *inst.oracles.f;
    if (const auto* hg = dynamic_cast<const HypergraphFunction*>(&f)) {
        function = hypergraph_to_json(*hg);
    } else if (dynamic_cast<const TightSupermodularFunction*>(&f) ||
               dynamic_cast<const TightDependencyFunction*>(&f)) {
        function = {{"type", inst.construction},
                    {"k", std::stoi(inst.params.at("k"))},
                    {"d", std::stoi(inst.params.at("d"))},
                    {"eps", inst.params.at("eps")}};
    } else {
        throw invalid_instance_error("this set-function backend has no file representation");
    }

    json meta = {{"construction", inst.construction}};
    json params = json::object();
    for (const auto& [key, value] : inst.params) params[key] = value;
    meta["params"] = std::move(params);
    if (inst.certified) {
        meta["certified"] = {{"opt_set", ids_to_json(inst.certified->opt_set)},
                             {"opt_value", to_rational_string(inst.certified->opt_value)},
                             {"alg_value", to_rational_string(inst.certified->expected_alg_value)}};
    }

    return {{"schema", 1},
            {"n", f.ground_size()},
            {"function", std::move(function)},
            {"constraint", system_to_json(*inst.system)},
            {"meta", std::move(meta)}};
}

Instance instance_from_json(const json& j) {
    if (!j.is_object() || j.value("schema", 0) != 1)
        throw invalid_instance_error("unsupported instance schema");
    const int n = j.at("n").get<int>();
    const json& fn = j.at("function");
    const std::string type = fn.at("type").get<std::string>();

    if (type == "tight-supermodular" || type == "tight-dependency") {
        const int k = fn.at("k").get<int>();
        const int d = fn.at("d").get<int>();
        const Value eps = parse_rational(fn.at("eps").get<std::string>());
        Instance inst = (type == "tight-supermodular") ? build_tight_supermodular(k, d, eps)
                                                       : build_tight_dependency(k, d, eps);
        if (inst.ground_size() != n)
            throw invalid_instance_error("tight construction n does not match the file");
        if (instance_to_json(inst).at("constraint") != j.at("constraint"))
            throw invalid_instance_error("tight construction constraint does not match the file");
        return inst;
    }
    if (type != "hypergraph") throw invalid_instance_error("unknown function type: " + type);

    std::vector<HypergraphFunction::Edge> edges;
    for (const auto& e : fn.at("edges"))
        edges.push_back({ids_from_json(e.at("members")),
                         parse_rational(e.at("weight").get<std::string>())});
    auto f = std::make_shared<HypergraphFunction>(n, std::move(edges));

    std::vector<ElementSet> dep_sets(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) dep_sets[static_cast<std::size_t>(u)] = f->dep_superset(u);

    Instance inst;
    inst.oracles = OracleBundle(f, dep_sets, dep_sets);
    inst.system = system_from_json(j.at("constraint"), n);
    if (j.contains("meta")) {
        const json& meta = j.at("meta");
        inst.construction = meta.value("construction", std::string{"hypergraph"});
        if (meta.contains("params"))
            for (const auto& [key, value] : meta.at("params").items())
                inst.params[key] = value.get<std::string>();
        if (meta.contains("certified")) {
            CertifiedSets cert;
            cert.opt_set = ids_from_json(meta.at("certified").at("opt_set"));
            cert.opt_value = parse_rational(meta.at("certified").at("opt_value").get<std::string>());
            cert.expected_alg_value = parse_rational(meta.at("certified").at("alg_value").get<std::string>());
            inst.certified = std::move(cert);
        }
    } else {
        inst.construction = "hypergraph";
    }
    return inst;
}

std::string canonical_text(const json& j) { return j.dump(2) + "\n"; }

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parameter_error("cannot write " + path);
    out << canonical_text(instance_to_json(inst));
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parameter_error("cannot read " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw invalid_instance_error(std::string("malformed instance JSON: ") + e.what());
    }
    try {
        return instance_from_json(j);
    } catch (const json::exception& e) {
        throw invalid_instance_error(std::string("malformed instance: ") + e.what());
    }
}

std::uint64_t fingerprint(const json& j) {
    const std::string text = canonical_text(j);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fingerprint_hex(const json& j) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fingerprint(j);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace setmax
