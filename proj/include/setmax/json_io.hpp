#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "setmax/instance.hpp"

namespace setmax {

using nlohmann::json;

/// Instance file schema (version 1):
/// {
///   "constraint": {"type":"uniform","k":K}
///              | {"type":"partition","parts":[[ids..]..],"capacities":[..]}
///              | {"type":"intersection","of":[constraint..]},
///   "function":  {"type":"hypergraph","edges":[{"members":[ids..],"weight":"p/q"}..]}
///              | {"type":"tight-supermodular","k":K,"d":D,"eps":"p/q"}
///              | {"type":"tight-dependency","k":K,"d":D,"eps":"p/q"},
///   "meta": {"construction":"..","params":{..}, "certified": {...}? },
///   "n": N, "schema": 1
/// }
/// Id lists are ascending, rationals canonical "p" / "p/q" strings, hyperedges
/// sorted lexicographically, partition parts sorted by smallest member.
/// Serialization round-trips bit-exactly; tagged oracle constructions are
/// re-instantiated through their builder on load.
json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j);

/// Canonical text rendering used for files and fingerprints (sorted keys,
/// two-space indent, trailing newline).
std::string canonical_text(const json& j);

void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);

/// FNV-1a 64 over the canonical text; reports reference instances by this.
std::uint64_t fingerprint(const json& j);
std::string fingerprint_hex(const json& j);

json system_to_json(const IndependenceSystem& sys);
std::shared_ptr<const IndependenceSystem> system_from_json(const json& j, int n);

} // namespace setmax
