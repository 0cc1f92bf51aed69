#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "setmax/element_set.hpp"
#include "setmax/independence.hpp"
#include "setmax/oracles.hpp"
#include "setmax/rational.hpp"

namespace setmax {

/// Sets a construction certifies about itself: a known high-value independent
/// set (its value is the instance optimum for the parameter ranges the tight
/// examples are stated for) and the value the matching greedy is expected to
/// output.
struct CertifiedSets {
    ElementSet opt_set;
    Value opt_value;
    Value expected_alg_value;
};

/// One solvable problem: oracles + constraint + provenance. All generators
/// are pure functions of their parameters (and seed), so instances rebuild
/// bit-exactly.
struct Instance {
    OracleBundle oracles;
    std::shared_ptr<const IndependenceSystem> system;
    std::string construction;                  // generator name
    std::map<std::string, std::string> params; // canonical text parameters
    std::optional<CertifiedSets> certified;
    std::vector<std::string> labels; // optional per-element labels, regenerable

    int ground_size() const { return oracles.f ? oracles.f->ground_size() : 0; }
};

} // namespace setmax
