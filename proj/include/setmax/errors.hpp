#pragma once

#include <stdexcept>
#include <string>

namespace setmax {

/// Malformed instance data: element ids out of range, empty or duplicate
/// hyperedges, inconsistent part structure.
class invalid_instance_error : public std::runtime_error {
public:
    explicit invalid_instance_error(const std::string& what) : std::runtime_error(what) {}
};

/// A brute-force routine was asked to run past its size cap.
class size_limit_error : public std::runtime_error {
public:
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad caller-supplied parameter (negative budget, eps <= 0, precondition
/// violations such as is_base on a dependent set).
class parameter_error : public std::runtime_error {
public:
    explicit parameter_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace setmax
