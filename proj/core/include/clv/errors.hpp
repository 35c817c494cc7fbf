#pragma once

#include <stdexcept>
#include <string>

namespace clv {

// Thrown when an operation is called on data that breaks its preconditions
// (bad indices, structurally invalid inputs, malformed files).
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a request exceeds a configured resource bound
// (enumeration degree, matrix size).
class resource_limit : public std::runtime_error {
public:
    explicit resource_limit(const std::string& what) : std::runtime_error(what) {}
};

} // namespace clv
