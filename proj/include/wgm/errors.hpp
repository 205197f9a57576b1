#pragma once

#include <stdexcept>
#include <string>

namespace wgm {

// Bad values passed by a caller: out-of-range generator, malformed
// partition string, vertex id not in the graph, and the like.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// An object violates an invariant the operation relies on, e.g. asking for
// the activated bonds of an edge that is not simple, or a computed
// Kazhdan-Lusztig polynomial breaking the degree bound.  `field` names the
// offending piece for machine consumption.
class structural_error : public std::runtime_error {
public:
    structural_error(std::string field, const std::string& what)
        : std::runtime_error(what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// The request is well-formed but too large for this build (e.g. a W-graph
// rank past the guard).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wgm
