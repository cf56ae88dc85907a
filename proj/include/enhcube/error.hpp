#pragma once

#include <stdexcept>
#include <string>

namespace enhcube {

enum class ErrorKind {
    invalid_params,            // bad (n, k) pair or out-of-range vertex
    not_an_edge,               // vertex pair matches no edge pattern
    decomposition_unavailable, // k = n, no product structure
    inadmissible_length,       // length outside the admissible spectrum
    precondition,              // construction called with violated assumptions
    range,                     // no valid split / value outside declared range
    resource_limit,            // instance exceeds a size guard
    configuration,             // bad sweep/CLI configuration
    internal,                  // invariant breach; always a bug
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace enhcube
