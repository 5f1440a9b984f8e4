#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

// Input that does not satisfy a documented precondition (bad Cartan data,
// inadmissible parameters, malformed descriptors).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (j > m in qbinom, i == j in F_ij, ...).
struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured bound (degree bound, rule budget, dimension budget) was hit.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient not in the localization at q = 1.
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed result contradicts a proven structural statement.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

}  // namespace qsym
