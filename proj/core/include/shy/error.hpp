#pragma once

#include <stdexcept>
#include <string>

namespace shy {

// Malformed or inconsistent input: dimension mismatches, points outside an
// image, ill-formed adjacencies, bad map assignments.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A decision procedure was handed an argument outside its domain, e.g. a
// non-surjective map given to the shyness oracle.
class PreconditionViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An exhaustive procedure would exceed its configured size guard.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace shy
