#pragma once

#include <stdexcept>
#include <string>

namespace actorkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad shapes, mixed fields, failed preconditions.
class InputError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

// A combinatorial cap (group order, automorphism count, enumeration size) was hit.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// An internal consistency certificate failed (closure of an actor candidate,
// inner multipliers outside the candidate span). Always a bug witness.
class ConstructionError : public Error {
public:
    using Error::Error;
};

}  // namespace actorkit
