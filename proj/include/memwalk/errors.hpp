#pragma once

#include <stdexcept>
#include <string>

namespace memwalk {

// Rejected caller input: non-unitary coin, unnormalized initial state,
// malformed memory key, bad precondition.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a configured size/time budget.
class ResourceError : public std::length_error {
public:
    explicit ResourceError(const std::string& what) : std::length_error(what) {}
};

// Momentum grid too coarse to represent the walk's support without wrap-around.
class AliasingError : public InvalidInput {
public:
    explicit AliasingError(const std::string& what) : InvalidInput(what) {}
};

}  // namespace memwalk
