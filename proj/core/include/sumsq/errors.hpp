#pragma once

#include <stdexcept>
#include <string>

namespace sumsq {

// Argument outside an operation's mathematical domain (bad discriminant,
// residue class a theorem does not cover, parameter outside an annulus).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numeric sample sits too close to a pole of one of the summands.
class PoleProximityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal cross-check disagreed. Indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sumsq
