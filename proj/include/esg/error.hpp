#pragma once

#include <stdexcept>
#include <string>

namespace esg {

/// Operands that do not belong together: an element from another group,
/// a labeling that does not cover the graph, a set that is not a subgroup.
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Arguments outside an operation's domain (bad sizes, non-divisors,
/// cyclic input where a forest is required, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed textual input (group specs, element literals, graph files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace esg
