#pragma once

#include <stdexcept>
#include <string>

namespace hexlap {

// Bad user input: malformed files, out-of-range indices, graphs outside the
// domain of the construction (disconnected, edgeless).
class InputError : public std::invalid_argument {
public:
    enum class Kind {
        IndexOutOfRange,
        SelfLoop,
        DuplicateEdge,
        Malformed,
        VertexCount,
        Disconnected,
        NoEdges,
        BadParameter,
    };

    InputError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// Predicted size of an iterated construction exceeds the vertex budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Solver pathologies: Jacobi non-convergence, missing root brackets,
// spectra that violate the structural assumptions of the recursion.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A closed form was evaluated outside its domain (e.g. a fractional
// exponent in a spanning-tree product).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace hexlap
