#pragma once

#include <stdexcept>
#include <string>

namespace cameral {

/// Numeric routine failed (non-convergence, singular Jacobian, pole-order
/// mismatch, ...). `detail` carries the best iterate / residuals seen.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what, std::string detail = {})
        : std::runtime_error(what), detail_(std::move(detail)) {}
    const std::string& detail() const { return detail_; }

private:
    std::string detail_;
};

/// An instance violates one of the genericity clauses. `clause` names the
/// violated clause ("simplicity", "separation", "b1 vanishes", ...).
class GenericityError : public std::runtime_error {
public:
    GenericityError(std::string clause, const std::string& what)
        : std::runtime_error(clause + ": " + what), clause_(std::move(clause)) {}
    const std::string& clause() const { return clause_; }

private:
    std::string clause_;
};

/// Bad arguments at an API boundary (non-linear hyperplane form, wrong
/// algebra for an involution, malformed sample grids, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace cameral
