#pragma once

#include <stdexcept>
#include <string>

namespace unistoch {

/// Evaluation hit a pole of a Weingarten function (dimension too small).
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// A computation was refused because its estimated cost exceeds the budget.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, double estimated_cost)
        : std::runtime_error(what), estimated_cost_(estimated_cost) {}

    double estimated_cost() const { return estimated_cost_; }

private:
    double estimated_cost_;
};

} // namespace unistoch
