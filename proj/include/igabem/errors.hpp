#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace igabem {

/// Quadrature failed to reach the requested tolerance before hitting the
/// order cap. Carries the best available estimate.
class QuadratureNonConvergence : public std::runtime_error {
public:
    QuadratureNonConvergence(const std::string& what, double best, double change)
        : std::runtime_error(what), best_estimate(best), last_relative_change(change) {}

    double best_estimate;
    double last_relative_change;
};

/// H-LU hit a singular diagonal block.
class FactorizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative solver exhausted its iteration budget.
class SolverNonConvergence : public std::runtime_error {
public:
    SolverNonConvergence(const std::string& what, std::vector<double> history)
        : std::runtime_error(what), residual_history(std::move(history)) {}

    std::vector<double> residual_history;
};

}  // namespace igabem
