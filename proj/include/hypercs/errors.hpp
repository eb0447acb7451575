#pragma once

#include <stdexcept>
#include <string>

namespace hypercs {

/// Thrown when an iterative scheme (series, contour sum, quadrature) fails
/// to reach its tolerance within the allowed work budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hypercs
