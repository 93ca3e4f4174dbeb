#pragma once

// Extreme rays of a pointed polyhedral cone {h : A h >= 0} by the double
// description method with the algebraic adjacency test.

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>

namespace stabpoly {

using IntegerRows = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct DDOptions {
  /// Hard limit on the number of rays held after any insertion step.
  std::size_t ray_cap = 4'000'000;
  int workers = 1;
};

struct DDStats {
  std::size_t peak_rays = 0;
  std::size_t adjacency_tests = 0;
};

/// Rows of the result are primitive integer extreme rays, sorted
/// lexicographically. Constraints are inserted in row order; the initial
/// simplex cone uses the first linearly independent rows. A must have full
/// column rank. Throws BudgetExceeded past the ray cap.
IntegerRows extreme_rays(const IntegerRows& a, const DDOptions& options = {}, DDStats* stats = nullptr);

}  // namespace stabpoly
