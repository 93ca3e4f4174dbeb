#pragma once

#include "stabpoly/rational.hpp"

namespace stabpoly {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  Rational value;
  RationalVector x;
};

/// max c.x subject to A x <= b and x >= 0, by an exact two-phase tableau
/// simplex. Dantzig pricing, switching to Bland's rule for good after a run
/// of degenerate pivots.
LPSolution maximize(const RationalVector& c, const RationalMatrix& a, const RationalVector& b);

/// Whether {x >= 0 : A x <= b} is nonempty.
bool feasible(const RationalMatrix& a, const RationalVector& b);

}  // namespace stabpoly
