#pragma once

#include <vector>

#include "groupcast/rational.hpp"

namespace groupcast {

struct LpSolution {
    Rational value;
    std::vector<Rational> x;
};

// min c.x  subject to  A x <= b, x >= 0.
// Exact two-phase dense simplex with Bland's rule. Throws std::runtime_error
// on infeasible or unbounded input.
LpSolution solve_lp_min(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                        const std::vector<Rational>& c);

}  // namespace groupcast
