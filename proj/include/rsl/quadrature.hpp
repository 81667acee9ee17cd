#pragma once

#include <functional>

namespace rsl {

// Adaptive Simpson on [a, b] with Richardson correction, absolute tolerance
// tol. Deterministic (fixed recursion order). Throws accuracy_error carrying
// the achieved estimate when max_depth is hit before the tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 48);

}  // namespace rsl
