#include "rsl/quadrature.hpp"

#include <cmath>

#include "rsl/errors.hpp"

namespace rsl {

namespace {

struct SimpsonState {
  const std::function<double(double)>& f;
  double worst = 0.0;  // largest unresolved panel estimate
};

double simpson_panel(SimpsonState& st, double a, double b, double fa,
                     double fm, double fb, double whole, double tol,
                     int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = st.f(lm), frm = st.f(rm);
  const double h = b - a;
  const double left = h / 12.0 * (fa + 4.0 * flm + fm);
  const double right = h / 12.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || h <= 1e-14 * (std::abs(a) + 1.0))
    return left + right + delta / 15.0;
  if (depth <= 0) {
    st.worst = std::max(st.worst, std::abs(delta) / 15.0);
    return left + right + delta / 15.0;
  }
  return simpson_panel(st, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
         simpson_panel(st, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth) {
  if (a == b) return 0.0;
  SimpsonState st{f, 0.0};
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double value =
      simpson_panel(st, a, b, fa, fm, fb, whole, tol, max_depth);
  if (st.worst > tol)
    throw accuracy_error("adaptive_simpson: tolerance not reached", st.worst);
  return value;
}

}  // namespace rsl
