#include "nsspec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "nsspec/error.hpp"

namespace nsspec {

namespace {

constexpr std::size_t kMaxEvaluations = 2000000;

// The error estimate is compared against the L1 norm of the integrand as well
// as |value| so that cancellation does not make the test unattainable.
void require_converged(const QuadratureResult& r, double l1, double rel_tol, double abs_tol,
                       double a, double b) {
  const double scale = std::max(std::abs(r.value), l1);
  if (!std::isfinite(r.value) || r.est_error > std::max(rel_tol * scale, abs_tol)) {
    std::ostringstream os;
    os << "quadrature on [" << a << ", " << b << "] did not converge: value " << r.value
       << ", error estimate " << r.est_error << " after " << r.evaluations << " evaluations";
    throw NumericalError(os.str());
  }
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, double rel_tol,
                           double abs_tol) {
  QuadratureResult out;
  if (a == b) return out;
  rel_tol = std::max(rel_tol, 1e-14);
  std::size_t count = 0;

  // Global adaptive bisection: always split the panel with the largest error.
  // Boost's own recursion compares unscaled local errors against scaled
  // tolerances, which never terminates on narrow panels.
  struct Panel {
    double a, b, value, error, l1;
    bool operator<(const Panel& o) const { return error < o.error; }
  };
  auto rule = [&](double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double err = 0.0;
    double l1 = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        [&](double x) {
          ++count;
          return f(mid + half * x);
        },
        -1.0, 1.0, 0, 0.0, &err, &l1);
    return Panel{lo, hi, half * v, std::abs(half) * err, std::abs(half) * l1};
  };

  std::priority_queue<Panel> heap;
  heap.push(rule(a, b));
  double value = heap.top().value;
  double error = heap.top().error;
  double l1 = heap.top().l1;
  while (error > std::max(rel_tol * std::max(std::abs(value), l1), abs_tol) &&
         count < kMaxEvaluations) {
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) break;
    heap.pop();
    const Panel left = rule(worst.a, mid);
    const Panel right = rule(mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    heap.push(left);
    heap.push(right);
  }
  // Resum to drop the drift of the running updates.
  value = error = l1 = 0.0;
  for (; !heap.empty(); heap.pop()) {
    value += heap.top().value;
    error += heap.top().error;
    l1 += heap.top().l1;
  }
  out.value = value;
  out.est_error = error;
  out.evaluations = count;
  require_converged(out, l1, rel_tol, abs_tol, a, b);
  return out;
}

QuadratureResult integrate_panels(const Integrand& f, std::span<const double> breaks,
                                  double rel_tol) {
  QuadratureResult out;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    out += integrate(f, breaks[i], breaks[i + 1], rel_tol);
  return out;
}

QuadratureResult integrate_endpoint_singular(const Integrand& f, double a, double b,
                                             double rel_tol) {
  QuadratureResult out;
  if (a == b) return out;
  std::size_t count = 0;
  auto counted = [&](double x) {
    ++count;
    return f(x);
  };
  boost::math::quadrature::tanh_sinh<double> rule(15);
  double error = 0.0;
  double l1 = 0.0;
  out.value = rule.integrate(counted, a, b, rel_tol, &error, &l1);
  out.est_error = error;
  out.evaluations = count;
  // The estimate is the change between the last two refinement levels; the
  // rule converges double-exponentially, so the true error is far smaller.
  require_converged(out, l1, std::max(rel_tol, 1e-14) * 100.0, 1e-300, a, b);
  return out;
}

QuadratureResult integrate_to_infinity(const Integrand& f, double a, double split,
                                       double rel_tol) {
  if (!(split > a) || !(split > 0.0))
    throw DomainError("integrate_to_infinity: split must exceed the lower limit");
  QuadratureResult out = integrate(f, a, split, rel_tol);
  out += integrate([&](double u) { return f(1.0 / u) / (u * u); }, 0.0, 1.0 / split, rel_tol);
  return out;
}

}  // namespace nsspec
