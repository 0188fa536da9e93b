// Bohr radii: the largest r where the majorant series of z h, z g, or f stays
// below the sharp boundary-distance constant on the right of its defining equation.
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "logharm/bounds.hpp"
#include "logharm/complex_series.hpp"
#include "logharm/errors.hpp"
#include "logharm/map.hpp"
#include "logharm/verification.hpp"

namespace logharm {

struct RadiusSolution {
  double radius = 0.0;
  double residual = 0.0;  // LHS(radius) - RHS of the defining equation
  int iterations = 0;
};

namespace detail {

// log LHS of the defining equation: the sharp majorant r exp(sum bound_n r^n) in
// closed form, which is r * (extremal upper distortion bound of the factor).
inline double bohr_log_lhs(double r, double alpha, Factor which) {
  switch (which) {
    case Factor::H: return std::log(r) + distortion_log_upper_h(r, alpha);
    case Factor::G: return std::log(r) + distortion_log_upper_g(r, alpha);
    case Factor::F: return distortion_log_upper_f(r, alpha);
  }
  return 0.0;
}

// log RHS: the sharp lower bound on the boundary distance, attained by the extremal map.
inline double bohr_log_rhs(double alpha, Factor which) {
  const double l2 = std::log(2.0);
  switch (which) {
    case Factor::H: return -l2 - (1.0 - alpha);
    case Factor::G: return (1.0 - 2.0 * alpha) * l2 - (1.0 - alpha);
    case Factor::F: return -2.0 * alpha * l2 - 2.0 * (1.0 - alpha);
  }
  return 0.0;
}

}  // namespace detail

// Bisection for the unique root of LHS(r) = RHS in (0,1); the LHS is strictly
// increasing from 0 to infinity, so the bracket [1e-9, 1-1e-9] always straddles.
inline RadiusSolution solve_bohr_radius(double alpha, Factor which) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw BadParameter("solve_bohr_radius: alpha in [0,1]");
  const double target = detail::bohr_log_rhs(alpha, which);
  double lo = 1e-9, hi = 1.0 - 1e-9;
  RadiusSolution sol;
  while (hi - lo > 1e-16 && sol.iterations < 100) {
    const double mid = 0.5 * (lo + hi);
    (detail::bohr_log_lhs(mid, alpha, which) < target ? lo : hi) = mid;
    ++sol.iterations;
  }
  sol.radius = 0.5 * (lo + hi);
  sol.residual = std::exp(detail::bohr_log_lhs(sol.radius, alpha, which)) - std::exp(target);
  return sol;
}

// Majorant value r exp(sum_n |a_n| r^n) for the chosen factor (|a_n| + |b_n| for F),
// truncated at the map's order with a certified geometric tail bound added on top.
// The tail uses the sharp coefficient bounds at the map's order of starlikeness
// (alpha = 0 if unknown, the worst case); TailTooLarge if it exceeds tail_tol.
inline double bohr_sum(const LogHarmonicMap& m, double r, Factor which,
                       double tail_tol = 1e-9) {
  if (!(r >= 0.0 && r < 1.0)) throw BadParameter("bohr_sum: need r in [0,1)");
  if (r == 0.0) return 0.0;
  const double alpha = m.alpha.value_or(0.0);
  const int order = std::min(m.h.order(), m.g.order());

  double sum = 0.0, per_n_bound = 0.0;
  const ComplexSeries log_h = log_series(m.h);
  const ComplexSeries log_g = log_series(m.g);
  double rn = 1.0;
  for (int n = 1; n <= order; ++n) {
    rn *= r;
    switch (which) {
      case Factor::H: sum += std::abs(log_h[n]) * rn; break;
      case Factor::G: sum += std::abs(log_g[n]) * rn; break;
      case Factor::F: sum += (std::abs(log_h[n]) + std::abs(log_g[n])) * rn; break;
    }
  }
  switch (which) {  // sharp bound on the (order+1)-th majorant coefficient, decreasing in n
    case Factor::H: per_n_bound = 2.0 * (1.0 - alpha) + 1.0 / double(order + 1); break;
    case Factor::G: per_n_bound = 2.0 * (1.0 - alpha) + std::abs(2.0 * alpha - 1.0); break;
    case Factor::F: per_n_bound = 4.0 * (1.0 - alpha) + 2.0 * alpha / double(order + 1); break;
  }
  const double tail = per_n_bound * rn * r / (1.0 - r);  // sum_{n > order} bound * r^n
  if (tail > tail_tol)
    throw TailTooLarge("bohr_sum: certified tail exceeds tolerance at this radius");
  return r * std::exp(sum + tail);
}

// Checks the Bohr inequality majorant(r) <= sharp boundary constant (the RHS of the
// defining equation) for r up to the solved radius. The margin is constant - majorant;
// for the extremal map it collapses to ~0 at the radius itself, which is the sharpness
// half of the statement. The map's own image boundary can only be farther away.
inline VerificationReport verify_bohr(const LogHarmonicMap& m, double alpha, Factor which,
                                      int n_points = 33, double tol = 1e-9) {
  if (n_points < 2) throw BadParameter("verify_bohr: need n_points >= 2");
  const RadiusSolution sol = solve_bohr_radius(alpha, which);
  const double d = std::exp(detail::bohr_log_rhs(alpha, which));
  MarginTracker tracker("bohr_inequality");
  for (int k = 1; k <= n_points; ++k) {
    const double r = sol.radius * double(k) / double(n_points);
    tracker.observe(d - bohr_sum(m, r, which), tol, Complex{r, 0.0});
  }
  return tracker.report();
}

}  // namespace logharm
