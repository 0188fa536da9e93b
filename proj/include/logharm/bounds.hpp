// Growth bounds: distortion envelopes, boundary distances, coefficient bounds.
// All modulus comparisons happen on the log scale, so near-boundary magnitudes
// like exp(2(1-a)r/(1-r)) never overflow and margins read as relative errors.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>

#include "logharm/complex_series.hpp"
#include "logharm/errors.hpp"
#include "logharm/map.hpp"
#include "logharm/measure.hpp"
#include "logharm/representation.hpp"
#include "logharm/verification.hpp"

namespace logharm {

// Which modulus a boundary/Bohr quantity refers to: the factor maps z h(z), z g(z),
// or the full map f.
enum class Factor { H, G, F };

// --- distortion envelopes for maps starlike of order alpha -------------------------

inline double distortion_log_lower_h(double r, double alpha) {
  return -std::log1p(r) - 2.0 * (1.0 - alpha) * r / (1.0 + r);
}
inline double distortion_log_upper_h(double r, double alpha) {
  return -std::log1p(-r) + 2.0 * (1.0 - alpha) * r / (1.0 - r);
}
// The lower envelope of |g| is NOT attained by an aligned measure pair: the exponential
// term wants the atoms opposite to z while the power term wants them at z. The minimum
// over all measure pairs sits at the anti-aligned Dirac configuration (starlike part at
// +z, dilatation at -z), whose second factor is g(z) = (1-z)^{1-alpha} (1+z)^{-alpha}.
inline double distortion_log_lower_g(double r, double alpha) {
  return (1.0 - alpha) * std::log1p(-r) - alpha * std::log1p(r);
}
inline double distortion_log_upper_g(double r, double alpha) {
  return (1.0 - 2.0 * alpha) * std::log1p(-r) + 2.0 * (1.0 - alpha) * r / (1.0 - r);
}
inline double distortion_log_lower_f(double r, double alpha) {
  return std::log(r) - 2.0 * alpha * std::log1p(r) - 4.0 * (1.0 - alpha) * r / (1.0 + r);
}
inline double distortion_log_upper_f(double r, double alpha) {
  return std::log(r) - 2.0 * alpha * std::log1p(-r) + 4.0 * (1.0 - alpha) * r / (1.0 - r);
}

inline double distortion_lower_f(double r, double alpha) {
  return std::exp(distortion_log_lower_f(r, alpha));
}
inline double distortion_upper_f(double r, double alpha) {
  return std::exp(distortion_log_upper_f(r, alpha));
}

// Two-sided |f| envelope over the grid; margin = min(upper - log|f|, log|f| - lower).
inline VerificationReport verify_distortion_f(const LogHarmonicMap& m, double alpha,
                                              const SamplingConfig& cfg) {
  MarginTracker tracker("distortion_f");
  for (double r : cfg.radii)
    for (int j = 0; j < cfg.angles; ++j) {
      const Complex z = std::polar(r, 2.0 * M_PI * double(j) / double(cfg.angles));
      const double lm = log_modulus_f(m, z);
      const double margin = std::min(distortion_log_upper_f(r, alpha) - lm,
                                     lm - distortion_log_lower_f(r, alpha));
      tracker.observe(margin, cfg.required_slack(r), z);
    }
  return tracker.report();
}

// Same sweep for the four factor bounds on |h| and |g|.
inline VerificationReport verify_distortion_hg(const LogHarmonicMap& m, double alpha,
                                               const SamplingConfig& cfg) {
  MarginTracker tracker("distortion_hg");
  for (double r : cfg.radii)
    for (int j = 0; j < cfg.angles; ++j) {
      const Complex z = std::polar(r, 2.0 * M_PI * double(j) / double(cfg.angles));
      const double lh = log_modulus_h(m, z);
      const double lg = log_modulus_g(m, z);
      const double margin =
          std::min(std::min(distortion_log_upper_h(r, alpha) - lh,
                            lh - distortion_log_lower_h(r, alpha)),
                   std::min(distortion_log_upper_g(r, alpha) - lg,
                            lg - distortion_log_lower_g(r, alpha)));
      tracker.observe(margin, cfg.required_slack(r), z);
    }
  return tracker.report();
}

namespace detail {

inline double factor_log_modulus(const LogHarmonicMap& m, Factor which, Complex z) {
  switch (which) {
    case Factor::H: return log_modulus_h(m, z);
    case Factor::G: return log_modulus_g(m, z);
    case Factor::F: return log_modulus_h(m, z) + log_modulus_g(m, z);  // log(|f|/|z|)
  }
  return 0.0;
}

}  // namespace detail

// Distance from 0 to the boundary of H(D), G(D) (H = z h, G = z g) or f(D), realized
// as the smallest boundary modulus. With an exact form the minimum is taken over the
// unit circle itself (|z h| = |h| there; pole angles are skipped); series-only maps
// fall back to the circle r = 0.999, which is only as reliable as their tail.
inline double boundary_distance(const LogHarmonicMap& m, Factor which, int angles = 4096) {
  if (angles < 8) throw BadParameter("boundary_distance: need a few angles");
  double best = std::numeric_limits<double>::infinity();
  if (m.has_exact()) {
    for (int j = 0; j < angles; ++j) {
      const Complex z = std::polar(1.0, 2.0 * M_PI * double(j) / double(angles));
      const double lm = detail::factor_log_modulus(m, which, z);
      if (std::isfinite(lm)) best = std::min(best, lm);
    }
  } else {
    if (m.h.order() < kDefaultOrder)
      throw TruncationUnreliable("boundary_distance: series-only map below order 64");
    const double r = 0.999;
    for (int j = 0; j < angles; ++j) {
      const Complex z = std::polar(r, 2.0 * M_PI * double(j) / double(angles));
      const double lm = detail::factor_log_modulus(m, which, z);
      if (std::isfinite(lm)) best = std::min(best, lm);
    }
  }
  if (!std::isfinite(best))
    throw DenominatorVanishes("boundary_distance: no finite samples on the probe circle");
  return std::exp(best);
}

// Sharp coefficient bounds |a_n| <= 2(1-a) + 1/n, |b_n| <= 2(1-a) + (2a-1)/n for maps
// represented by (delta, kappa). Witness encodes (n, 0) for an a-coefficient and
// (n, 1) for a b-coefficient.
inline VerificationReport verify_coefficient_bounds(const DiscreteMeasure& delta,
                                                    const DiscreteMeasure& kappa, double alpha,
                                                    int n_max, double tol = 1e-9) {
  if (n_max < 1) throw BadParameter("verify_coefficient_bounds: need n_max >= 1");
  MarginTracker tracker("coefficient_bounds");
  for (int n = 1; n <= n_max; ++n) {
    const double bound_a = 2.0 * (1.0 - alpha) + 1.0 / double(n);
    const double bound_b = 2.0 * (1.0 - alpha) + (2.0 * alpha - 1.0) / double(n);
    tracker.observe(bound_a - std::abs(coefficient_a(delta, kappa, alpha, n)), tol,
                    Complex{double(n), 0.0});
    tracker.observe(bound_b - std::abs(coefficient_b(delta, kappa, alpha, n)), tol,
                    Complex{double(n), 1.0});
  }
  return tracker.report();
}

}  // namespace logharm
