// Log-harmonic maps f(z) = z h(z) conj(g(z)) with h = exp(sum a_n z^n), g = exp(sum b_n z^n).
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "logharm/complex_series.hpp"
#include "logharm/errors.hpp"
#include "logharm/verification.hpp"

namespace logharm {

// Truncated series are authoritative for coefficients but useless near |z| = 1; maps that
// come from a closed form or an atomic-measure representation carry exact log-factor
// evaluators so boundary-adjacent quantities can be computed without truncation error.
// Everything is kept in log form: log h stays O(1/(1-r)) where h itself would overflow.
struct ExactForm {
  std::function<Complex(Complex)> log_h;    // principal branch of log h
  std::function<Complex(Complex)> log_g;    // principal branch of log g
  std::function<Complex(Complex)> zdlog_h;  // z h'(z)/h(z)
  std::function<Complex(Complex)> zdlog_g;  // z g'(z)/g(z)
};

// Closed-form evaluation is mandatory beyond this radius (series tails dominate there).
inline constexpr double kSeriesTrustRadius = 0.95;

struct LogHarmonicMap {
  ComplexSeries h{0};  // constant term 1
  ComplexSeries g{0};  // constant term 1
  std::optional<double> alpha;  // starlikeness order the map is known to satisfy
  std::optional<ExactForm> exact;
  std::string label;

  bool has_exact() const { return exact.has_value(); }
};

inline LogHarmonicMap identity_map(int order = kDefaultOrder) {
  LogHarmonicMap m;
  m.h = ComplexSeries(order);
  m.g = ComplexSeries(order);
  m.h[0] = m.g[0] = Complex{1.0, 0.0};
  m.alpha = 1.0;
  ExactForm ef;
  ef.log_h = [](Complex) { return Complex{0.0, 0.0}; };
  ef.log_g = [](Complex) { return Complex{0.0, 0.0}; };
  ef.zdlog_h = [](Complex) { return Complex{0.0, 0.0}; };
  ef.zdlog_g = [](Complex) { return Complex{0.0, 0.0}; };
  m.exact = std::move(ef);
  m.label = "identity";
  return m;
}

// --- factor values -----------------------------------------------------------------

inline Complex h_value(const LogHarmonicMap& m, Complex z) {
  return m.has_exact() ? std::exp(m.exact->log_h(z)) : evaluate(m.h, z);
}

inline Complex g_value(const LogHarmonicMap& m, Complex z) {
  return m.has_exact() ? std::exp(m.exact->log_g(z)) : evaluate(m.g, z);
}

inline Complex evaluate_f_series(const LogHarmonicMap& m, Complex z) {
  return z * evaluate(m.h, z) * std::conj(evaluate(m.g, z));
}

inline Complex evaluate_f_exact(const LogHarmonicMap& m, Complex z) {
  if (!m.has_exact()) throw BadParameter("evaluate_f_exact: map has no exact form");
  return z * std::exp(m.exact->log_h(z) + std::conj(m.exact->log_g(z)));
}

// Exact form when attached, series otherwise. Series-only maps must stay inside the
// trust radius; beyond it the order-64 tail of an extremal-type map is O(1).
inline Complex evaluate_f(const LogHarmonicMap& m, Complex z) {
  if (m.has_exact()) return evaluate_f_exact(m, z);
  if (std::abs(z) > kSeriesTrustRadius)
    throw TruncationUnreliable("evaluate_f: series-only map evaluated beyond r = 0.95");
  return evaluate_f_series(m, z);
}

// log|f(z)| without forming f (immune to overflow near the boundary). -inf at z = 0.
inline double log_modulus_f(const LogHarmonicMap& m, Complex z) {
  if (m.has_exact())
    return std::log(std::abs(z)) + m.exact->log_h(z).real() + m.exact->log_g(z).real();
  return std::log(std::abs(evaluate_f_series(m, z)));
}

inline double log_modulus_h(const LogHarmonicMap& m, Complex z) {
  return m.has_exact() ? m.exact->log_h(z).real() : std::log(std::abs(evaluate(m.h, z)));
}

inline double log_modulus_g(const LogHarmonicMap& m, Complex z) {
  return m.has_exact() ? m.exact->log_g(z).real() : std::log(std::abs(evaluate(m.g, z)));
}

// --- logarithmic derivatives --------------------------------------------------------

inline Complex zdlog_h(const LogHarmonicMap& m, Complex z) {
  if (m.has_exact()) return m.exact->zdlog_h(z);
  const Complex hz = evaluate(m.h, z);
  if (std::abs(hz) < 1e-300) throw DenominatorVanishes("zdlog_h: h(z) = 0");
  return z * evaluate(differentiate(m.h), z) / hz;
}

inline Complex zdlog_g(const LogHarmonicMap& m, Complex z) {
  if (m.has_exact()) return m.exact->zdlog_g(z);
  const Complex gz = evaluate(m.g, z);
  if (std::abs(gz) < 1e-300) throw DenominatorVanishes("zdlog_g: g(z) = 0");
  return z * evaluate(differentiate(m.g), z) / gz;
}

// Second dilatation mu = (z g'/g) / (1 + z h'/h); sense-preserving maps keep |mu| < 1.
inline Complex dilatation(const LogHarmonicMap& m, Complex z) {
  const Complex denom = Complex{1.0, 0.0} + zdlog_h(m, z);
  if (std::abs(denom) < 1e-12)
    throw DenominatorVanishes("dilatation: 1 + z h'/h vanishes");
  return zdlog_g(m, z) / denom;
}

// Jacobian |f_z|^2 (1 - |mu|^2); positive exactly where the map is sense-preserving.
inline double jacobian(const LogHarmonicMap& m, Complex z) {
  const Complex hz = h_value(m, z);
  const Complex gz = g_value(m, z);
  const Complex fz = (std::abs(z) == 0.0)
                         ? hz * std::conj(gz)
                         : hz * (Complex{1.0, 0.0} + zdlog_h(m, z)) * std::conj(gz);
  const double mu2 = (std::abs(z) == 0.0) ? 0.0 : std::norm(dilatation(m, z));
  return std::norm(fz) * (1.0 - mu2);
}

// The analytic map phi(z) = z h(z)/g(z) shares its starlikeness order with f.
// Returns Phi = h/g as a series, so phi(z) = z * Phi(z).
inline ComplexSeries associated_analytic(const LogHarmonicMap& m) { return m.h / m.g; }

// Re(Df/f) with Df = z f_z - zbar f_zbar; equals Re(1 + z h'/h - conj(z g'/g)).
inline double radial_growth_rate(const LogHarmonicMap& m, Complex z) {
  return 1.0 + zdlog_h(m, z).real() - zdlog_g(m, z).real();
}

// Sweeps Re(Df/f) - alpha over the grid; nonnegative (up to tol) iff the map is
// starlike of order alpha on the sampled disk.
inline VerificationReport starlike_order_margin(const LogHarmonicMap& m, double alpha,
                                                const SamplingConfig& cfg) {
  if (!m.has_exact())
    for (double r : cfg.radii)
      if (r > kSeriesTrustRadius)
        throw TruncationUnreliable("starlike_order_margin: series-only map on a grid "
                                   "reaching beyond r = 0.95");
  MarginTracker tracker("starlike_order");
  for (double r : cfg.radii)
    for (int j = 0; j < cfg.angles; ++j) {
      const Complex z = std::polar(r, 2.0 * M_PI * double(j) / double(cfg.angles));
      tracker.observe(radial_growth_rate(m, z) - alpha, cfg.required_slack(r), z);
    }
  return tracker.report();
}

}  // namespace logharm
