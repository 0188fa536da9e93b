// Pre-Schwarzian/Schwarzian derivatives and Bloch-type seminorms for non-vanishing
// log-harmonic maps f = h conj(g) (no factor of z; h and g zero-free on the disk).
//
// The second dilatation here is the complex ratio mu = (g'/g)/(h'/h); with
//   A = h''/h' - h'/h   and   B = conj(mu) mu' / (1 - |mu|^2),
// the pre-Schwarzian is P_f = A - B and the Schwarzian is
//   S_f = A' - A^2/2 + A B - conj(mu) mu'' / (1 - |mu|^2) - (3/2) B^2.
// P_f is anti-analytic in no variable: d/dzbar P_f = -|mu'|^2/(1-|mu|^2)^2, and the
// mixed derivative d^2 P_f / dz dzbar has the closed form in mixed_derivative_pre_schwarzian
// below (note the overall minus sign; it is forced by differentiating P_f and is
// confirmed against a finite-difference Laplacian). In particular P_f is harmonic
// exactly when mu is constant.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <utility>

#include "logharm/complex_series.hpp"
#include "logharm/errors.hpp"
#include "logharm/verification.hpp"

namespace logharm {

// f = h conj(g), h(0) != 0, g(0) = 1 (factories normalize g's constant term).
struct NonVanishingMap {
  ComplexSeries h{0};
  ComplexSeries g{0};
  std::string label;
};

inline NonVanishingMap make_nonvanishing(ComplexSeries h, ComplexSeries g,
                                         std::string label = "") {
  if (std::abs(h[0]) < kConstantTermTol)
    throw ZeroConstantTerm("make_nonvanishing: h(0) must be nonzero");
  if (std::abs(g[0]) < kConstantTermTol)
    throw ZeroConstantTerm("make_nonvanishing: g(0) must be nonzero");
  const Complex c = g[0];
  NonVanishingMap m;
  m.h = h * std::conj(c);  // h conj(g) is unchanged by (h, g) -> (h conj(c), g / c)
  m.g = g * (Complex{1.0, 0.0} / c);
  m.label = std::move(label);
  return m;
}

// Builds g from a prescribed analytic dilatation: log g = integral of mu h'/h.
inline NonVanishingMap from_dilatation(const ComplexSeries& h, const ComplexSeries& mu,
                                       std::string label = "") {
  if (std::abs(h[0]) < kConstantTermTol)
    throw ZeroConstantTerm("from_dilatation: h(0) must be nonzero");
  const ComplexSeries log_g = integrate(mu * (differentiate(h) / h)).truncated(h.order());
  return make_nonvanishing(h, exp_series(log_g), std::move(label));
}

// Value and first three derivatives of a series at a point.
struct Jet3 {
  Complex v0, v1, v2, v3;
};

inline Jet3 jet3(const ComplexSeries& s, Complex z) {
  const ComplexSeries d1 = differentiate(s);
  const ComplexSeries d2 = differentiate(d1);
  return {evaluate(s, z), evaluate(d1, z), evaluate(d2, z), evaluate(differentiate(d2), z)};
}

// Dilatation jet (mu, mu', mu'') from the factor jets: mu = v/w with v = g'/g, w = h'/h.
struct DilatationJet {
  Complex mu, mu1, mu2;
};

namespace detail {

struct LogDerivJet {
  Complex v, v1, v2;  // s'/s and its first two derivatives
};

inline LogDerivJet log_deriv_jet(const Jet3& j, const char* who) {
  if (std::abs(j.v0) < 1e-300) throw DenominatorVanishes(std::string(who) + "(z) = 0");
  const Complex v = j.v1 / j.v0;
  const Complex v1 = j.v2 / j.v0 - v * v;
  const Complex v2 = j.v3 / j.v0 - 3.0 * (j.v2 / j.v0) * v + 2.0 * v * v * v;
  return {v, v1, v2};
}

inline DilatationJet dilatation_jet(const Jet3& hj, const Jet3& gj) {
  if (std::abs(hj.v1) < 1e-12)
    throw CriticalPoint("dilatation: h'(z) = 0");
  const LogDerivJet w = log_deriv_jet(hj, "h");
  const LogDerivJet v = log_deriv_jet(gj, "g");
  const Complex mu = v.v / w.v;
  const Complex mu1 = (v.v1 * w.v - v.v * w.v1) / (w.v * w.v);
  const Complex mu2 = (v.v2 * w.v - v.v * w.v2) / (w.v * w.v) -
                      2.0 * w.v1 * (v.v1 * w.v - v.v * w.v1) / (w.v * w.v * w.v);
  return {mu, mu1, mu2};
}

inline void require_sense_preserving(const DilatationJet& d) {
  if (std::norm(d.mu) >= 1.0)
    throw DegenerateDilatation("curvature formulas need |mu(z)| < 1");
}

// A = h''/h' - h'/h and its z-derivative, from the h jet.
inline std::pair<Complex, Complex> analytic_part(const Jet3& hj) {
  if (std::abs(hj.v1) < 1e-12) throw CriticalPoint("pre-Schwarzian: h'(z) = 0");
  const Complex q = hj.v2 / hj.v1;        // h''/h'
  const Complex p = hj.v1 / hj.v0;        // h'/h
  const Complex A = q - p;
  const Complex A1 = (hj.v3 / hj.v1 - q * q) - (hj.v2 / hj.v0 - p * p);
  return {A, A1};
}

inline Complex pre_schwarzian_from_jets(const Jet3& hj, const Jet3& gj) {
  const DilatationJet d = dilatation_jet(hj, gj);
  require_sense_preserving(d);
  const Complex B = std::conj(d.mu) * d.mu1 / (1.0 - std::norm(d.mu));
  return analytic_part(hj).first - B;
}

inline Complex schwarzian_from_jets(const Jet3& hj, const Jet3& gj) {
  const DilatationJet d = dilatation_jet(hj, gj);
  require_sense_preserving(d);
  const double den = 1.0 - std::norm(d.mu);
  const Complex B = std::conj(d.mu) * d.mu1 / den;
  const auto [A, A1] = analytic_part(hj);
  return A1 - 0.5 * A * A + A * B - std::conj(d.mu) * d.mu2 / den - 1.5 * B * B;
}

}  // namespace detail

inline Complex dilatation(const NonVanishingMap& m, Complex z) {
  return detail::dilatation_jet(jet3(m.h, z), jet3(m.g, z)).mu;
}

inline Complex pre_schwarzian(const NonVanishingMap& m, Complex z) {
  return detail::pre_schwarzian_from_jets(jet3(m.h, z), jet3(m.g, z));
}

inline Complex schwarzian(const NonVanishingMap& m, Complex z) {
  return detail::schwarzian_from_jets(jet3(m.h, z), jet3(m.g, z));
}

// d P_f / dzbar = -|mu'|^2 / (1 - |mu|^2)^2  (zero iff mu is locally constant).
inline Complex dzbar_pre_schwarzian(const NonVanishingMap& m, Complex z) {
  const DilatationJet d = detail::dilatation_jet(jet3(m.h, z), jet3(m.g, z));
  detail::require_sense_preserving(d);
  const double den = 1.0 - std::norm(d.mu);
  return Complex{-std::norm(d.mu1) / (den * den), 0.0};
}

// d^2 P_f / dz dzbar = -conj(mu') [mu'' (1-|mu|^2) + 2 mu'^2 conj(mu)] / (1-|mu|^2)^3.
// Vanishes identically iff mu is constant (the harmonicity dichotomy for P_f).
inline Complex mixed_derivative_pre_schwarzian(const NonVanishingMap& m, Complex z) {
  const DilatationJet d = detail::dilatation_jet(jet3(m.h, z), jet3(m.g, z));
  detail::require_sense_preserving(d);
  const double den = 1.0 - std::norm(d.mu);
  return -std::conj(d.mu1) *
         (d.mu2 * den + 2.0 * d.mu1 * d.mu1 * std::conj(d.mu)) / (den * den * den);
}

// --- composition with an analytic phi ------------------------------------------------

namespace detail {

// Jet of s(phi(z)) from the jet of s at phi(z) and the jet of phi at z.
inline Jet3 compose_jet(const Jet3& s_at_w, const Jet3& phi_at_z) {
  const Complex p1 = phi_at_z.v1, p2 = phi_at_z.v2, p3 = phi_at_z.v3;
  Jet3 out;
  out.v0 = s_at_w.v0;
  out.v1 = s_at_w.v1 * p1;
  out.v2 = s_at_w.v2 * p1 * p1 + s_at_w.v1 * p2;
  out.v3 = s_at_w.v3 * p1 * p1 * p1 + 3.0 * s_at_w.v2 * p1 * p2 + s_at_w.v1 * p3;
  return out;
}

}  // namespace detail

struct ChainRuleResiduals {
  double pre = 0.0;         // |P_{f o phi} - ((P_f o phi) phi' + P_phi)|
  double schwarzian = 0.0;  // |S_{f o phi} - ((S_f o phi) phi'^2 + S_phi)|
};

// Verifies both composition laws at z. The left sides are computed from the composed
// map's own factors h(phi), g(phi) (jets via the chain rule for derivatives only);
// the right sides use P_f, S_f at phi(z) plus the analytic P_phi, S_phi.
inline ChainRuleResiduals chain_rule_check(const NonVanishingMap& m, const ComplexSeries& phi,
                                           Complex z) {
  const Jet3 phi_jet = jet3(phi, z);
  if (std::abs(phi_jet.v1) < 1e-12)
    throw CriticalPoint("chain_rule_check: phi'(z) = 0");
  const Complex w = phi_jet.v0;
  const Jet3 h_at_w = jet3(m.h, w);
  const Jet3 g_at_w = jet3(m.g, w);
  const Jet3 H = detail::compose_jet(h_at_w, phi_jet);
  const Jet3 G = detail::compose_jet(g_at_w, phi_jet);

  const Complex p_phi = phi_jet.v2 / phi_jet.v1;
  const Complex s_phi =
      phi_jet.v3 / phi_jet.v1 - 1.5 * (phi_jet.v2 / phi_jet.v1) * (phi_jet.v2 / phi_jet.v1);

  const Complex lhs_pre = detail::pre_schwarzian_from_jets(H, G);
  const Complex rhs_pre =
      detail::pre_schwarzian_from_jets(h_at_w, g_at_w) * phi_jet.v1 + p_phi;
  const Complex lhs_s = detail::schwarzian_from_jets(H, G);
  const Complex rhs_s =
      detail::schwarzian_from_jets(h_at_w, g_at_w) * phi_jet.v1 * phi_jet.v1 + s_phi;

  return {std::abs(lhs_pre - rhs_pre), std::abs(lhs_s - rhs_s)};
}

// --- Bloch-type seminorm --------------------------------------------------------------

namespace detail {

// (1 - |z|^2)(|h'/h| + |g'/g|) as a function of polar coordinates.
inline double bloch_objective(const NonVanishingMap& m, double r, double theta) {
  const Complex z = std::polar(r, theta);
  const Complex hz = evaluate(m.h, z), gz = evaluate(m.g, z);
  if (std::abs(hz) < 1e-300 || std::abs(gz) < 1e-300)
    throw DenominatorVanishes("bloch objective: factor vanishes on the grid");
  const double s = std::abs(evaluate(differentiate(m.h), z) / hz) +
                   std::abs(evaluate(differentiate(m.g), z) / gz);
  return (1.0 - r * r) * s;
}

// Golden-section maximization of a unimodal-enough slice.
template <typename F>
inline double golden_max(F&& f, double lo, double hi, int iters = 60) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a); f2 = f(x2);
    } else {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a); f1 = f(x1);
    }
  }
  return std::max(f1, f2);
}

struct PolarMax {
  double value = 0.0;
  double r = 0.0;
  double theta = 0.0;
};

// Grid sweep plus alternating golden-section polish around the best cell.
template <typename Objective>
inline PolarMax polar_supremum(Objective&& u, const SamplingConfig& cfg) {
  PolarMax best{u(0.0, 0.0), 0.0, 0.0};  // center belongs to every sweep
  for (double r : cfg.radii)
    for (int j = 0; j < cfg.angles; ++j) {
      const double th = 2.0 * M_PI * double(j) / double(cfg.angles);
      const double val = u(r, th);
      if (val > best.value) best = {val, r, th};
    }
  const double dth = 2.0 * M_PI / double(cfg.angles);
  double dr = 0.05, half_th = dth;
  for (int round = 0; round < 4; ++round) {
    const double th_now = best.theta;
    golden_max([&](double r) {
      const double val = u(r, th_now);
      if (val > best.value) best = {val, r, th_now};
      return val;
    }, std::max(0.0, best.r - dr), std::min(0.999, best.r + dr));
    const double r_now = best.r;
    golden_max([&](double th) {
      const double val = u(r_now, th);
      if (val > best.value) best = {val, r_now, th};
      return val;
    }, best.theta - half_th, best.theta + half_th);
    dr *= 0.2;
    half_th *= 0.2;
  }
  return best;
}

}  // namespace detail

// beta(f) = sup (1-|z|^2)(|h'/h| + |g'/g|): grid sweep + local polish.
inline double bloch_seminorm(const NonVanishingMap& m, const SamplingConfig& cfg) {
  return detail::polar_supremum(
      [&](double r, double th) { return detail::bloch_objective(m, r, th); }, cfg).value;
}

// Full norm adds the value at the origin.
inline double bloch_norm(const NonVanishingMap& m, const SamplingConfig& cfg) {
  return std::abs(m.h[0]) * std::abs(m.g[0]) + bloch_seminorm(m, cfg);
}

// F = f^a conj(f)^b has factors H = h^a g^b and G = h^conj(b) g^conj(a).
inline NonVanishingMap affine_transform(const NonVanishingMap& m, Complex a, Complex b) {
  const Complex h0 = m.h[0];
  const ComplexSeries log_h_tail = log_series(m.h * (Complex{1.0, 0.0} / h0));
  const ComplexSeries log_g = log_series(m.g);
  ComplexSeries log_H = a * log_h_tail + b * log_g;
  ComplexSeries log_G = std::conj(b) * log_h_tail + std::conj(a) * log_g;
  log_H[0] += a * std::log(h0);
  log_G[0] += std::conj(b) * std::log(h0);
  return make_nonvanishing(exp_series(log_H), exp_series(log_G), "affine");
}

// Seminorm of f composed with the disk automorphism (z + a)/(1 + conj(a) z), computed
// without re-expanding the series: the objective is beta(f)'s integrand at phi(z).
inline double bloch_seminorm_composed(const NonVanishingMap& m, Complex a,
                                      const SamplingConfig& cfg) {
  if (!(std::abs(a) < 1.0)) throw BadParameter("bloch_seminorm_composed: need |a| < 1");
  auto objective = [&](double r, double th) {
    const Complex z = std::polar(r, th);
    const Complex denom = Complex{1.0, 0.0} + std::conj(a) * z;
    const Complex w = (z + a) / denom;
    const double dphi = (1.0 - std::norm(a)) / std::norm(denom);
    const Complex hw = evaluate(m.h, w), gw = evaluate(m.g, w);
    if (std::abs(hw) < 1e-300 || std::abs(gw) < 1e-300)
      throw DenominatorVanishes("bloch objective: factor vanishes on the grid");
    const double s = std::abs(evaluate(differentiate(m.h), w) / hw) +
                     std::abs(evaluate(differentiate(m.g), w) / gw);
    return (1.0 - r * r) * dphi * s;
  };
  return detail::polar_supremum(objective, cfg).value;
}

// Two invariance claims in one report:
//   affine:  beta(f^a conj(f)^b) <= (|a| + |b|) beta(f)          (margin vs cfg.tol)
//   Moebius: beta(f o phi_a) = beta(f)                           (relative, vs rel_tol)
// Both sides of the affine claim come from the same sweep; beta(f) is additionally
// refined at the transformed map's maximizer so grid bias cannot fake a violation.
inline VerificationReport invariance_checks(const NonVanishingMap& m, Complex a, Complex b,
                                            Complex mobius_a, const SamplingConfig& cfg,
                                            double rel_tol = 1e-3) {
  auto f_objective = [&](double r, double th) { return detail::bloch_objective(m, r, th); };
  const detail::PolarMax base = detail::polar_supremum(f_objective, cfg);
  const NonVanishingMap affine = affine_transform(m, a, b);
  const detail::PolarMax transformed = detail::polar_supremum(
      [&](double r, double th) { return detail::bloch_objective(affine, r, th); }, cfg);
  const double beta = std::max(base.value, f_objective(transformed.r, transformed.theta));
  const double beta_composed = bloch_seminorm_composed(m, mobius_a, cfg);

  MarginTracker tracker("bloch_invariance");
  tracker.observe((std::abs(a) + std::abs(b)) * beta - transformed.value, cfg.tol, a);
  const double rel_gap = std::abs(beta_composed - base.value) / std::max(base.value, 1e-300);
  tracker.observe(rel_tol - rel_gap, 0.0, mobius_a);
  return tracker.report();
}

}  // namespace logharm
