// Named reference maps with closed-form factor evaluators.
#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "logharm/complex_series.hpp"
#include "logharm/errors.hpp"
#include "logharm/map.hpp"

namespace logharm {

// KoebeAlpha(alpha): the extremal starlike map of order alpha,
//     f(z) = z/(1-z) (1-zbar)^(1-2a) exp(4(1-a) Re(z/(1-z))),  dilatation mu(z) = z.
// HalfPlane: image is the half-plane Re w > -1/(2e); equals KoebeAlpha(1/2).
// TwoSlits: image is the plane minus two symmetric radial slits |Re w| >= 1/(2e), Im w = 0.
// SlitBlend(lambda): f1^lambda f2^(1-lambda) for the unit-dilatation slit pair,
//     z (1-zbar)/(1-z) exp(4(1-lambda) Re(z/(1-z))); lambda=1 gives f1, lambda=0 gives f2.
enum class MapFamily { KoebeAlpha, HalfPlane, TwoSlits, SlitBlend };

struct CatalogEntry {
  MapFamily family = MapFamily::KoebeAlpha;
  double param = 0.0;  // alpha for KoebeAlpha, lambda for SlitBlend, unused otherwise
};

inline CatalogEntry koebe_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw BadParameter("koebe_alpha: need alpha in [0,1]");
  return {MapFamily::KoebeAlpha, alpha};
}
inline CatalogEntry half_plane_map() { return {MapFamily::HalfPlane, 0.0}; }
inline CatalogEntry two_slits_map() { return {MapFamily::TwoSlits, 0.0}; }
inline CatalogEntry slit_blend(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw BadParameter("slit_blend: need lambda in [0,1]");
  return {MapFamily::SlitBlend, lambda};
}

inline std::string catalog_label(const CatalogEntry& e) {
  switch (e.family) {
    case MapFamily::KoebeAlpha: return "koebe_alpha(" + std::to_string(e.param) + ")";
    case MapFamily::HalfPlane: return "LR";
    case MapFamily::TwoSlits: return "LS";
    case MapFamily::SlitBlend: return "F_lambda(" + std::to_string(e.param) + ")";
  }
  return "?";
}

namespace detail {

// Both one-slit families share the factor shape h = exp(c z/(1-z))/(1-z),
// g = exp(c z/(1-z)) (1-z)^p with (c, p) = (2(1-a), 1-2a) resp. (2(1-lambda), 1).
struct OneSlitParams {
  double c;  // coefficient of z/(1-z) in log h and log g
  double p;  // power of (1-z) in g
};

inline OneSlitParams one_slit_params(const CatalogEntry& e) {
  switch (e.family) {
    case MapFamily::KoebeAlpha: return {2.0 * (1.0 - e.param), 1.0 - 2.0 * e.param};
    case MapFamily::HalfPlane: return {1.0, 0.0};
    case MapFamily::SlitBlend: return {2.0 * (1.0 - e.param), 1.0};
    default: throw BadParameter("one_slit_params: not a one-slit family");
  }
}

}  // namespace detail

// Exponent coefficients a_n (log h) and b_n (log g) of the catalog map.
inline Complex catalog_log_h_coeff(const CatalogEntry& e, int n) {
  if (n < 1) throw BadParameter("catalog_log_h_coeff: need n >= 1");
  if (e.family == MapFamily::TwoSlits)
    return (n % 2 == 0) ? Complex{1.0 + 1.0 / double(n), 0.0} : Complex{0.0, 0.0};
  const auto [c, p] = detail::one_slit_params(e);
  return Complex{c + 1.0 / double(n), 0.0};
}

inline Complex catalog_log_g_coeff(const CatalogEntry& e, int n) {
  if (n < 1) throw BadParameter("catalog_log_g_coeff: need n >= 1");
  if (e.family == MapFamily::TwoSlits)
    return (n % 2 == 0) ? Complex{1.0 - 1.0 / double(n), 0.0} : Complex{0.0, 0.0};
  const auto [c, p] = detail::one_slit_params(e);
  return Complex{c - p / double(n), 0.0};
}

// Starlikeness order of the associated analytic map z h/g (hence of f itself).
inline double catalog_order(const CatalogEntry& e) {
  switch (e.family) {
    case MapFamily::KoebeAlpha: return e.param;
    case MapFamily::HalfPlane: return 0.5;
    default: return 0.0;
  }
}

inline LogHarmonicMap from_catalog(const CatalogEntry& e, int order = kDefaultOrder) {
  if (order < 1) throw BadParameter("from_catalog: need order >= 1");
  LogHarmonicMap m;
  ComplexSeries log_h(order), log_g(order);
  for (int n = 1; n <= order; ++n) {
    log_h[n] = catalog_log_h_coeff(e, n);
    log_g[n] = catalog_log_g_coeff(e, n);
  }
  m.h = exp_series(log_h);
  m.g = exp_series(log_g);
  m.alpha = catalog_order(e);
  m.label = catalog_label(e);

  ExactForm ef;
  if (e.family == MapFamily::TwoSlits) {
    // log h = z^2/(1-z^2) - (1/2) log(1-z^2), log g = z^2/(1-z^2) + (1/2) log(1-z^2)
    ef.log_h = [](Complex z) {
      const Complex w = Complex{1.0, 0.0} - z * z;
      return z * z / w - 0.5 * std::log(w);
    };
    ef.log_g = [](Complex z) {
      const Complex w = Complex{1.0, 0.0} - z * z;
      return z * z / w + 0.5 * std::log(w);
    };
    ef.zdlog_h = [](Complex z) {
      const Complex w = Complex{1.0, 0.0} - z * z;
      return 2.0 * z * z / (w * w) + z * z / w;
    };
    ef.zdlog_g = [](Complex z) {
      const Complex w = Complex{1.0, 0.0} - z * z;
      return 2.0 * z * z / (w * w) - z * z / w;
    };
  } else {
    const auto [c, p] = detail::one_slit_params(e);
    ef.log_h = [c](Complex z) {
      const Complex w = Complex{1.0, 0.0} - z;
      return c * z / w - std::log(w);
    };
    ef.log_g = [c, p](Complex z) {
      const Complex w = Complex{1.0, 0.0} - z;
      return c * z / w + p * std::log(w);
    };
    ef.zdlog_h = [c](Complex z) {
      const Complex w = Complex{1.0, 0.0} - z;
      return z * (c / (w * w) + 1.0 / w);
    };
    ef.zdlog_g = [c, p](Complex z) {
      const Complex w = Complex{1.0, 0.0} - z;
      return z * (c / (w * w) - p / w);
    };
  }
  m.exact = std::move(ef);
  return m;
}

}  // namespace logharm
