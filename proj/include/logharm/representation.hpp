// Representation of starlike log-harmonic maps by pairs of atomic measures:
// log h and log g are weighted sums of a two-pole kernel over atom pairs.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>

#include "logharm/catalog.hpp"
#include "logharm/complex_series.hpp"
#include "logharm/errors.hpp"
#include "logharm/map.hpp"
#include "logharm/measure.hpp"

namespace logharm {

// Atoms closer than this are treated as coincident (the generic kernel's prefactor
// ((1-2a)eta + xi)/(eta - xi) is numerically unstable near eta = xi).
inline constexpr double kConfluentTol = 1e-8;

// Kernel whose exp builds the analytic factor h. For eta != xi:
//   ((1-2a)eta + xi)/(eta - xi) * log((1 - xi z)/(1 - eta z)) - log(1 - eta z),
// with the confluent limit 2(1-a) eta z/(1 - eta z) - log(1 - eta z).
inline Complex kernel_h(Complex z, Complex eta, Complex xi, double alpha) {
  const Complex one{1.0, 0.0};
  if (std::abs(eta - xi) < kConfluentTol)
    return 2.0 * (1.0 - alpha) * eta * z / (one - eta * z) - std::log(one - eta * z);
  const Complex c = ((1.0 - 2.0 * alpha) * eta + xi) / (eta - xi);
  return c * (std::log(one - xi * z) - std::log(one - eta * z)) - std::log(one - eta * z);
}

// Kernel for the co-analytic factor g; same prefactor, opposite pole behavior:
//   ... + (1-2a) log(1 - eta z), confluent limit 2(1-a) eta z/(1-eta z) + (1-2a) log(1-eta z).
inline Complex kernel_g(Complex z, Complex eta, Complex xi, double alpha) {
  const Complex one{1.0, 0.0};
  if (std::abs(eta - xi) < kConfluentTol)
    return 2.0 * (1.0 - alpha) * eta * z / (one - eta * z) +
           (1.0 - 2.0 * alpha) * std::log(one - eta * z);
  const Complex c = ((1.0 - 2.0 * alpha) * eta + xi) / (eta - xi);
  return c * (std::log(one - xi * z) - std::log(one - eta * z)) +
         (1.0 - 2.0 * alpha) * std::log(one - eta * z);
}

// z d/dz of the kernels, used for exact dilatation work near the boundary.
inline Complex kernel_h_zderiv(Complex z, Complex eta, Complex xi, double alpha) {
  const Complex one{1.0, 0.0};
  if (std::abs(eta - xi) < kConfluentTol) {
    const Complex w = one - eta * z;
    return z * (2.0 * (1.0 - alpha) * eta / (w * w) + eta / w);
  }
  const Complex c = ((1.0 - 2.0 * alpha) * eta + xi) / (eta - xi);
  return z * (c * (eta / (one - eta * z) - xi / (one - xi * z)) + eta / (one - eta * z));
}

inline Complex kernel_g_zderiv(Complex z, Complex eta, Complex xi, double alpha) {
  const Complex one{1.0, 0.0};
  if (std::abs(eta - xi) < kConfluentTol) {
    const Complex w = one - eta * z;
    return z * (2.0 * (1.0 - alpha) * eta / (w * w) - (1.0 - 2.0 * alpha) * eta / w);
  }
  const Complex c = ((1.0 - 2.0 * alpha) * eta + xi) / (eta - xi);
  return z * (c * (eta / (one - eta * z) - xi / (one - xi * z)) -
              (1.0 - 2.0 * alpha) * eta / (one - eta * z));
}

namespace detail {

// Per-atom-pair coefficient of z^n in the kernels, in the factored form
//   n * K_n = eta^n (or (2a-1) eta^n) + ((1-2a)eta + xi) * sum_{k<n} eta^(n-1-k) xi^k,
// which is singularity-free at eta = xi. `power_sum` must be S_n for the same n.
inline Complex kernel_h_coeff(Complex eta_n, Complex prefactor, Complex power_sum, int n) {
  return (eta_n + prefactor * power_sum) / double(n);
}
inline Complex kernel_g_coeff(Complex eta_n, Complex prefactor, Complex power_sum, int n,
                              double alpha) {
  return ((2.0 * alpha - 1.0) * eta_n + prefactor * power_sum) / double(n);
}

template <typename PerPair>
inline void for_each_pair(const DiscreteMeasure& delta, const DiscreteMeasure& kappa,
                          PerPair&& fn) {
  for (std::size_t i = 0; i < delta.size(); ++i)
    for (std::size_t j = 0; j < kappa.size(); ++j)
      fn(delta.weights[i] * kappa.weights[j], delta.atoms[i], kappa.atoms[j]);
}

}  // namespace detail

// Exponent coefficient a_n of h = exp(sum a_n z^n) for the measure pair (delta, kappa).
inline Complex coefficient_a(const DiscreteMeasure& delta, const DiscreteMeasure& kappa,
                             double alpha, int n) {
  if (n < 1) throw BadParameter("coefficient_a: need n >= 1");
  Complex acc{0.0, 0.0};
  detail::for_each_pair(delta, kappa, [&](double w, Complex eta, Complex xi) {
    const Complex pre = (1.0 - 2.0 * alpha) * eta + xi;
    Complex eta_n{1.0, 0.0}, xi_k{1.0, 0.0}, power_sum{0.0, 0.0};
    for (int k = 0; k < n; ++k) {  // S_n = sum eta^(n-1-k) xi^k, Horner in eta
      power_sum = power_sum * eta + xi_k;
      xi_k *= xi;
      eta_n *= eta;
    }
    acc += w * detail::kernel_h_coeff(eta_n, pre, power_sum, n);
  });
  return acc;
}

// Exponent coefficient b_n of g, same structure with the (2a-1) eta^n head.
inline Complex coefficient_b(const DiscreteMeasure& delta, const DiscreteMeasure& kappa,
                             double alpha, int n) {
  if (n < 1) throw BadParameter("coefficient_b: need n >= 1");
  Complex acc{0.0, 0.0};
  detail::for_each_pair(delta, kappa, [&](double w, Complex eta, Complex xi) {
    const Complex pre = (1.0 - 2.0 * alpha) * eta + xi;
    Complex eta_n{1.0, 0.0}, xi_k{1.0, 0.0}, power_sum{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
      power_sum = power_sum * eta + xi_k;
      xi_k *= xi;
      eta_n *= eta;
    }
    acc += w * detail::kernel_g_coeff(eta_n, pre, power_sum, n, alpha);
  });
  return acc;
}

// Builds the starlike log-harmonic map of order alpha represented by (delta, kappa):
// series from the factored kernel coefficients, exact evaluators from pointwise
// kernel sums. The result is sense-preserving and starlike of order alpha.
inline LogHarmonicMap generate(const DiscreteMeasure& delta, const DiscreteMeasure& kappa,
                               double alpha, int order = kDefaultOrder) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw BadParameter("generate: need alpha in [0,1]");
  if (order < 1) throw BadParameter("generate: need order >= 1");

  ComplexSeries log_h(order), log_g(order);
  detail::for_each_pair(delta, kappa, [&](double w, Complex eta, Complex xi) {
    const Complex pre = (1.0 - 2.0 * alpha) * eta + xi;
    Complex eta_n = eta;          // eta^n
    Complex xi_n{1.0, 0.0};       // xi^(n-1)
    Complex power_sum{0.0, 0.0};  // S_n, via S_(n+1) = eta S_n + xi^n
    for (int n = 1; n <= order; ++n) {
      power_sum = power_sum * eta + xi_n;
      log_h[n] += w * detail::kernel_h_coeff(eta_n, pre, power_sum, n);
      log_g[n] += w * detail::kernel_g_coeff(eta_n, pre, power_sum, n, alpha);
      eta_n *= eta;
      xi_n *= xi;
    }
  });

  LogHarmonicMap m;
  m.h = exp_series(log_h);
  m.g = exp_series(log_g);
  m.alpha = alpha;
  m.label = "generated(alpha=" + std::to_string(alpha) + ", atoms=" +
            std::to_string(delta.size()) + "x" + std::to_string(kappa.size()) + ")";

  ExactForm ef;
  ef.log_h = [delta, kappa, alpha](Complex z) {
    Complex acc{0.0, 0.0};
    detail::for_each_pair(delta, kappa, [&](double w, Complex eta, Complex xi) {
      acc += w * kernel_h(z, eta, xi, alpha);
    });
    return acc;
  };
  ef.log_g = [delta, kappa, alpha](Complex z) {
    Complex acc{0.0, 0.0};
    detail::for_each_pair(delta, kappa, [&](double w, Complex eta, Complex xi) {
      acc += w * kernel_g(z, eta, xi, alpha);
    });
    return acc;
  };
  ef.zdlog_h = [delta, kappa, alpha](Complex z) {
    Complex acc{0.0, 0.0};
    detail::for_each_pair(delta, kappa, [&](double w, Complex eta, Complex xi) {
      acc += w * kernel_h_zderiv(z, eta, xi, alpha);
    });
    return acc;
  };
  ef.zdlog_g = [delta, kappa, alpha](Complex z) {
    Complex acc{0.0, 0.0};
    detail::for_each_pair(delta, kappa, [&](double w, Complex eta, Complex xi) {
      acc += w * kernel_g_zderiv(z, eta, xi, alpha);
    });
    return acc;
  };
  m.exact = std::move(ef);
  return m;
}

}  // namespace logharm
