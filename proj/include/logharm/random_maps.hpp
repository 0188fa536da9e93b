// Seeded random test subjects: non-vanishing maps with controlled factor decay
// (so series evaluation stays trustworthy on the whole closed disk) and disk
// automorphism series. Shared by the CLI verify suites and the test binaries.
#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "logharm/complex_series.hpp"
#include "logharm/schwarzian.hpp"

namespace logharm {

// log h has a dominant linear coefficient (|c_1| >= 0.5) and geometrically decaying
// tail with sum_{n>=2} n |c_n| < |c_1|, which keeps h' zero-free on the closed disk.
inline ComplexSeries random_log_factor(std::mt19937_64& rng, int order = kDefaultOrder) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> lead(0.5, 1.0);
  std::uniform_real_distribution<double> scale(0.2, 0.9);
  ComplexSeries s(order);
  s[1] = std::polar(lead(rng), angle(rng));
  const double amp = scale(rng);
  double decay = 0.3;
  for (int n = 2; n <= order; ++n) {
    decay *= 0.3;
    s[n] = std::polar(amp * decay, angle(rng));
  }
  return s;
}

// Analytic dilatation c1 z + c2 z^2 with |c1| + |c2| <= 0.9 (so |mu| < 1 on the disk).
inline ComplexSeries random_dilatation(std::mt19937_64& rng, int order = kDefaultOrder) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> r1(0.1, 0.5);
  std::uniform_real_distribution<double> r2(0.0, 0.4);
  ComplexSeries mu(order);
  mu[1] = std::polar(r1(rng), angle(rng));
  mu[2] = std::polar(r2(rng), angle(rng));
  return mu;
}

inline NonVanishingMap random_nonvanishing_map(std::mt19937_64& rng,
                                               int order = kDefaultOrder) {
  const ComplexSeries h = exp_series(random_log_factor(rng, order));
  return from_dilatation(h, random_dilatation(rng, order), "random");
}

// phi_a(z) = (z + a)/(1 + conj(a) z) = a + (1-|a|^2) sum_{n>=1} (-conj(a))^(n-1) z^n.
inline ComplexSeries mobius_series(Complex a, int order = kDefaultOrder) {
  if (!(std::abs(a) < 1.0)) throw BadParameter("mobius_series: need |a| < 1");
  ComplexSeries phi(order);
  phi[0] = a;
  Complex pw{1.0, 0.0};
  const double head = 1.0 - std::norm(a);
  for (int n = 1; n <= order; ++n) {
    phi[n] = head * pw;
    pw *= -std::conj(a);
  }
  return phi;
}

}  // namespace logharm
