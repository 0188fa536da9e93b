// Atomic probability measures on the unit circle and their random sampling.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "logharm/complex_series.hpp"
#include "logharm/errors.hpp"

namespace logharm {

inline constexpr double kMeasureTol = 1e-14;

// Finitely many unit-modulus atoms with positive weights summing to 1.
struct DiscreteMeasure {
  std::vector<Complex> atoms;
  std::vector<double> weights;

  DiscreteMeasure(std::vector<Complex> atoms_in, std::vector<double> weights_in)
      : atoms(std::move(atoms_in)), weights(std::move(weights_in)) {
    if (atoms.empty() || atoms.size() != weights.size())
      throw BadParameter("measure: need equally many atoms and weights, at least one");
    double total = 0.0;
    for (double w : weights) {
      if (!(w > 0.0)) throw BadParameter("measure: weights must be positive");
      total += w;
    }
    if (std::abs(total - 1.0) > kMeasureTol)
      throw BadParameter("measure: weights must sum to 1");
    for (const Complex& a : atoms)
      if (std::abs(std::abs(a) - 1.0) > kMeasureTol)
        throw BadParameter("measure: atoms must lie on the unit circle");
  }

  static DiscreteMeasure dirac(Complex eta) { return DiscreteMeasure({eta}, {1.0}); }

  std::size_t size() const { return atoms.size(); }
};

// Uniform random atoms, flat-Dirichlet weights (normalized unit exponentials).
inline DiscreteMeasure random_measure(std::mt19937_64& rng, int max_atoms = 5) {
  if (max_atoms < 1) throw BadParameter("random_measure: need max_atoms >= 1");
  std::uniform_int_distribution<int> count(1, max_atoms);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::exponential_distribution<double> unit_exp(1.0);
  const int n = count(rng);
  std::vector<Complex> atoms;
  std::vector<double> weights;
  atoms.reserve(static_cast<std::size_t>(n));
  weights.reserve(static_cast<std::size_t>(n));
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    atoms.push_back(std::polar(1.0, angle(rng)));
    double w = 0.0;
    while (!(w > 0.0)) w = unit_exp(rng);
    weights.push_back(w);
    total += w;
  }
  for (double& w : weights) w /= total;
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

}  // namespace logharm
