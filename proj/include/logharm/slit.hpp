// Slit geometry of the blend family: tip location and conformal inner radius.
#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "logharm/catalog.hpp"
#include "logharm/errors.hpp"
#include "logharm/map.hpp"

namespace logharm {

struct SlitMapAnalysis {
  double lambda = 0.0;
  Complex tip{0.0, 0.0};  // endpoint of the omitted radial slit
  double rho0 = 0.0;      // conformal inner radius of the image at 0
};

// The blend maps the disk onto the plane minus the slit (-inf, -exp(-2(1-lambda))];
// every non-real boundary point collapses to the tip.
inline Complex slit_tip(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw BadParameter("slit_tip: lambda in [0,1]");
  return Complex{-std::exp(-2.0 * (1.0 - lambda)), 0.0};
}

// Boundary-limit cross-check: the closed form along z = -(1-eps) for a short
// eps-sequence, polynomial-extrapolated to eps = 0 (exact through quadratics).
inline Complex slit_tip_numeric(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw BadParameter("slit_tip_numeric: lambda in [0,1]");
  const LogHarmonicMap m = from_catalog(slit_blend(lambda), 1);
  const std::array<double, 3> eps = {1e-2, 1e-3, 1e-4};
  std::array<Complex, 3> val;
  for (int i = 0; i < 3; ++i)
    val[i] = evaluate_f_exact(m, Complex{-(1.0 - eps[i]), 0.0});
  Complex acc{0.0, 0.0};
  for (int i = 0; i < 3; ++i) {  // Lagrange extrapolation of the nodes to eps = 0
    double basis = 1.0;
    for (int j = 0; j < 3; ++j)
      if (j != i) basis *= eps[j] / (eps[j] - eps[i]);
    acc += basis * val[i];
  }
  return acc;
}

// Conformal inner radius rho0 = |psi'(0)| of the image with respect to 0, where psi is
// a conformal map of the disk onto the image. The slit plane C \ (-inf, -c] has
// rho0 = 4c (rescaled one-slit normal form).
inline double conformal_inner_radius(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw BadParameter("conformal_inner_radius: lambda in [0,1]");
  return 4.0 * std::exp(-2.0 * (1.0 - lambda));
}

// Catalog-wide query. The half-plane image {Re w > -1/(2e)} and the two-slit image
// both have rho0 = 1/e (their conformal normal forms scale by 1/e); non-slit catalog
// images are out of scope.
inline double conformal_inner_radius(const CatalogEntry& e) {
  switch (e.family) {
    case MapFamily::SlitBlend: return conformal_inner_radius(e.param);
    case MapFamily::KoebeAlpha:
      if (e.param == 0.0) return conformal_inner_radius(0.0);
      throw BadParameter("conformal_inner_radius: only the order-0 extremal map is a slit map");
    case MapFamily::HalfPlane: return 1.0 / M_E;
    case MapFamily::TwoSlits: return 1.0 / M_E;
  }
  throw BadParameter("conformal_inner_radius: unknown catalog entry");
}

inline SlitMapAnalysis analyze_slit(double lambda) {
  return {lambda, slit_tip(lambda), conformal_inner_radius(lambda)};
}

}  // namespace logharm
