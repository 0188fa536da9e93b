// Slit geometry of the blend family: tip location, boundary collapse, and the
// conformal inner radius of the image domains.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "logharm/catalog.hpp"
#include "logharm/map.hpp"
#include "logharm/slit.hpp"

using logharm::Complex;
using logharm::LogHarmonicMap;

TEST_CASE("tip closed form and its boundary-limit cross-check") {
  for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const Complex tip = logharm::slit_tip(lambda);
    CHECK(tip.real() == -std::exp(-2.0 * (1.0 - lambda)));
    CHECK(tip.imag() == 0.0);
    CHECK(std::abs(logharm::slit_tip_numeric(lambda) - tip) <= 1e-6);
  }
  CHECK(std::abs(logharm::slit_tip(1.0) - Complex{-1.0, 0.0}) == 0.0);
}

TEST_CASE("inner radius endpoints are exact and interpolate monotonically") {
  CHECK(logharm::conformal_inner_radius(0.0) == 4.0 * std::exp(-2.0));
  CHECK(logharm::conformal_inner_radius(1.0) == 4.0);
  double prev = 0.0;
  for (double lambda = 0.0; lambda <= 1.0; lambda += 0.1) {
    const double rho = logharm::conformal_inner_radius(lambda);
    CHECK(rho > prev);
    CHECK(rho == 4.0 * std::abs(logharm::slit_tip(lambda).real()));
    prev = rho;
  }
}

TEST_CASE("catalog-wide inner radii") {
  CHECK(logharm::conformal_inner_radius(logharm::half_plane_map()) == 1.0 / M_E);
  CHECK(logharm::conformal_inner_radius(logharm::two_slits_map()) == 1.0 / M_E);
  CHECK(logharm::conformal_inner_radius(logharm::koebe_alpha(0.0)) ==
        logharm::conformal_inner_radius(0.0));
  CHECK_THROWS_AS(logharm::conformal_inner_radius(logharm::koebe_alpha(0.5)),
                  logharm::BadParameter);
}

TEST_CASE("the entire non-real boundary collapses onto the tip") {
  for (double lambda : {0.0, 0.5, 1.0}) {
    const LogHarmonicMap m = from_catalog(logharm::slit_blend(lambda), 4);
    const Complex tip = logharm::slit_tip(lambda);
    for (double theta : {0.3, 1.0, 2.5, M_PI, 4.0, 5.9})
      CHECK(std::abs(evaluate_f_exact(m, std::polar(1.0, theta)) - tip) <= 1e-12);
  }
}

TEST_CASE("the image of the negative radius approaches the tip from inside the slit gap") {
  for (double lambda : {0.0, 0.5, 1.0}) {
    const LogHarmonicMap m = from_catalog(logharm::slit_blend(lambda), 4);
    const Complex tip = logharm::slit_tip(lambda);
    const Complex v = evaluate_f_exact(m, Complex{-0.999, 0.0});
    CHECK(std::abs(v.imag()) <= 1e-12);
    CHECK(v.real() < 0.0);
    CHECK(v.real() > tip.real());  // still short of the omitted ray
    CHECK(std::abs(v - tip) <= 5e-3);
  }
}

TEST_CASE("analysis bundle is self-consistent") {
  const auto a = logharm::analyze_slit(0.35);
  CHECK(a.lambda == 0.35);
  CHECK(a.tip == logharm::slit_tip(0.35));
  CHECK(a.rho0 == logharm::conformal_inner_radius(0.35));
  CHECK_THROWS_AS(logharm::slit_tip(-0.1), logharm::BadParameter);
  CHECK_THROWS_AS(logharm::slit_tip_numeric(1.5), logharm::BadParameter);
  CHECK_THROWS_AS(logharm::conformal_inner_radius(2.0), logharm::BadParameter);
}
