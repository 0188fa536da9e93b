// Majorant radii: defining-equation residuals, closed-form limits, frozen oracle
// values, monotonicity, and the majorant inequality itself.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "logharm/bohr.hpp"
#include "logharm/bounds.hpp"
#include "logharm/catalog.hpp"
#include "logharm/measure.hpp"
#include "logharm/representation.hpp"

using logharm::Factor;
using logharm::LogHarmonicMap;
using logharm::RadiusSolution;

namespace {
const Factor kFactors[] = {Factor::H, Factor::G, Factor::F};
}

TEST_CASE("solver residuals vanish across the parameter range") {
  for (double a = 0.0; a <= 1.0; a += 0.05)
    for (Factor which : kFactors) {
      const RadiusSolution sol = logharm::solve_bohr_radius(a, which);
      CHECK(sol.radius > 0.0);
      CHECK(sol.radius < 1.0);
      CHECK(std::abs(sol.residual) <= 1e-12);
    }
}

TEST_CASE("conformal limit: closed-form radii at order one") {
  CHECK(std::abs(logharm::solve_bohr_radius(1.0, Factor::H).radius - 1.0 / 3.0) <= 1e-12);
  CHECK(std::abs(logharm::solve_bohr_radius(1.0, Factor::G).radius - 1.0 / 3.0) <= 1e-12);
  CHECK(std::abs(logharm::solve_bohr_radius(1.0, Factor::F).radius -
                 (3.0 - 2.0 * std::sqrt(2.0))) <= 1e-12);
}

TEST_CASE("radii match the frozen high-precision oracle") {
  // Independent 50-digit bisection, rounded to double once and frozen here.
  struct Row {
    double alpha, r_h, r_g, r_f;
  };
  const Row rows[] = {
      {0.00, 0.12221587719931192751, 0.36590234120737285994, 0.090776278226867591759},
      {0.25, 0.15271050592224816729, 0.35957908030251311857, 0.10498555501085163225},
      {0.50, 0.19279002056750453267, 0.35217506066011667703, 0.12221587719931192751},
      {0.75, 0.24820284769081322860, 0.34349248107766335731, 0.14367915132433449594},
  };
  for (const Row& row : rows) {
    CHECK(std::abs(logharm::solve_bohr_radius(row.alpha, Factor::H).radius - row.r_h) <= 5e-15);
    CHECK(std::abs(logharm::solve_bohr_radius(row.alpha, Factor::G).radius - row.r_g) <= 5e-15);
    CHECK(std::abs(logharm::solve_bohr_radius(row.alpha, Factor::F).radius - row.r_f) <= 5e-15);
  }
}

TEST_CASE("radius trends in the starlikeness order") {
  double prev_h = 0.0, prev_g = 1.0, prev_f = 0.0;
  for (double a = 0.0; a <= 1.0; a += 0.1) {
    const double rh = logharm::solve_bohr_radius(a, Factor::H).radius;
    const double rg = logharm::solve_bohr_radius(a, Factor::G).radius;
    const double rf = logharm::solve_bohr_radius(a, Factor::F).radius;
    CHECK(rh > prev_h);  // analytic-factor radius grows with the order
    CHECK(rg < prev_g);  // co-factor radius shrinks
    CHECK(rf > prev_f);  // full-map radius grows
    CHECK(rf < std::min(rh, rg));
    prev_h = rh;
    prev_g = rg;
    prev_f = rf;
  }
}

TEST_CASE("majorant inequality holds to the radius, with equality for the extremal map") {
  for (double a : {0.0, 0.25, 0.5, 0.75}) {
    const LogHarmonicMap m = from_catalog(logharm::koebe_alpha(a));
    for (Factor which : kFactors) {
      const auto rep = verify_bohr(m, a, which, 33, 1e-6);
      CHECK(rep.passed);
      // The extremal majorant touches the constant at the radius itself.
      CHECK(std::abs(rep.worst_margin) <= 1e-6);
    }
  }

  std::mt19937_64 rng(3311);
  for (double a : {0.0, 0.5})
    for (int trial = 0; trial < 5; ++trial) {
      const auto delta = logharm::random_measure(rng);
      const auto kappa = logharm::random_measure(rng);
      const LogHarmonicMap m = generate(delta, kappa, a, 64);
      for (Factor which : kFactors) CHECK(verify_bohr(m, a, which).passed);
    }
}

TEST_CASE("majorant accumulates strictly below the radius") {
  const double a = 0.25;
  const LogHarmonicMap m = from_catalog(logharm::koebe_alpha(a));
  const double constant = std::exp((1.0 - 2.0 * a) * std::log(2.0) - (1.0 - a));
  const double r_g = logharm::solve_bohr_radius(a, Factor::G).radius;
  CHECK(logharm::bohr_sum(m, 0.5 * r_g, Factor::G) < constant - 0.01);
  CHECK(logharm::bohr_sum(m, 0.0, Factor::G) == 0.0);
}

TEST_CASE("certified tail refuses radii the truncation cannot cover") {
  const LogHarmonicMap m = from_catalog(logharm::koebe_alpha(0.0), 64);
  CHECK_THROWS_AS(logharm::bohr_sum(m, 0.99, Factor::F), logharm::TailTooLarge);
}

TEST_CASE("solver validates its arguments") {
  CHECK_THROWS_AS(logharm::solve_bohr_radius(-0.1, Factor::H), logharm::BadParameter);
  CHECK_THROWS_AS(logharm::solve_bohr_radius(1.5, Factor::F), logharm::BadParameter);
  CHECK_THROWS_AS(logharm::bohr_sum(from_catalog(logharm::koebe_alpha(0.0)), 1.0, Factor::H),
                  logharm::BadParameter);
}
