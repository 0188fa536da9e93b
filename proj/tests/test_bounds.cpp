// Distortion envelopes: normalization, sharpness witnesses, grid verification,
// boundary distances and coefficient bounds.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "logharm/bounds.hpp"
#include "logharm/catalog.hpp"
#include "logharm/map.hpp"
#include "logharm/measure.hpp"
#include "logharm/representation.hpp"
#include "logharm/verification.hpp"

using logharm::Complex;
using logharm::DiscreteMeasure;
using logharm::Factor;
using logharm::LogHarmonicMap;
using logharm::random_measure;
using logharm::SamplingConfig;

namespace {
const double kAlphas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
const double kRadii[] = {0.1, 0.5, 0.9, 0.99};
}  // namespace

TEST_CASE("all six envelopes are trivial at the origin") {
  for (double a : kAlphas) {
    CHECK(logharm::distortion_log_lower_h(0.0, a) == 0.0);
    CHECK(logharm::distortion_log_upper_h(0.0, a) == 0.0);
    CHECK(logharm::distortion_log_lower_g(0.0, a) == 0.0);
    CHECK(logharm::distortion_log_upper_g(0.0, a) == 0.0);
    CHECK(logharm::distortion_log_upper_f(0.1, a) - std::log(0.1) >= 0.0);
    CHECK(logharm::distortion_log_lower_f(0.1, a) - std::log(0.1) <= 0.0);
  }
}

TEST_CASE("envelopes are monotone in the radius") {
  for (double a : kAlphas)
    for (double r = 0.05; r < 0.9; r += 0.05) {
      const double r2 = r + 0.05;
      CHECK(logharm::distortion_log_upper_h(r2, a) > logharm::distortion_log_upper_h(r, a));
      CHECK(logharm::distortion_log_upper_g(r2, a) >= logharm::distortion_log_upper_g(r, a));
      CHECK(logharm::distortion_log_upper_f(r2, a) > logharm::distortion_log_upper_f(r, a));
      CHECK(logharm::distortion_log_lower_h(r2, a) < logharm::distortion_log_lower_h(r, a));
      CHECK(logharm::distortion_log_lower_g(r2, a) < logharm::distortion_log_lower_g(r, a));
      CHECK(logharm::distortion_log_lower_f(r2, a) > logharm::distortion_log_lower_f(r, a));
    }
}

TEST_CASE("extremal map attains five envelopes on the real axis") {
  for (double a : kAlphas) {
    const LogHarmonicMap m = from_catalog(logharm::koebe_alpha(a), 8);
    for (double r : kRadii) {
      const Complex plus{r, 0.0}, minus{-r, 0.0};
      CHECK(std::abs(log_modulus_h(m, plus) - logharm::distortion_log_upper_h(r, a)) <= 1e-12);
      CHECK(std::abs(log_modulus_g(m, plus) - logharm::distortion_log_upper_g(r, a)) <= 1e-12);
      CHECK(std::abs(log_modulus_f(m, plus) - logharm::distortion_log_upper_f(r, a)) <= 1e-12);
      CHECK(std::abs(log_modulus_h(m, minus) - logharm::distortion_log_lower_h(r, a)) <= 1e-12);
      CHECK(std::abs(log_modulus_f(m, minus) - logharm::distortion_log_lower_f(r, a)) <= 1e-12);
    }
  }
}

TEST_CASE("anti-aligned Dirac pair attains the lower envelope of the co-factor") {
  const DiscreteMeasure plus = DiscreteMeasure::dirac(Complex{1.0, 0.0});
  const DiscreteMeasure minus = DiscreteMeasure::dirac(Complex{-1.0, 0.0});
  for (double a : kAlphas) {
    const LogHarmonicMap m = generate(plus, minus, a, 8);
    for (double r : kRadii)
      CHECK(std::abs(log_modulus_g(m, Complex{r, 0.0}) -
                     logharm::distortion_log_lower_g(r, a)) <= 1e-12);
  }
}

TEST_CASE("grid verification passes for extremal and random represented maps") {
  const SamplingConfig cfg = SamplingConfig::polar(24, 0.99, 96);
  for (double a : kAlphas) {
    const LogHarmonicMap m = from_catalog(logharm::koebe_alpha(a));
    CHECK(verify_distortion_f(m, a, cfg).passed);
    CHECK(verify_distortion_hg(m, a, cfg).passed);
  }
  std::mt19937_64 rng(2207);
  for (int trial = 0; trial < 5; ++trial) {
    const DiscreteMeasure delta = random_measure(rng);
    const DiscreteMeasure kappa = random_measure(rng);
    const LogHarmonicMap m = generate(delta, kappa, 0.3, 32);
    CHECK(verify_distortion_f(m, 0.3, cfg).passed);
    CHECK(verify_distortion_hg(m, 0.3, cfg).passed);
  }
}

TEST_CASE("grid verification flags a map that leaves the envelope") {
  // exp(3z) decays like exp(-3r) along the negative axis, well below the h floor.
  LogHarmonicMap fake;
  logharm::ComplexSeries log_h(64);
  log_h[1] = Complex{3.0, 0.0};
  fake.h = exp_series(log_h);
  fake.g = exp_series(logharm::ComplexSeries(64));
  fake.alpha = 0.3;
  fake.label = "off-family";
  const SamplingConfig cfg = SamplingConfig::polar(16, 0.9, 32);
  CHECK_FALSE(verify_distortion_hg(fake, 0.3, cfg).passed);
}

TEST_CASE("boundary distances of the closed-form maps") {
  const LogHarmonicMap k0 = from_catalog(logharm::koebe_alpha(0.0), 8);
  CHECK(std::abs(boundary_distance(k0, Factor::F) - std::exp(-2.0)) <= 1e-4);

  const LogHarmonicMap lr = from_catalog(logharm::koebe_alpha(0.5), 8);
  CHECK(std::abs(boundary_distance(lr, Factor::H) - 0.5 * std::exp(-0.5)) <= 1e-4);

  const LogHarmonicMap id = logharm::identity_map(8);
  CHECK(boundary_distance(id, Factor::H) == 1.0);
  CHECK(boundary_distance(id, Factor::G) == 1.0);
  CHECK(boundary_distance(id, Factor::F) == 1.0);
}

TEST_CASE("series-only boundary probes demand a trustworthy tail") {
  LogHarmonicMap m = from_catalog(logharm::koebe_alpha(0.25), 32);
  m.exact.reset();  // strip the closed form: only an order-32 series remains
  CHECK_THROWS_AS(boundary_distance(m, Factor::H), logharm::TruncationUnreliable);
  CHECK_THROWS_AS(evaluate_f(m, Complex{0.97, 0.0}), logharm::TruncationUnreliable);
}

TEST_CASE("coefficient bounds: aligned Dirac pairs sit on the bound, mixtures inside") {
  for (double a : kAlphas)
    for (double theta : {0.0, 2.1}) {
      const DiscreteMeasure d = DiscreteMeasure::dirac(std::polar(1.0, theta));
      const auto rep = verify_coefficient_bounds(d, d, a, 30);
      CHECK(rep.passed);
      CHECK(std::abs(rep.worst_margin) <= 1e-12);
    }

  const DiscreteMeasure mix({Complex{1.0, 0.0}, Complex{-1.0, 0.0}}, {0.5, 0.5});
  const auto rep = verify_coefficient_bounds(mix, mix, 0.25, 10);
  CHECK(rep.passed);
  CHECK(rep.worst_margin > 0.01);

  // With a Dirac second measure the n = 1 co-analytic coefficient equals the
  // measure mean, which has modulus one, so that bound stays pinned even when
  // the first measure spreads out.
  const DiscreteMeasure d = DiscreteMeasure::dirac(Complex{1.0, 0.0});
  const auto pinned = verify_coefficient_bounds(mix, d, 0.25, 10);
  CHECK(pinned.passed);
  CHECK(std::abs(pinned.worst_margin) <= 1e-12);
}

TEST_CASE("random represented maps respect the coefficient bounds with slack tracking") {
  std::mt19937_64 rng(2208);
  for (double a : {0.0, 0.5, 1.0})
    for (int trial = 0; trial < 10; ++trial) {
      const DiscreteMeasure delta = random_measure(rng);
      const DiscreteMeasure kappa = random_measure(rng);
      CHECK(verify_coefficient_bounds(delta, kappa, a, 25).passed);
    }
}
