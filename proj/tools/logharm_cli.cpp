// Command-line front end: rendering, verification suites, tables, radii sweeps.
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logharm/logharm.hpp"
#include "logharm/random_maps.hpp"

namespace lh = logharm;
using lh::Complex;

namespace {

// "start:end:step", endpoint snapped so sweeps like 0:1:0.05 land on 1 exactly.
std::vector<double> parse_sweep(const std::string& spec) {
  double start = 0, end = 0, step = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &end, &step) != 3 || step <= 0 ||
      end < start)
    throw lh::BadParameter("sweep must be start:end:step with step > 0, end >= start");
  std::vector<double> out;
  const long n = std::lround((end - start) / step);
  for (long k = 0; k <= n; ++k) {
    double v = start + step * double(k);
    if (std::abs(v - end) < step * 1e-9) v = end;
    if (v > end) break;
    out.push_back(v);
  }
  if (out.empty() || out.back() != end) out.push_back(end);
  return out;
}

struct MapRequest {
  std::string name = "koebe_alpha";
  double alpha = 0.0;
  double lambda = 0.5;
  int order = lh::kDefaultOrder;
  std::uint64_t seed = 1;
  int atoms = 5;
};

lh::LogHarmonicMap build_map(const MapRequest& req) {
  if (req.name == "koebe_alpha") return lh::from_catalog(lh::koebe_alpha(req.alpha), req.order);
  if (req.name == "LR") return lh::from_catalog(lh::half_plane_map(), req.order);
  if (req.name == "LS") return lh::from_catalog(lh::two_slits_map(), req.order);
  if (req.name == "F_lambda") return lh::from_catalog(lh::slit_blend(req.lambda), req.order);
  if (req.name == "f1") return lh::from_catalog(lh::slit_blend(1.0), req.order);
  if (req.name == "f2") return lh::from_catalog(lh::slit_blend(0.0), req.order);
  if (req.name == "generated") {
    std::mt19937_64 rng(req.seed);
    const lh::DiscreteMeasure delta = lh::random_measure(rng, req.atoms);
    const lh::DiscreteMeasure kappa = lh::random_measure(rng, req.atoms);
    return lh::generate(delta, kappa, req.alpha, req.order);
  }
  throw lh::BadParameter("unknown map '" + req.name +
                         "' (koebe_alpha|LR|LS|F_lambda|f1|f2|generated)");
}

// Output stream that is stdout by default and a file when --out was given.
struct OutStream {
  explicit OutStream(const std::string& path) {
    if (!path.empty()) {
      file.emplace(path, std::ios::binary);
      if (!*file) throw lh::IOError("cannot open output file: " + path);
    }
  }
  std::ostream& get() { return file ? *file : std::cout; }
  std::optional<std::ofstream> file;
};

lh::VerificationReport scalar_report(const std::string& id, double margin, double tol,
                                     Complex witness = {0.0, 0.0}, std::size_t samples = 1) {
  lh::VerificationReport rep;
  rep.theorem_id = id;
  rep.worst_margin = margin;
  rep.tol = tol;
  rep.witness_z = witness;
  rep.samples = samples;
  rep.passed = margin >= -tol;
  return rep;
}

// ---------------------------------------------------------------------------
// verify suites
// ---------------------------------------------------------------------------

struct SuiteParams {
  double alpha = 0.25;
  int trials = 20;
  std::uint64_t seed = 20240801;
  double tol = 1e-9;
};

using Reports = std::vector<lh::VerificationReport>;

void suite_series(const SuiteParams& p, Reports& out) {
  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> radius(0.0, 1.0), angle(0.0, 2.0 * M_PI);
  double worst_round = 0.0, worst_deriv = 0.0;
  for (int t = 0; t < std::max(p.trials, 10); ++t) {
    lh::ComplexSeries s(lh::kDefaultOrder);
    for (int n = 1; n <= s.order(); ++n) s[n] = std::polar(radius(rng), angle(rng));
    const lh::ComplexSeries e = lh::exp_series(s);
    worst_round = std::max(worst_round, lh::max_coeff_distance(lh::log_series(e), s));
    const lh::ComplexSeries lhs = lh::differentiate(e);
    const lh::ComplexSeries rhs = lh::differentiate(s) * e.truncated(e.order() - 1);
    worst_deriv = std::max(worst_deriv, lh::max_coeff_distance(lhs, rhs));
  }
  out.push_back(scalar_report("series_exp_log_roundtrip", 1e-12 - worst_round, 0.0));
  out.push_back(scalar_report("series_derivative_identity", 1e-12 - worst_deriv, 0.0));
}

void suite_starlike(const SuiteParams& p, Reports& out) {
  const lh::SamplingConfig cfg = lh::SamplingConfig::polar();
  for (double a : {0.0, 0.25, 0.5, 0.75}) {
    const lh::LogHarmonicMap m = lh::from_catalog(lh::koebe_alpha(a));
    auto rep = lh::starlike_order_margin(m, a, cfg);
    rep.theorem_id = "starlike_order[" + m.label + "]";
    out.push_back(rep);
  }
  for (const lh::CatalogEntry& e :
       {lh::half_plane_map(), lh::two_slits_map(), lh::slit_blend(0.3)}) {
    const lh::LogHarmonicMap m = lh::from_catalog(e);
    auto rep = lh::starlike_order_margin(m, *m.alpha, cfg);
    rep.theorem_id = "starlike_order[" + m.label + "]";
    out.push_back(rep);
  }
  std::mt19937_64 rng(p.seed);
  for (int t = 0; t < std::max(1, p.trials / 4); ++t) {
    const lh::DiscreteMeasure delta = lh::random_measure(rng);
    const lh::DiscreteMeasure kappa = lh::random_measure(rng);
    const lh::LogHarmonicMap m = lh::generate(delta, kappa, p.alpha);
    auto rep = lh::starlike_order_margin(m, p.alpha, cfg);
    rep.theorem_id = "starlike_order[generated#" + std::to_string(t) + "]";
    out.push_back(rep);

    // Independent route: Re(Df/f) must equal Re(z phi'/phi) for phi = z h/g.
    // Radii stay below 0.6 so the truncated quotient series is trustworthy.
    const lh::ComplexSeries Phi = lh::associated_analytic(m);
    const lh::ComplexSeries dPhi = lh::differentiate(Phi);
    double worst = 0.0;
    for (double r : {0.2, 0.4, 0.55})
      for (int j = 0; j < 32; ++j) {
        const Complex z = std::polar(r, 2.0 * M_PI * j / 32.0);
        const double via_phi = 1.0 + (z * lh::evaluate(dPhi, z) / lh::evaluate(Phi, z)).real();
        worst = std::max(worst, std::abs(lh::radial_growth_rate(m, z) - via_phi));
      }
    out.push_back(scalar_report("starlike_two_routes#" + std::to_string(t), 1e-10 - worst, 0.0));
  }
}

void suite_distortion(const SuiteParams& p, Reports& out) {
  const lh::SamplingConfig cfg = lh::SamplingConfig::polar();
  for (double a : {0.0, 0.25, 0.5, 0.75}) {
    const lh::LogHarmonicMap m = lh::from_catalog(lh::koebe_alpha(a));
    auto repf = lh::verify_distortion_f(m, a, cfg);
    repf.theorem_id = "distortion_f[" + m.label + "]";
    out.push_back(repf);
    auto rephg = lh::verify_distortion_hg(m, a, cfg);
    rephg.theorem_id = "distortion_hg[" + m.label + "]";
    out.push_back(rephg);

    // Sharpness: the upper envelope is attained along (0,1). The series route needs
    // a deep truncation because the extremal coefficients grow like exp(c sqrt(n)).
    const lh::LogHarmonicMap deep = lh::from_catalog(lh::koebe_alpha(a), 192);
    double worst_series = 0.0, worst_closed = 0.0;
    for (double r = 0.05; r < 0.649; r += 0.05)
      worst_series = std::max(worst_series,
                              std::abs(lh::distortion_log_upper_f(r, a) -
                                       std::log(std::abs(lh::evaluate_f_series(deep, {r, 0.0})))));
    for (double r : {0.7, 0.9, 0.99, 0.999})
      worst_closed = std::max(worst_closed, std::abs(lh::distortion_log_upper_f(r, a) -
                                                     lh::log_modulus_f(m, {r, 0.0})));
    out.push_back(scalar_report("distortion_sharp_series[" + m.label + "]",
                                1e-9 - worst_series, 0.0));
    out.push_back(scalar_report("distortion_sharp_closed[" + m.label + "]",
                                1e-6 - worst_closed, 0.0));

    // The |g| lower envelope is attained by the anti-aligned Dirac pair at +r.
    const lh::LogHarmonicMap anti =
        lh::generate(lh::DiscreteMeasure::dirac({1.0, 0.0}),
                     lh::DiscreteMeasure::dirac({-1.0, 0.0}), a, 192);
    double worst_glo = 0.0;
    for (double r = 0.05; r < 0.649; r += 0.05)
      worst_glo = std::max(worst_glo,
                           std::abs(lh::distortion_log_lower_g(r, a) -
                                    std::log(std::abs(lh::g_value(anti, {r, 0.0})))));
    out.push_back(scalar_report("distortion_sharp_g_lower[" + m.label + "]",
                                1e-9 - worst_glo, 0.0));
  }
  std::mt19937_64 rng(p.seed);
  for (int t = 0; t < p.trials; ++t) {
    const lh::LogHarmonicMap m =
        lh::generate(lh::random_measure(rng), lh::random_measure(rng), p.alpha);
    auto repf = lh::verify_distortion_f(m, p.alpha, cfg);
    repf.theorem_id = "distortion_f[generated#" + std::to_string(t) + "]";
    out.push_back(repf);
    auto rephg = lh::verify_distortion_hg(m, p.alpha, cfg);
    rephg.theorem_id = "distortion_hg[generated#" + std::to_string(t) + "]";
    out.push_back(rephg);
  }
}

void suite_coeffs(const SuiteParams& p, Reports& out) {
  for (double a : {0.0, 0.25, 0.5, 0.75}) {
    const lh::DiscreteMeasure dirac = lh::DiscreteMeasure::dirac({1.0, 0.0});
    auto rep = lh::verify_coefficient_bounds(dirac, dirac, a, 50, p.tol);
    rep.theorem_id = "coefficient_bounds[dirac,alpha=" + std::to_string(a) + "]";
    out.push_back(rep);
    // Dirac pairs are the equality case: the worst slack must be ~0 from above.
    out.push_back(scalar_report("coefficient_sharpness[alpha=" + std::to_string(a) + "]",
                                1e-12 - std::abs(rep.worst_margin), 0.0));
  }
  std::mt19937_64 rng(p.seed);
  double worst = 0.0;
  for (int t = 0; t < std::max(p.trials, 20); ++t) {
    const lh::DiscreteMeasure delta = lh::random_measure(rng);
    const lh::DiscreteMeasure kappa = lh::random_measure(rng);
    auto rep = lh::verify_coefficient_bounds(delta, kappa, p.alpha, 50, p.tol);
    worst = std::min(worst, rep.worst_margin);
    if (!rep.passed) out.push_back(rep);
  }
  out.push_back(scalar_report("coefficient_bounds[random]", worst, p.tol));
}

void suite_bohr(const SuiteParams& p, Reports& out) {
  double worst_residual = 0.0;
  for (double a : parse_sweep("0:1:0.05"))
    for (lh::Factor which : {lh::Factor::H, lh::Factor::G, lh::Factor::F})
      worst_residual = std::max(worst_residual,
                                std::abs(lh::solve_bohr_radius(a, which).residual));
  out.push_back(scalar_report("bohr_solver_residual", 1e-12 - worst_residual, 0.0));

  const double rH1 = lh::solve_bohr_radius(1.0, lh::Factor::H).radius;
  const double rG1 = lh::solve_bohr_radius(1.0, lh::Factor::G).radius;
  const double rf1 = lh::solve_bohr_radius(1.0, lh::Factor::F).radius;
  const double limit_err = std::max({std::abs(rH1 - 1.0 / 3.0), std::abs(rG1 - 1.0 / 3.0),
                                     std::abs(rf1 - (3.0 - 2.0 * std::sqrt(2.0)))});
  out.push_back(scalar_report("bohr_alpha1_limits", 1e-12 - limit_err, 0.0));

  for (double a : {0.0, 0.5}) {
    const lh::LogHarmonicMap m = lh::from_catalog(lh::koebe_alpha(a));
    for (lh::Factor which : {lh::Factor::H, lh::Factor::G, lh::Factor::F}) {
      auto rep = lh::verify_bohr(m, a, which, 33, 1e-6);  // equality case up to rounding
      rep.theorem_id += "[" + m.label + "]";
      out.push_back(rep);
    }
  }
  std::mt19937_64 rng(p.seed);
  for (int t = 0; t < std::max(1, p.trials / 4); ++t) {
    const lh::LogHarmonicMap m =
        lh::generate(lh::random_measure(rng), lh::random_measure(rng), p.alpha);
    auto rep = lh::verify_bohr(m, p.alpha, lh::Factor::H, 33, p.tol);
    rep.theorem_id += "[generated#" + std::to_string(t) + "]";
    out.push_back(rep);
  }
}

void suite_schwarzian(const SuiteParams& p, Reports& out) {
  const int order = lh::kDefaultOrder;
  lh::ComplexSeries expz(order);
  for (int n = 1; n <= order; ++n) expz[n] = Complex{1.0, 0.0} / double(n);
  const lh::ComplexSeries h = lh::exp_series(expz);  // exp(-log(1-z)) = 1/(1-z), h' zero-free
  // Constant dilatation: P_f must be harmonic (mixed derivative identically zero).
  lh::ComplexSeries mu_const(order);
  mu_const[0] = Complex{0.35, 0.2};
  const lh::NonVanishingMap m_const = lh::from_dilatation(h, mu_const, "mu=const");
  // mu = z: mixed derivative has closed form of modulus 2|z|/(1-|z|^2)^3.
  lh::ComplexSeries mu_z(order);
  mu_z[1] = Complex{1.0, 0.0};
  const lh::NonVanishingMap m_z = lh::from_dilatation(h, mu_z, "mu=z");

  double worst_const = 0.0, best_z = 0.0, worst_fd = 0.0;
  for (double r : {0.1, 0.3, 0.5})
    for (int j = 0; j < 16; ++j) {
      const Complex z = std::polar(r, 2.0 * M_PI * j / 16.0);
      worst_const = std::max(worst_const,
                             std::abs(lh::mixed_derivative_pre_schwarzian(m_const, z)));
      const Complex closed = lh::mixed_derivative_pre_schwarzian(m_z, z);
      best_z = std::max(best_z, std::abs(closed));
      const Complex expected = -2.0 * std::conj(z) / std::pow(1.0 - std::norm(z), 3);
      worst_fd = std::max(worst_fd, std::abs(closed - expected));
    }
  out.push_back(scalar_report("mixed_derivative_harmonic[mu=const]", 1e-10 - worst_const, 0.0));
  out.push_back(scalar_report("mixed_derivative_nonharmonic[mu=z]", best_z - 1e-2, 0.0));
  out.push_back(scalar_report("mixed_derivative_closed_form[mu=z]", 1e-10 - worst_fd, 0.0));

  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> amp(0.05, 0.3), angle(0.0, 2.0 * M_PI),
      rad(0.05, 0.3);
  double worst_pre = 0.0, worst_s = 0.0;
  for (int t = 0; t < std::max(p.trials, 10); ++t) {
    const lh::NonVanishingMap m = lh::random_nonvanishing_map(rng, order);
    const Complex a = std::polar(amp(rng), angle(rng));
    const lh::ComplexSeries phi = lh::mobius_series(a, order);
    const Complex z = std::polar(rad(rng), angle(rng));
    const lh::ChainRuleResiduals res = lh::chain_rule_check(m, phi, z);
    worst_pre = std::max(worst_pre, res.pre);
    worst_s = std::max(worst_s, res.schwarzian);
  }
  out.push_back(scalar_report("chain_rule_pre", 1e-8 - worst_pre, 0.0));
  out.push_back(scalar_report("chain_rule_schwarzian", 1e-8 - worst_s, 0.0));
}

void suite_bloch(const SuiteParams& p, Reports& out) {
  const lh::SamplingConfig cfg = lh::SamplingConfig::polar();
  const int order = lh::kDefaultOrder;
  lh::ComplexSeries z2(order);
  z2[2] = Complex{1.0, 0.0};
  lh::ComplexSeries one(order);
  one[0] = Complex{1.0, 0.0};
  const lh::NonVanishingMap m =
      lh::make_nonvanishing(lh::exp_series(z2), one, "exp(z^2)");
  const double beta = lh::bloch_seminorm(m, cfg);
  const double target = 4.0 / (3.0 * std::sqrt(3.0));
  out.push_back(scalar_report("bloch_seminorm[exp(z^2)]", 1e-6 - std::abs(beta - target), 0.0));

  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> amp(0.0, 0.7), angle(0.0, 2.0 * M_PI);
  for (int t = 0; t < std::max(1, p.trials / 4); ++t) {
    const lh::NonVanishingMap f = lh::random_nonvanishing_map(rng, order);
    const Complex a = std::polar(amp(rng), angle(rng));
    const Complex b = std::polar(amp(rng), angle(rng));
    const Complex c = std::polar(amp(rng), angle(rng));
    auto rep = lh::invariance_checks(f, a, b, c, cfg);
    rep.theorem_id += "#" + std::to_string(t);
    out.push_back(rep);
  }
}

void suite_slit(const SuiteParams& p, Reports& out) {
  double worst_tip = 0.0;
  for (double lam : parse_sweep("0:1:0.1"))
    worst_tip = std::max(worst_tip,
                         std::abs(lh::slit_tip_numeric(lam) - lh::slit_tip(lam)));
  out.push_back(scalar_report("slit_tip_boundary_limit", 1e-6 - worst_tip, 0.0));

  const double end_err =
      std::max(std::abs(lh::conformal_inner_radius(0.0) - 4.0 * std::exp(-2.0)),
               std::abs(lh::conformal_inner_radius(1.0) - 4.0));
  out.push_back(scalar_report("inner_radius_endpoints", end_err == 0.0 ? 0.0 : -end_err, 0.0));
  const double lr_ls_err =
      std::max(std::abs(lh::conformal_inner_radius(lh::half_plane_map()) - 1.0 / M_E),
               std::abs(lh::conformal_inner_radius(lh::two_slits_map()) - 1.0 / M_E));
  out.push_back(scalar_report("inner_radius_LR_LS", 1e-15 - lr_ls_err, 0.0));

  // Near the boundary the whole circle collapses onto the tip.
  double worst_collapse = 0.0;
  for (double lam : {0.0, 0.5, 1.0}) {
    const lh::LogHarmonicMap m = lh::from_catalog(lh::slit_blend(lam), 1);
    double min_mod = 1e300;
    for (int j = 1; j < 4096; ++j) {
      const Complex z = std::polar(1.0 - 1e-3, 2.0 * M_PI * j / 4096.0);
      min_mod = std::min(min_mod, std::abs(lh::evaluate_f_exact(m, z)));
    }
    worst_collapse = std::max(worst_collapse,
                              std::abs(min_mod - std::abs(lh::slit_tip(lam))));
  }
  out.push_back(scalar_report("slit_circle_collapse", 5e-3 - worst_collapse, 0.0));
  (void)p;
}

int run_verify(const std::string& suite, const SuiteParams& params, const std::string& out_path,
               std::optional<double> alpha_root_query) {
  Reports reports;
  const bool all = suite == "all";
  if (all || suite == "series") suite_series(params, reports);
  if (all || suite == "starlike") suite_starlike(params, reports);
  if (all || suite == "distortion") suite_distortion(params, reports);
  if (all || suite == "coeffs") suite_coeffs(params, reports);
  if (all || suite == "bohr") suite_bohr(params, reports);
  if (all || suite == "schwarzian") suite_schwarzian(params, reports);
  if (all || suite == "bloch") suite_bloch(params, reports);
  if (all || suite == "slit") suite_slit(params, reports);
  if (reports.empty())
    throw lh::BadParameter("unknown suite '" + suite +
                           "' (series|starlike|distortion|coeffs|bohr|schwarzian|bloch|slit|all)");

  bool ok = true;
  nlohmann::ordered_json j;
  j["suite"] = suite;
  if (alpha_root_query) {
    j["bohr_radii"] = {
        {"alpha", *alpha_root_query},
        {"r_H", lh::solve_bohr_radius(*alpha_root_query, lh::Factor::H).radius},
        {"r_G", lh::solve_bohr_radius(*alpha_root_query, lh::Factor::G).radius},
        {"r_f", lh::solve_bohr_radius(*alpha_root_query, lh::Factor::F).radius}};
  }
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& rep : reports) {
    ok = ok && rep.passed;
    j["reports"].push_back(rep.to_json());
  }
  j["passed"] = ok;
  OutStream os(out_path);
  os.get() << j.dump(2) << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"log-harmonic mapping toolkit"};
  app.require_subcommand(1);

  MapRequest map_req;
  std::string out_path;
  std::string format = "ppm";
  int size = 512;

  auto add_map_options = [&](CLI::App* cmd) {
    cmd->add_option("--map", map_req.name, "koebe_alpha|LR|LS|F_lambda|f1|f2|generated");
    cmd->add_option("--alpha", map_req.alpha, "order parameter in [0,1]");
    cmd->add_option("--lambda", map_req.lambda, "slit blend parameter in [0,1]");
    cmd->add_option("--order", map_req.order, "series truncation order");
    cmd->add_option("--seed", map_req.seed, "measure seed for generated maps");
    cmd->add_option("--atoms", map_req.atoms, "max atoms per generated measure");
  };

  // render
  CLI::App* render = app.add_subcommand("render", "domain-coloring image or CSV samples");
  add_map_options(render);
  render->add_option("--size", size, "raster width and height in pixels");
  render->add_option("--format", format, "ppm|csv");
  render->add_option("--out", out_path, "output path (default stdout)");

  // verify
  std::string suite = "all";
  SuiteParams params;
  std::optional<double> alpha_opt;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite, exit 0 iff green");
  verify->add_option("suite", suite, "series|starlike|distortion|coeffs|bohr|schwarzian|bloch|slit|all");
  verify->add_option("--alpha", alpha_opt, "order parameter for random subjects");
  verify->add_option("--trials", params.trials, "number of random subjects");
  verify->add_option("--seed", params.seed, "RNG seed");
  verify->add_option("--tol", params.tol, "slack for random-subject inequalities");
  verify->add_option("--out", out_path, "JSON report path (default stdout)");

  // tables
  std::string which = "coefficients";
  std::string sweep = "0:1:0.05";
  int n_max = 20;
  CLI::App* tables = app.add_subcommand("tables", "CSV tables of coefficients or radii");
  tables->add_option("--which", which, "coefficients|bohr_radii|inner_radii");
  tables->add_option("--sweep", sweep, "start:end:step for radii tables");
  tables->add_option("--n-max", n_max, "coefficient count");
  add_map_options(tables);
  tables->add_option("--out", out_path, "output path (default stdout)");

  // bohr
  std::string alpha_sweep = "0:1:0.05";
  CLI::App* bohr = app.add_subcommand("bohr", "Bohr radii (alpha, r_H, r_G, r_f) sweep");
  bohr->add_option("--alpha-sweep", alpha_sweep, "start:end:step");
  bohr->add_option("--alpha", alpha_opt, "single alpha instead of a sweep");
  bohr->add_option("--out", out_path, "output path (default stdout)");

  // inner-radius
  std::string lambda_sweep = "0:1:0.1";
  CLI::App* inner = app.add_subcommand("inner-radius", "slit tips and conformal inner radii");
  inner->add_option("--lambda-sweep", lambda_sweep, "start:end:step");
  inner->add_option("--out", out_path, "output path (default stdout)");

  // generate
  CLI::App* gen = app.add_subcommand("generate", "sample a represented map, dump JSON");
  add_map_options(gen);
  gen->add_option("--n-coeffs", n_max, "number of exponent coefficients to emit");
  gen->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the usage message / help text
    return code == 0 ? 0 : 2;      // --help exits 0; every parse problem is a usage error
  }

  try {
    if (render->parsed()) {
      const lh::LogHarmonicMap m = build_map(map_req);
      OutStream os(out_path);
      auto f = [&](Complex z) { return lh::evaluate_f(m, z); };
      if (format == "ppm")
        lh::render_ppm(f, size, size, os.get());
      else if (format == "csv")
        lh::render_csv(f, lh::SamplingConfig::polar(24, 0.98, 96), os.get());
      else
        throw lh::BadParameter("unknown format '" + format + "'");
      return 0;
    }

    if (verify->parsed()) {
      if (alpha_opt) params.alpha = *alpha_opt;
      return run_verify(suite, params, out_path,
                        suite == "bohr" && alpha_opt ? alpha_opt : std::nullopt);
    }

    if (tables->parsed()) {
      OutStream os(out_path);
      if (which == "coefficients") {
        const lh::LogHarmonicMap m = build_map(map_req);
        const lh::ComplexSeries a = lh::log_series(m.h);
        const lh::ComplexSeries b = lh::log_series(m.g);
        const double al = m.alpha.value_or(0.0);
        os.get() << "n,re_a,im_a,re_b,im_b,bound_a,bound_b\n";
        for (int n = 1; n <= std::min(n_max, a.order()); ++n)
          os.get() << n << ',' << lh::format_full(a[n].real()) << ','
                   << lh::format_full(a[n].imag()) << ',' << lh::format_full(b[n].real()) << ','
                   << lh::format_full(b[n].imag()) << ','
                   << lh::format_full(2.0 * (1.0 - al) + 1.0 / n) << ','
                   << lh::format_full(2.0 * (1.0 - al) + (2.0 * al - 1.0) / n) << '\n';
      } else if (which == "bohr_radii") {
        os.get() << "alpha,r_H,r_G,r_f\n";
        for (double a : parse_sweep(sweep))
          os.get() << lh::format_full(a) << ','
                   << lh::format_full(lh::solve_bohr_radius(a, lh::Factor::H).radius) << ','
                   << lh::format_full(lh::solve_bohr_radius(a, lh::Factor::G).radius) << ','
                   << lh::format_full(lh::solve_bohr_radius(a, lh::Factor::F).radius) << '\n';
      } else if (which == "inner_radii") {
        os.get() << "lambda,tip,rho0\n";
        for (double lam : parse_sweep(sweep))
          os.get() << lh::format_full(lam) << ','
                   << lh::format_full(lh::slit_tip(lam).real()) << ','
                   << lh::format_full(lh::conformal_inner_radius(lam)) << '\n';
      } else {
        throw lh::BadParameter("unknown table '" + which + "'");
      }
      return 0;
    }

    if (bohr->parsed()) {
      OutStream os(out_path);
      os.get() << "alpha,r_H,r_G,r_f\n";
      const std::vector<double> alphas =
          alpha_opt ? std::vector<double>{*alpha_opt} : parse_sweep(alpha_sweep);
      for (double a : alphas)
        os.get() << lh::format_full(a) << ','
                 << lh::format_full(lh::solve_bohr_radius(a, lh::Factor::H).radius) << ','
                 << lh::format_full(lh::solve_bohr_radius(a, lh::Factor::G).radius) << ','
                 << lh::format_full(lh::solve_bohr_radius(a, lh::Factor::F).radius) << '\n';
      return 0;
    }

    if (inner->parsed()) {
      OutStream os(out_path);
      os.get() << "lambda,tip,rho0\n";
      for (double lam : parse_sweep(lambda_sweep))
        os.get() << lh::format_full(lam) << ',' << lh::format_full(lh::slit_tip(lam).real())
                 << ',' << lh::format_full(lh::conformal_inner_radius(lam)) << '\n';
      return 0;
    }

    if (gen->parsed()) {
      std::mt19937_64 rng(map_req.seed);
      const lh::DiscreteMeasure delta = lh::random_measure(rng, map_req.atoms);
      const lh::DiscreteMeasure kappa = lh::random_measure(rng, map_req.atoms);
      const lh::LogHarmonicMap m = lh::generate(delta, kappa, map_req.alpha, map_req.order);

      nlohmann::ordered_json j;
      j["seed"] = map_req.seed;
      j["alpha"] = map_req.alpha;
      j["order"] = map_req.order;
      auto measure_json = [](const lh::DiscreteMeasure& mu) {
        nlohmann::ordered_json out;
        out["atoms"] = nlohmann::ordered_json::array();
        for (const Complex& a : mu.atoms)
          out["atoms"].push_back({{"re", a.real()}, {"im", a.imag()}});
        out["weights"] = mu.weights;
        return out;
      };
      j["delta"] = measure_json(delta);
      j["kappa"] = measure_json(kappa);
      j["coefficients"] = nlohmann::ordered_json::array();
      for (int n = 1; n <= std::min(n_max, 20); ++n) {
        const Complex an = lh::coefficient_a(delta, kappa, map_req.alpha, n);
        const Complex bn = lh::coefficient_b(delta, kappa, map_req.alpha, n);
        j["coefficients"].push_back({{"n", n},
                                     {"a", {{"re", an.real()}, {"im", an.imag()}}},
                                     {"b", {{"re", bn.real()}, {"im", bn.imag()}}}});
      }
      j["starlike_margin"] =
          lh::starlike_order_margin(m, map_req.alpha, lh::SamplingConfig::polar()).to_json();
      j["coefficient_bounds"] =
          lh::verify_coefficient_bounds(delta, kappa, map_req.alpha, 50).to_json();
      OutStream os(out_path);
      os.get() << j.dump(2) << '\n';
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}
