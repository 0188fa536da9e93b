// Sampling grids and pass/fail reports shared by all numerical verifiers.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "logharm/complex_series.hpp"
#include "logharm/errors.hpp"

namespace logharm {

// Polar sampling plan. Radii are explicit so callers can densify toward the boundary;
// angles are equispaced on [0, 2pi). `tol` applies to series-backed interior points,
// `boundary_tol` to points with r > 0.95 where evaluation leans on closed forms.
struct SamplingConfig {
  std::vector<double> radii;
  int angles = 256;
  double tol = 1e-9;
  double boundary_tol = 1e-6;

  // Default plan: radii log-densified toward 1 (uniform in -log(1-r)), r in [r_min, r_max].
  static SamplingConfig polar(int n_radii = 40, double r_max = 0.99, int n_angles = 256,
                              double r_min = 0.05) {
    if (n_radii < 2 || n_angles < 1 || !(r_min > 0.0) || !(r_max < 1.0) || !(r_min < r_max))
      throw BadParameter("polar sampling: need 0 < r_min < r_max < 1 and n_radii >= 2");
    SamplingConfig cfg;
    cfg.angles = n_angles;
    const double u0 = -std::log1p(-r_min);
    const double u1 = -std::log1p(-r_max);
    cfg.radii.reserve(static_cast<std::size_t>(n_radii));
    for (int k = 0; k < n_radii; ++k) {
      const double u = u0 + (u1 - u0) * double(k) / double(n_radii - 1);
      cfg.radii.push_back(1.0 - std::exp(-u));
    }
    return cfg;
  }

  double required_slack(double r) const { return r > 0.95 ? boundary_tol : tol; }

  std::vector<Complex> points() const {
    std::vector<Complex> out;
    out.reserve(radii.size() * static_cast<std::size_t>(angles));
    for (double r : radii)
      for (int j = 0; j < angles; ++j) {
        const double th = 2.0 * M_PI * double(j) / double(angles);
        out.push_back(std::polar(r, th));
      }
    return out;
  }
};

// Outcome of sweeping one inequality/identity over a grid. `worst_margin` is the
// signed slack at the witness point (>= -tol means the claim held there);
// `tol` is the slack that was required at that same point.
struct VerificationReport {
  std::string theorem_id;
  bool passed = false;
  double worst_margin = 0.0;
  Complex witness_z{0.0, 0.0};
  std::size_t samples = 0;
  double tol = 0.0;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["theorem_id"] = theorem_id;
    j["passed"] = passed;
    j["worst_margin"] = worst_margin;
    j["witness_z"] = {{"re", witness_z.real()}, {"im", witness_z.imag()}};
    j["samples"] = samples;
    j["tol"] = tol;
    return j;
  }
};

// Accumulates (margin, required slack) pairs; the witness minimizes margin + slack,
// so `passed == (worst_margin >= -tol)` holds with mixed interior/boundary tolerances.
class MarginTracker {
 public:
  explicit MarginTracker(std::string theorem_id) : id_(std::move(theorem_id)) {}

  void observe(double margin, double slack, Complex z) {
    ++samples_;
    if (samples_ == 1 || margin + slack < worst_margin_ + worst_slack_) {
      worst_margin_ = margin;
      worst_slack_ = slack;
      witness_ = z;
    }
  }

  VerificationReport report() const {
    VerificationReport rep;
    rep.theorem_id = id_;
    rep.samples = samples_;
    rep.worst_margin = samples_ ? worst_margin_ : 0.0;
    rep.witness_z = witness_;
    rep.tol = samples_ ? worst_slack_ : 0.0;
    rep.passed = samples_ > 0 && worst_margin_ >= -worst_slack_;
    return rep;
  }

 private:
  std::string id_;
  std::size_t samples_ = 0;
  double worst_margin_ = 0.0;
  double worst_slack_ = 0.0;
  Complex witness_{0.0, 0.0};
};

}  // namespace logharm
