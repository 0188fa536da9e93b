// Truncated complex power series: arithmetic, exp/log, calculus, evaluation.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "logharm/errors.hpp"

namespace logharm {

using Complex = std::complex<double>;

inline constexpr int kDefaultOrder = 64;
// Constant terms closer than this to a required value (0 or 1) are accepted as exact.
inline constexpr double kConstantTermTol = 1e-12;

// Coefficients c[0..order]; all operations truncate to the smaller operand order.
class ComplexSeries {
 public:
  ComplexSeries() : c_(1, Complex{0.0, 0.0}) {}
  explicit ComplexSeries(int order) : c_(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0}) {
    if (order < 0) throw BadParameter("series order must be >= 0");
  }
  ComplexSeries(std::initializer_list<Complex> coeffs) : c_(coeffs) {
    if (c_.empty()) c_.assign(1, Complex{0.0, 0.0});
  }
  explicit ComplexSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, Complex{0.0, 0.0});
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  Complex& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
  const Complex& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<Complex>& coefficients() const { return c_; }

  // Coefficient of z^n, zero beyond the truncation order.
  Complex coeff(int n) const {
    return (n >= 0 && n <= order()) ? c_[static_cast<std::size_t>(n)] : Complex{0.0, 0.0};
  }

  ComplexSeries truncated(int order) const {
    ComplexSeries out(order);
    for (int n = 0; n <= order; ++n) out[n] = coeff(n);
    return out;
  }

 private:
  std::vector<Complex> c_;
};

inline ComplexSeries operator+(const ComplexSeries& a, const ComplexSeries& b) {
  ComplexSeries out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) out[n] = a[n] + b[n];
  return out;
}

inline ComplexSeries operator-(const ComplexSeries& a, const ComplexSeries& b) {
  ComplexSeries out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) out[n] = a[n] - b[n];
  return out;
}

inline ComplexSeries operator*(const ComplexSeries& a, const ComplexSeries& b) {
  ComplexSeries out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) {
    Complex acc{0.0, 0.0};
    for (int k = 0; k <= n; ++k) acc += a[k] * b[n - k];
    out[n] = acc;
  }
  return out;
}

inline ComplexSeries operator*(Complex s, const ComplexSeries& a) {
  ComplexSeries out(a.order());
  for (int n = 0; n <= out.order(); ++n) out[n] = s * a[n];
  return out;
}

inline ComplexSeries operator*(const ComplexSeries& a, Complex s) { return s * a; }

// Long division; requires |b[0]| above tolerance.
inline ComplexSeries operator/(const ComplexSeries& a, const ComplexSeries& b) {
  if (std::abs(b[0]) < kConstantTermTol)
    throw ZeroConstantTerm("series division: divisor constant term is zero");
  ComplexSeries out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) {
    Complex acc = a[n];
    for (int k = 1; k <= n; ++k) acc -= b[k] * out[n - k];
    out[n] = acc / b[0];
  }
  return out;
}

// Termwise derivative; order drops by one (constant input maps to the zero series).
inline ComplexSeries differentiate(const ComplexSeries& s) {
  ComplexSeries out(std::max(s.order() - 1, 0));
  for (int n = 0; n <= out.order(); ++n) out[n] = double(n + 1) * s.coeff(n + 1);
  return out;
}

// Termwise antiderivative vanishing at 0; order grows by one.
inline ComplexSeries integrate(const ComplexSeries& s) {
  ComplexSeries out(s.order() + 1);
  for (int n = 1; n <= out.order(); ++n) out[n] = s[n - 1] / double(n);
  return out;
}

// E = exp(s) via the first-order recurrence n E_n = sum_{k=1..n} k s_k E_{n-k}.
// A nonzero constant term simply scales the result by exp(s_0).
inline ComplexSeries exp_series(const ComplexSeries& s) {
  ComplexSeries out(s.order());
  out[0] = std::exp(s[0]);
  for (int n = 1; n <= out.order(); ++n) {
    Complex acc{0.0, 0.0};
    for (int k = 1; k <= n; ++k) acc += double(k) * s[k] * out[n - k];
    out[n] = acc / double(n);
  }
  return out;
}

// Inverse of exp_series; requires constant term 1 (within tolerance).
inline ComplexSeries log_series(const ComplexSeries& s) {
  if (std::abs(s[0] - Complex{1.0, 0.0}) > kConstantTermTol)
    throw BadConstantTerm("series log: constant term must be 1");
  ComplexSeries out(s.order());
  out[0] = std::log(s[0]);  // = 0 for an exactly normalized input
  for (int n = 1; n <= out.order(); ++n) {
    Complex acc = double(n) * s[n];
    for (int k = 1; k < n; ++k) acc -= double(k) * out[k] * s[n - k];
    out[n] = acc / (double(n) * s[0]);
  }
  return out;
}

// Horner evaluation at z; the caller is responsible for staying where the tail is small.
inline Complex evaluate(const ComplexSeries& s, Complex z) {
  Complex acc = s[s.order()];
  for (int n = s.order() - 1; n >= 0; --n) acc = acc * z + s[n];
  return acc;
}

// Largest coefficient-wise distance; the metric used by round-trip tests.
inline double max_coeff_distance(const ComplexSeries& a, const ComplexSeries& b) {
  double worst = 0.0;
  const int n_max = std::min(a.order(), b.order());
  for (int n = 0; n <= n_max; ++n) worst = std::max(worst, std::abs(a[n] - b[n]));
  return worst;
}

}  // namespace logharm
