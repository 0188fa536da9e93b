// Domain-coloring raster output (binary PPM) and full-precision CSV sampling.
#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <system_error>

#include "logharm/errors.hpp"
#include "logharm/verification.hpp"

namespace logharm {

// Shortest-round-trip decimal (17 significant digits), locale-independent.
inline std::string format_full(double x) {
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw IOError("format_full: to_chars failed");
  return std::string(buf.data(), res.ptr);
}

namespace detail {

// Hue from arg f (full circle), value from compressed log|f|: t/(1+t), t = log(1+|f|).
inline std::array<std::uint8_t, 3> domain_color(Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return {0, 0, 0};
  const double hue = (std::arg(w) / (2.0 * M_PI) + 1.0);  // wrapped below
  const double t = std::log1p(std::abs(w));
  const double value = t / (1.0 + t);
  const double sat = 0.85;
  const double hh = 6.0 * (hue - std::floor(hue));
  const int sector = static_cast<int>(hh) % 6;
  const double frac = hh - std::floor(hh);
  const double p = value * (1.0 - sat);
  const double q = value * (1.0 - sat * frac);
  const double t2 = value * (1.0 - sat * (1.0 - frac));
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = value; g = t2; b = p; break;
    case 1: r = q; g = value; b = p; break;
    case 2: r = p; g = value; b = t2; break;
    case 3: r = p; g = q; b = value; break;
    case 4: r = t2; g = p; b = value; break;
    default: r = value; g = p; b = q; break;
  }
  auto byte = [](double x) {
    return static_cast<std::uint8_t>(std::min(255.0, std::max(0.0, x * 255.0 + 0.5)));
  };
  return {byte(r), byte(g), byte(b)};
}

}  // namespace detail

// Rasterizes f over [-1,1]^2; pixels outside the disk of radius r_cap are black.
inline void render_ppm(const std::function<Complex(Complex)>& f, int width, int height,
                       std::ostream& out, double r_cap = 0.995) {
  if (width < 1 || height < 1) throw BadParameter("render_ppm: bad raster size");
  out << "P6\n" << width << " " << height << "\n255\n";
  for (int row = 0; row < height; ++row) {
    const double y = 1.0 - 2.0 * (row + 0.5) / height;  // top row has Im z near +1
    for (int col = 0; col < width; ++col) {
      const double x = 2.0 * (col + 0.5) / width - 1.0;
      std::array<std::uint8_t, 3> rgb{0, 0, 0};
      const Complex z{x, y};
      if (std::abs(z) <= r_cap) rgb = detail::domain_color(f(z));
      out.write(reinterpret_cast<const char*>(rgb.data()), 3);
    }
  }
  if (!out) throw IOError("render_ppm: stream write failed");
}

// Polar-grid samples as "re_z,im_z,re_f,im_f" rows at full precision.
inline void render_csv(const std::function<Complex(Complex)>& f, const SamplingConfig& cfg,
                       std::ostream& out) {
  out << "re_z,im_z,re_f,im_f\n";
  for (double r : cfg.radii)
    for (int j = 0; j < cfg.angles; ++j) {
      const Complex z = std::polar(r, 2.0 * M_PI * double(j) / double(cfg.angles));
      const Complex w = f(z);
      out << format_full(z.real()) << ',' << format_full(z.imag()) << ','
          << format_full(w.real()) << ',' << format_full(w.imag()) << '\n';
    }
  if (!out) throw IOError("render_csv: stream write failed");
}

}  // namespace logharm
