// Rendering primitives and the command-line front end: full-precision formatting,
// raster layout, CSV sampling, exit codes and byte-level determinism.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "logharm/catalog.hpp"
#include "logharm/map.hpp"
#include "logharm/render.hpp"
#include "logharm/verification.hpp"

using logharm::Complex;
using logharm::evaluate_f;
using logharm::from_catalog;
using logharm::render_csv;
using logharm::render_ppm;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

// Runs the built CLI, discarding its streams; returns the process exit code.
int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(LOGHARM_CLI_PATH) + " " + args + " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("full-precision formatting round-trips through strtod") {
  for (double x : {M_PI, 1.0 / 3.0, 1e-17, 6.02214076e23, 0.1, -2.5e-8, 0.0}) {
    const std::string s = logharm::format_full(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("raster output has the promised header, payload size and disk mask") {
  const logharm::LogHarmonicMap m = from_catalog(logharm::koebe_alpha(0.25), 8);
  std::ostringstream out;
  render_ppm([&](Complex z) { return evaluate_f(m, z); }, 64, 64, out);
  const std::string ppm = out.str();
  const std::string header = "P6\n64 64\n255\n";
  REQUIRE(ppm.size() == header.size() + 3u * 64u * 64u);
  CHECK(ppm.compare(0, header.size(), header) == 0);
  // The corner pixel lies outside the unit disk and must be masked to black.
  CHECK(ppm[header.size() + 0] == '\0');
  CHECK(ppm[header.size() + 1] == '\0');
  CHECK(ppm[header.size() + 2] == '\0');
}

TEST_CASE("CSV sampling emits parseable full-precision rows on the polar grid") {
  logharm::SamplingConfig cfg;
  cfg.radii = {0.5};
  cfg.angles = 4;
  std::ostringstream out;
  render_csv([](Complex z) { return z * z; }, cfg, out);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "re_z,im_z,re_f,im_f");
  int rows = 0;
  while (std::getline(in, line)) {
    double v[4];
    char* cursor = line.data();
    for (int k = 0; k < 4; ++k) {
      v[k] = std::strtod(cursor, &cursor);
      if (k < 3) {
        REQUIRE(*cursor == ',');
        ++cursor;
      }
    }
    const Complex z{v[0], v[1]};
    CHECK(std::abs(z) == 0.5);
    CHECK(std::abs(z * z - Complex{v[2], v[3]}) == 0.0);
    ++rows;
  }
  CHECK(rows == 4);
}

TEST_CASE("CLI exit codes: green suite 0, usage errors 2") {
  CHECK(run_cli("verify series --trials 3") == 0);
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("verify nonsense") == 2);
  CHECK(run_cli("render --map nonsense --out /dev/null") == 2);
  CHECK(run_cli("tables --which nonsense") == 2);
}

TEST_CASE("same-seed CLI invocations are byte-identical") {
  const auto a = temp_file("logharm_gen_a.json");
  const auto b = temp_file("logharm_gen_b.json");
  REQUIRE(run_cli("generate --seed 7 --alpha 0.3 --out " + a.string()) == 0);
  REQUIRE(run_cli("generate --seed 7 --alpha 0.3 --out " + b.string()) == 0);
  const std::string first = slurp(a);
  CHECK_FALSE(first.empty());
  CHECK(first == slurp(b));

  const auto c = temp_file("logharm_bohr_a.csv");
  const auto d = temp_file("logharm_bohr_b.csv");
  REQUIRE(run_cli("bohr --alpha-sweep 0:1:0.25 --out " + c.string()) == 0);
  REQUIRE(run_cli("bohr --alpha-sweep 0:1:0.25 --out " + d.string()) == 0);
  CHECK(slurp(c) == slurp(d));

  const auto e = temp_file("logharm_img_a.ppm");
  const auto f = temp_file("logharm_img_b.ppm");
  REQUIRE(run_cli("render --map F_lambda --lambda 0.3 --size 48 --out " + e.string()) == 0);
  REQUIRE(run_cli("render --map F_lambda --lambda 0.3 --size 48 --out " + f.string()) == 0);
  const std::string image = slurp(e);
  CHECK(image.size() == std::string("P6\n48 48\n255\n").size() + 3u * 48u * 48u);
  CHECK(image == slurp(f));

  for (const auto& p : {a, b, c, d, e, f}) std::filesystem::remove(p);
}

TEST_CASE("different seeds change the generated measures") {
  const auto a = temp_file("logharm_seed_a.json");
  const auto b = temp_file("logharm_seed_b.json");
  REQUIRE(run_cli("generate --seed 7 --out " + a.string()) == 0);
  REQUIRE(run_cli("generate --seed 8 --out " + b.string()) == 0);
  CHECK(slurp(a) != slurp(b));
  for (const auto& p : {a, b}) std::filesystem::remove(p);
}
