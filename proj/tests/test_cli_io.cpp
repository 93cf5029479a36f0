#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "funksphere/config.hpp"
#include "funksphere/errors.hpp"
#include "funksphere/io.hpp"
#include "funksphere/phantom.hpp"
#include "funksphere/selftest.hpp"
#include "funksphere/simulate.hpp"
#include "funksphere/sht.hpp"
#include "funksphere/vsh.hpp"
#include "funksphere/zonal.hpp"

using namespace funksphere;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::path(FUNKSPHERE_TEST_TMP) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + FUNKSPHERE_CLI + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

nlohmann::json load_json(const fs::path& p) { return nlohmann::json::parse(slurp(p)); }

}  // namespace

TEST_CASE("shcoeff write/read is bit-exact") {
  std::mt19937_64 rng(1);
  ScalarCoeffs c = random_real_coeffs(10, rng);
  c(3, 1) = Complex(1e-300, -5e-324);
  c(4, 0) = Complex(1.0 / 3.0, 0.0);
  std::stringstream s;
  write_shcoeff(s, c);
  const ScalarCoeffs d = read_shcoeff(s);
  CHECK(d.band_limit() == 10);
  CHECK((d.values().array() == c.values().array()).all());
}

TEST_CASE("vshcoeff write/read is bit-exact") {
  std::mt19937_64 rng(2);
  const VectorCoeffs v = random_tangent_field(7, rng) + VectorCoeffs::unit(7, 1, 2, -1);
  std::stringstream s;
  write_vshcoeff(s, v);
  const VectorCoeffs w = read_vshcoeff(s);
  CHECK(w.band_limit() == 7);
  CHECK(max_abs_diff(v, w) == 0.0);
}

TEST_CASE("shcoeff layout") {
  std::stringstream s;
  write_shcoeff(s, -0.5 * ScalarCoeffs::unit(3, 2, 0));
  CHECK(s.str() == "shcoeff v1 N_max=3\n2 0 -0.5 0\n");
  std::stringstream v;
  write_vshcoeff(v, VectorCoeffs::unit(2, 3, 1, -1));
  CHECK(v.str() == "vshcoeff v1 N_max=2\n3 1 -1 1 0\n");
}

TEST_CASE("malformed coefficient files") {
  auto bad_scalar = [](const std::string& text) {
    std::stringstream s(text);
    CHECK_THROWS_AS(read_shcoeff(s), FormatError);
  };
  bad_scalar("");
  bad_scalar("shcoeff v2 N_max=3\n");
  bad_scalar("vshcoeff v1 N_max=3\n");
  bad_scalar("shcoeff v1 N_max=-1\n");
  bad_scalar("shcoeff v1 N_max=3\n4 0 1 0\n");
  bad_scalar("shcoeff v1 N_max=3\n2 3 1 0\n");
  bad_scalar("shcoeff v1 N_max=3\n2 0 abc 0\n");
  bad_scalar("shcoeff v1 N_max=3\n2 0 1\n");
  std::stringstream v("vshcoeff v1 N_max=3\n4 1 0 1 0\n");
  CHECK_THROWS_AS(read_vshcoeff(v), FormatError);
  std::stringstream ok("shcoeff v1 N_max=2\n\n1 -1 0.25 -0.75\n");
  const ScalarCoeffs c = read_shcoeff(ok);
  CHECK(c(1, -1) == Complex(0.25, -0.75));
  CHECK_THROWS_AS(load_shcoeff("/nonexistent/file.shcoeff"), std::ios_base::failure);
}

TEST_CASE("multiplier JSON") {
  const MultiplierSpec m = hilbert_spec(9);
  const nlohmann::json j = multiplier_to_json(m);
  CHECK(j["parity"] == "odd");
  CHECK(j["lambda"].size() == 10);
  const MultiplierSpec back = multiplier_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.parity == m.parity);
  CHECK((back.lambda.array() == m.lambda.array()).all());
  CHECK_THROWS_AS(multiplier_from_json(nlohmann::json{{"parity", "sideways"}, {"lambda", {1.0}}}),
                  FormatError);
  CHECK_THROWS_AS(multiplier_from_json(nlohmann::json{{"lambda", {1.0}}}), FormatError);
}

TEST_CASE("grid JSON keeps full precision") {
  const SphericalGrid g = make_grid(5);
  const nlohmann::json j = nlohmann::json::parse(grid_to_json(g).dump());
  CHECK(j["n_theta"] == 6);
  CHECK(j["n_phi"] == 12);
  for (int i = 0; i < g.n_theta(); ++i) {
    CHECK(j["cos_theta"][i].get<double>() == g.cos_theta()[i]);
    CHECK(j["weights"][i].get<double>() == g.weights()[i]);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("config parsing") {
  const ExperimentConfig c = config_from_json(nlohmann::json::parse(
      R"({"n_max": 8, "seed": 5, "phantom": "harmonic 3 -2", "noise_sigma": 0.01,
          "forward": "quadrature", "truncate": 4})"));
  CHECK(c.n_max == 8);
  CHECK(c.seed == 5);
  CHECK(c.phantom.kind == PhantomSpec::Kind::harmonic);
  CHECK(c.phantom.degree == 3);
  CHECK(c.phantom.order == -2);
  CHECK(c.forward == ForwardMode::quadrature);
  CHECK(c.truncate == 4);
  const ExperimentConfig d = config_from_json(config_to_json(c));
  CHECK(config_to_json(d) == config_to_json(c));
  CHECK_THROWS(config_from_json(nlohmann::json::parse(R"({"nmax": 8})")));
  CHECK_THROWS(config_from_json(nlohmann::json::parse(R"({"forward": "magic"})")));
  ExperimentConfig bad;
  bad.n_max = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.n_max = 4;
  bad.phantom = PhantomSpec::parse("harmonic 5 0");
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("phantom specs") {
  CHECK(PhantomSpec::parse("random-bandlimited").kind == PhantomSpec::Kind::random_bandlimited);
  const PhantomSpec b = PhantomSpec::parse("gaussian-bump 0.5 1.5 0.3");
  CHECK(b.kind == PhantomSpec::Kind::gaussian_bump);
  CHECK(b.width == 0.3);
  CHECK(PhantomSpec::parse(b.to_string()).to_string() == b.to_string());
  CHECK_THROWS(PhantomSpec::parse("harmonic 2 3"));
  CHECK_THROWS(PhantomSpec::parse("harmonic two 0"));
  CHECK_THROWS(PhantomSpec::parse("gaussian-bump 0 0 -1"));
  CHECK_THROWS(PhantomSpec::parse("spiky"));
}

TEST_CASE("simulate is deterministic and forward modes agree") {
  ExperimentConfig c;
  c.n_max = 10;
  c.seed = 42;
  const Simulation a = simulate(c), b = simulate(c);
  CHECK(max_abs_diff(a.phantom, b.phantom) == 0.0);
  CHECK(max_abs_diff(a.data.g, b.data.g) == 0.0);
  CHECK(a.phantom.is_real_field(1e-14));
  c.forward = ForwardMode::quadrature;
  const Simulation q = simulate(c);
  CHECK(max_abs_diff(q.data.g, a.data.g) < 1e-9);
  CHECK(max_abs_diff(q.data.h, a.data.h) < 1e-9);
  c.seed = 43;
  CHECK(max_abs_diff(simulate(c).phantom, a.phantom) > 0.0);
}

TEST_CASE("harmonic phantoms") {
  ExperimentConfig c;
  c.n_max = 4;
  c.phantom = PhantomSpec::parse("harmonic 2 0");
  const Simulation s = simulate(c);
  CHECK(max_abs_diff(s.data.g, -0.5 * ScalarCoeffs::unit(4, 2, 0)) == 0.0);
  c.phantom = PhantomSpec::parse("harmonic 1 0");
  const Simulation t = simulate(c);
  CHECK(t.data.g.max_abs() == 0.0);
  CHECK(t.data.h.max_abs() > 0.5);
}

TEST_CASE("selftest API") {
  SelftestOptions o;
  o.n_max = 0;
  CHECK(run_selftest(o).passed());
  o.n_max = 6;
  const SelftestReport r = run_selftest(o);
  CHECK(r.passed());
  CHECK(r.to_json()["checks"].size() == r.checks.size());
  o.fault = "funk-multiplier";
  const auto failures = run_selftest(o).failures();
  CHECK(std::find(failures.begin(), failures.end(), "funk multiplier decay") != failures.end());
  o.fault = "nonsense";
  CHECK_THROWS_AS(run_selftest(o), std::invalid_argument);
}

TEST_CASE("CLI exit codes") {
  const fs::path d = scratch("codes");
  CHECK(run("selftest --n-max 6") == 0);
  CHECK(run("selftest --n-max 6 --inject-fault funk-multiplier") == 1);
  CHECK(run("") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("forward --n-max abc") == 2);
  CHECK(run("forward --n-max 0 --output-dir " + d.string()) == 2);
  CHECK(run("reconstruct --g-file " + (d / "missing.shcoeff").string()) == 2);
  CHECK(run("--help") == 0);
  std::ofstream(d / "bad.shcoeff") << "shcoeff v1 N_max=2\n9 9 9 9\n";
  std::ofstream(d / "h.vshcoeff") << "vshcoeff v1 N_max=2\n";
  CHECK(run("reconstruct --g-file " + (d / "bad.shcoeff").string() + " --h-file " +
            (d / "h.vshcoeff").string() + " --output-dir " + d.string()) == 2);
  std::ofstream(d / "radial.vshcoeff") << "vshcoeff v1 N_max=2\n1 1 0 1 0\n";
  CHECK(run("hodge --field " + (d / "radial.vshcoeff").string() + " --output-dir " + d.string()) ==
        2);
}

TEST_CASE("CLI forward then reconstruct") {
  const fs::path d = scratch("round_trip");
  const std::string out = " --output-dir " + d.string();
  REQUIRE(run("forward --n-max 16 --seed 7 --forward quadrature" + out) == 0);
  for (const char* f : {"g.shcoeff", "h.vshcoeff", "phantom.shcoeff", "grad.vshcoeff", "forward.json"}) {
    CHECK(fs::exists(d / f));
  }
  const std::string files = " --g-file " + (d / "g.shcoeff").string() + " --h-file " +
                            (d / "h.vshcoeff").string() + " --truth " +
                            (d / "phantom.shcoeff").string();
  REQUIRE(run("reconstruct" + files + " --max-error 1e-8" + out) == 0);
  const nlohmann::json rep = load_json(d / "report.json");
  CHECK(rep["errors"]["linf"].get<double>() <= 1e-8);
  CHECK(rep["consistent"] == true);
  CHECK(max_abs_diff(load_shcoeff(d / "f.shcoeff"), load_shcoeff(d / "phantom.shcoeff")) < 1e-10);

  // an unreachable bound is an accuracy failure
  CHECK(run("reconstruct" + files + " --max-error 0" + out) == 1);

  const fs::path e = scratch("noisy");
  const std::string out2 = " --output-dir " + e.string();
  REQUIRE(run("forward --n-max 16 --seed 7 --noise-sigma 1e-3" + out2) == 0);
  REQUIRE(run("reconstruct --truncate 8 --g-file " + (e / "g.shcoeff").string() + " --h-file " +
              (e / "h.vshcoeff").string() + " --truth " + (e / "phantom.shcoeff").string() + out2) ==
          0);
  const double err = load_json(e / "report.json")["errors"]["linf"].get<double>();
  CHECK(std::isfinite(err));
  CHECK(err > 0.0);
}

TEST_CASE("CLI hodge") {
  const fs::path d = scratch("hodge");
  const std::string out = " --output-dir " + d.string();
  REQUIRE(run("forward --n-max 12 --seed 3" + out) == 0);
  REQUIRE(run("hodge --field " + (d / "grad.vshcoeff").string() + out) == 0);
  const nlohmann::json rep = load_json(d / "report.json");
  CHECK(rep["agree"] == true);
  ScalarCoeffs truth = load_shcoeff(d / "phantom.shcoeff");
  truth(0, 0) = 0.0;
  CHECK(max_abs_diff(load_shcoeff(d / "u.shcoeff"), truth) < 1e-9);
  CHECK(load_shcoeff(d / "v.shcoeff").max_abs() < 1e-9);

  std::ofstream(d / "empty.vshcoeff") << "vshcoeff v1 N_max=3\n";
  REQUIRE(run("hodge --field " + (d / "empty.vshcoeff").string() + out) == 0);
  CHECK(load_shcoeff(d / "u.shcoeff").max_abs() == 0.0);
  CHECK(load_shcoeff(d / "v.shcoeff").max_abs() == 0.0);
}

TEST_CASE("CLI config file, overrides and reproducibility") {
  const fs::path a = scratch("repro_a"), b = scratch("repro_b");
  const fs::path cfg = a / "config.json";
  std::ofstream(cfg) << R"({"n_max": 6, "seed": 11, "phantom": "gaussian-bump 0.7 0.2 0.4"})";
  REQUIRE(run("forward --config " + cfg.string() + " --output-dir " + a.string()) == 0);
  REQUIRE(run("forward --config " + cfg.string() + " --output-dir " + b.string()) == 0);
  for (const char* f : {"g.shcoeff", "h.vshcoeff", "phantom.shcoeff"}) {
    CHECK(slurp(a / f) == slurp(b / f));
    CHECK(!slurp(a / f).empty());
  }
  REQUIRE(run("forward --config " + cfg.string() + " --n-max 4 --output-dir " + b.string()) == 0);
  CHECK(load_shcoeff(b / "g.shcoeff").band_limit() == 4);
  CHECK(load_json(b / "forward.json")["config"]["n_max"] == 4);

  std::ofstream(a / "bad.json") << R"({"n_max": 6, "colour": "blue"})";
  CHECK(run("forward --config " + (a / "bad.json").string() + " --output-dir " + a.string()) == 2);
}

TEST_CASE("CLI thread cap does not change results") {
  const fs::path a = scratch("threads_a"), b = scratch("threads_b");
  REQUIRE(run("forward --n-max 10 --forward quadrature --output-dir " + a.string()) == 0);
  const std::string cmd = std::string("FUNKSPHERE_THREADS=1 \"") + FUNKSPHERE_CLI +
                          "\" forward --n-max 10 --forward quadrature --output-dir " + b.string() +
                          " > /dev/null 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp(a / "h.vshcoeff") == slurp(b / "h.vshcoeff"));
}
