#include "funksphere/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "funksphere/errors.hpp"

namespace funksphere {

PhantomSpec PhantomSpec::parse(const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  PhantomSpec p;
  auto fail = [&] { throw std::invalid_argument("bad phantom '" + text + "'"); };
  if (kind == "random-bandlimited") {
    p.kind = Kind::random_bandlimited;
  } else if (kind == "harmonic") {
    p.kind = Kind::harmonic;
    if (!(in >> p.degree >> p.order)) fail();
    if (p.degree < 0 || p.order < -p.degree || p.order > p.degree) fail();
  } else if (kind == "gaussian-bump") {
    p.kind = Kind::gaussian_bump;
    if (!(in >> p.theta0 >> p.phi0 >> p.width) || !(p.width > 0.0)) fail();
  } else {
    fail();
  }
  std::string rest;
  if (in >> rest) fail();
  return p;
}

std::string PhantomSpec::to_string() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind) {
    case Kind::random_bandlimited: out << "random-bandlimited"; break;
    case Kind::harmonic: out << "harmonic " << degree << ' ' << order; break;
    case Kind::gaussian_bump:
      out << "gaussian-bump " << theta0 << ' ' << phi0 << ' ' << width;
      break;
  }
  return out.str();
}

void ExperimentConfig::validate(int min_n_max) const {
  if (n_max < min_n_max) {
    throw std::invalid_argument("n_max must be at least " + std::to_string(min_n_max));
  }
  if (!(noise_sigma >= 0.0)) throw std::invalid_argument("noise_sigma must be >= 0");
  if (phantom.kind == PhantomSpec::Kind::harmonic && phantom.degree > n_max) {
    throw std::invalid_argument("phantom degree exceeds n_max");
  }
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("config must be a JSON object");
  ExperimentConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n_max") c.n_max = value.get<int>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "phantom") c.phantom = PhantomSpec::parse(value.get<std::string>());
      else if (key == "noise_sigma") c.noise_sigma = value.get<double>();
      else if (key == "output_dir") c.output_dir = value.get<std::string>();
      else if (key == "truncate") c.truncate = value.get<int>();
      else if (key == "forward") {
        const auto mode = value.get<std::string>();
        if (mode == "spectral") c.forward = ForwardMode::spectral;
        else if (mode == "quadrature") c.forward = ForwardMode::quadrature;
        else throw FormatError("forward must be 'spectral' or 'quadrature'");
      } else {
        throw FormatError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  return c;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  return {{"n_max", c.n_max},
          {"seed", c.seed},
          {"phantom", c.phantom.to_string()},
          {"noise_sigma", c.noise_sigma},
          {"forward", c.forward == ForwardMode::spectral ? "spectral" : "quadrature"},
          {"output_dir", c.output_dir.string()},
          {"truncate", c.truncate}};
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace funksphere
