#pragma once

// Experiment configuration shared by the CLI subcommands.

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace funksphere {

struct PhantomSpec {
  enum class Kind { random_bandlimited, harmonic, gaussian_bump };
  Kind kind = Kind::random_bandlimited;
  int degree = 0;
  int order = 0;
  double theta0 = 0.0;
  double phi0 = 0.0;
  double width = 0.5;

  /// "random-bandlimited", "harmonic N l" or "gaussian-bump theta0 phi0 width".
  static PhantomSpec parse(const std::string& text);
  std::string to_string() const;
};

enum class ForwardMode { spectral, quadrature };

struct ExperimentConfig {
  int n_max = 16;
  std::uint64_t seed = 1;
  PhantomSpec phantom;
  double noise_sigma = 0.0;
  ForwardMode forward = ForwardMode::spectral;
  std::filesystem::path output_dir = ".";
  /// Reconstruction cutoff degree; negative keeps every degree.
  int truncate = -1;

  /// Throws std::invalid_argument naming the offending field.
  void validate(int min_n_max = 1) const;
};

/// Missing keys keep their defaults; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& c);
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace funksphere
