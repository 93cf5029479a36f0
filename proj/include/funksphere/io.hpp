#pragma once

// Plain-text coefficient records and JSON views of grids, fields and multipliers.
//
//   shcoeff v1 N_max=<n>        vshcoeff v1 N_max=<n>
//   N l re im                   channel N l re im
//
// Only nonzero entries are written. Numbers use the shortest representation
// that parses back to the same double, so write then read is bit-exact.

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "funksphere/coeffs.hpp"
#include "funksphere/grid.hpp"
#include "funksphere/zonal.hpp"

namespace funksphere {

void write_shcoeff(std::ostream& out, const ScalarCoeffs& c);
ScalarCoeffs read_shcoeff(std::istream& in);
void write_vshcoeff(std::ostream& out, const VectorCoeffs& v);
VectorCoeffs read_vshcoeff(std::istream& in);

/// File versions; failures to open throw std::ios_base::failure, bad content FormatError.
void save_shcoeff(const std::filesystem::path& path, const ScalarCoeffs& c);
ScalarCoeffs load_shcoeff(const std::filesystem::path& path);
void save_vshcoeff(const std::filesystem::path& path, const VectorCoeffs& v);
VectorCoeffs load_vshcoeff(const std::filesystem::path& path);

nlohmann::json grid_to_json(const SphericalGrid& g);
/// Values as separate "re" and "im" row arrays next to the grid.
nlohmann::json field_to_json(const ScalarField& f);

nlohmann::json multiplier_to_json(const MultiplierSpec& m);
/// Throws FormatError on a malformed document.
MultiplierSpec multiplier_from_json(const nlohmann::json& j);

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

}  // namespace funksphere
