#include "funksphere/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "funksphere/errors.hpp"

namespace funksphere {

namespace {

double parse_double(const std::string& token, int line) {
  double x = 0.0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, x);
  if (ec != std::errc() || ptr != end) {
    throw FormatError("line " + std::to_string(line) + ": bad number '" + token + "'");
  }
  return x;
}

int parse_int(const std::string& token, int line) {
  int x = 0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, x);
  if (ec != std::errc() || ptr != end) {
    throw FormatError("line " + std::to_string(line) + ": bad integer '" + token + "'");
  }
  return x;
}

int read_header(std::istream& in, const std::string& magic) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty " + magic + " file");
  std::istringstream words(line);
  std::string tag, version, limit;
  words >> tag >> version >> limit;
  const std::string prefix = "N_max=";
  if (tag != magic || version != "v1" || limit.rfind(prefix, 0) != 0) {
    throw FormatError("expected header '" + magic + " v1 N_max=<n>', got '" + line + "'");
  }
  const int n = parse_int(limit.substr(prefix.size()), 1);
  if (n < 0) throw FormatError("negative N_max in header");
  return n;
}

void write_entry(std::ostream& out, Complex z) {
  // -0.0 is written as 0 so that files are canonical
  out << format_double(z.real() == 0.0 ? 0.0 : z.real()) << ' '
      << format_double(z.imag() == 0.0 ? 0.0 : z.imag()) << '\n';
}

// Reads records of `fields` integers followed by re and im.
template <typename Store>
void read_records(std::istream& in, int fields, Store&& store) {
  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string t; words >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (static_cast<int>(tokens.size()) != fields + 2) {
      throw FormatError("line " + std::to_string(lineno) + ": expected " +
                        std::to_string(fields + 2) + " fields");
    }
    std::vector<int> ints;
    for (int i = 0; i < fields; ++i) ints.push_back(parse_int(tokens[i], lineno));
    const Complex z{parse_double(tokens[fields], lineno), parse_double(tokens[fields + 1], lineno)};
    store(ints, z, lineno);
  }
}

void check_index(int L, int n, int m, int lineno) {
  if (n < 0 || n > L || m < -n || m > n) {
    throw FormatError("line " + std::to_string(lineno) + ": index (" + std::to_string(n) + ", " +
                      std::to_string(m) + ") outside band limit " + std::to_string(L));
  }
}

template <typename T, typename Read>
T load(const std::filesystem::path& path, Read&& read) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  return read(in);
}

template <typename Write>
void save(const std::filesystem::path& path, Write&& write) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  write(out);
  if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_shcoeff(std::ostream& out, const ScalarCoeffs& c) {
  out << "shcoeff v1 N_max=" << c.band_limit() << '\n';
  for (int n = 0; n <= c.band_limit(); ++n) {
    for (int m = -n; m <= n; ++m) {
      const Complex z = c(n, m);
      if (z == Complex{}) continue;
      out << n << ' ' << m << ' ';
      write_entry(out, z);
    }
  }
}

ScalarCoeffs read_shcoeff(std::istream& in) {
  const int L = read_header(in, "shcoeff");
  ScalarCoeffs c(L);
  read_records(in, 2, [&](const std::vector<int>& idx, Complex z, int lineno) {
    check_index(L, idx[0], idx[1], lineno);
    c(idx[0], idx[1]) = z;
  });
  return c;
}

void write_vshcoeff(std::ostream& out, const VectorCoeffs& v) {
  out << "vshcoeff v1 N_max=" << v.band_limit() << '\n';
  for (int k = 1; k <= 3; ++k) {
    for (int n = k == 1 ? 0 : 1; n <= v.band_limit(); ++n) {
      for (int m = -n; m <= n; ++m) {
        const Complex z = v(k, n, m);
        if (z == Complex{}) continue;
        out << k << ' ' << n << ' ' << m << ' ';
        write_entry(out, z);
      }
    }
  }
}

VectorCoeffs read_vshcoeff(std::istream& in) {
  const int L = read_header(in, "vshcoeff");
  VectorCoeffs v(L);
  read_records(in, 3, [&](const std::vector<int>& idx, Complex z, int lineno) {
    const int k = idx[0];
    if (k < 1 || k > 3) throw FormatError("line " + std::to_string(lineno) + ": bad channel");
    check_index(L, idx[1], idx[2], lineno);
    if (k != 1 && idx[1] == 0) {
      throw FormatError("line " + std::to_string(lineno) + ": tangential channels start at N=1");
    }
    v(k, idx[1], idx[2]) = z;
  });
  return v;
}

void save_shcoeff(const std::filesystem::path& path, const ScalarCoeffs& c) {
  save(path, [&](std::ostream& out) { write_shcoeff(out, c); });
}

ScalarCoeffs load_shcoeff(const std::filesystem::path& path) {
  return load<ScalarCoeffs>(path, [](std::istream& in) { return read_shcoeff(in); });
}

void save_vshcoeff(const std::filesystem::path& path, const VectorCoeffs& v) {
  save(path, [&](std::ostream& out) { write_vshcoeff(out, v); });
}

VectorCoeffs load_vshcoeff(const std::filesystem::path& path) {
  return load<VectorCoeffs>(path, [](std::istream& in) { return read_vshcoeff(in); });
}

nlohmann::json grid_to_json(const SphericalGrid& g) {
  nlohmann::json j;
  j["n_theta"] = g.n_theta();
  j["n_phi"] = g.n_phi();
  j["phi_step"] = g.phi_step();
  j["theta_nodes"] = std::vector<double>(g.theta().begin(), g.theta().end());
  j["cos_theta"] = std::vector<double>(g.cos_theta().begin(), g.cos_theta().end());
  j["weights"] = std::vector<double>(g.weights().begin(), g.weights().end());
  return j;
}

nlohmann::json field_to_json(const ScalarField& f) {
  nlohmann::json j;
  j["grid"] = grid_to_json(f.grid);
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (Eigen::Index r = 0; r < f.values.rows(); ++r) {
    std::vector<double> a, b;
    for (Eigen::Index c = 0; c < f.values.cols(); ++c) {
      a.push_back(f.values(r, c).real());
      b.push_back(f.values(r, c).imag());
    }
    re.push_back(a);
    im.push_back(b);
  }
  j["re"] = re;
  j["im"] = im;
  return j;
}

namespace {

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::even_only: return "even";
    case Parity::odd_only: return "odd";
    case Parity::all: break;
  }
  return "all";
}

}  // namespace

nlohmann::json multiplier_to_json(const MultiplierSpec& m) {
  return {{"parity", parity_name(m.parity)},
          {"lambda", std::vector<double>(m.lambda.begin(), m.lambda.end())}};
}

MultiplierSpec multiplier_from_json(const nlohmann::json& j) {
  MultiplierSpec m;
  try {
    const std::string p = j.at("parity").get<std::string>();
    if (p == "even") m.parity = Parity::even_only;
    else if (p == "odd") m.parity = Parity::odd_only;
    else if (p == "all") m.parity = Parity::all;
    else throw FormatError("unknown parity '" + p + "'");
    const auto lambda = j.at("lambda").get<std::vector<double>>();
    m.lambda = Eigen::Map<const Eigen::VectorXd>(lambda.data(), static_cast<Eigen::Index>(lambda.size()));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("multiplier spec: ") + e.what());
  }
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return m;
}

}  // namespace funksphere
