#include "tverberg/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace tverberg {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

}  // namespace

PointSet read_points(std::istream& in) {
  std::vector<double> coords;
  std::size_t dim = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    std::size_t count = 0;
    while (true) {
      const auto comma = view.find(',');
      const std::string_view field = trim(view.substr(0, comma));
      double v = 0.0;
      const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || res.ec != std::errc() || res.ptr != field.data() + field.size())
        parse_fail(lineno, "bad coordinate '" + std::string(field) + "'");
      if (!std::isfinite(v)) parse_fail(lineno, "non-finite coordinate");
      coords.push_back(v);
      ++count;
      if (comma == std::string_view::npos) break;
      view = view.substr(comma + 1);
    }
    if (dim == 0) dim = count;
    if (count != dim)
      parse_fail(lineno, "expected " + std::to_string(dim) + " coordinates, found " + std::to_string(count));
  }
  if (dim == 0) throw Error(ErrorCode::ParseError, "no points in input");
  return PointSet(dim, std::move(coords));
}

PointSet read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_points(in);
}

void write_points(std::ostream& out, const PointSet& points) {
  char buf[32];
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points[i];
    for (std::size_t k = 0; k < p.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", p[k]);
      if (k) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

std::string certificate_json(const CertificateFile& file, int indent) {
  nlohmann::ordered_json j;
  j["dimension"] = file.dimension;
  j["n"] = file.n;
  j["algorithm"] = file.algorithm;
  j["depth"] = file.cert.depth;
  j["pruned"] = file.cert.pruned;
  j["center"] = file.cert.center;
  auto parts = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < file.cert.part_count(); ++i) {
    const auto p = file.cert.part(i);
    nlohmann::ordered_json part;
    part["indices"] = std::vector<PointId>(p.ids.begin(), p.ids.end());
    part["weights"] = std::vector<double>(p.weights.begin(), p.weights.end());
    parts.push_back(std::move(part));
  }
  j["parts"] = std::move(parts);
  return j.dump(indent);
}

CertificateFile parse_certificate(std::istream& in) {
  CertificateFile file;
  try {
    const auto j = nlohmann::json::parse(in);
    file.dimension = j.at("dimension").get<std::size_t>();
    file.n = j.at("n").get<std::size_t>();
    file.algorithm = j.at("algorithm").get<std::string>();
    file.cert.center = j.at("center").get<std::vector<double>>();
    for (const auto& part : j.at("parts")) {
      const auto ids = part.at("indices").get<std::vector<PointId>>();
      const auto ws = part.at("weights").get<std::vector<double>>();
      if (ids.size() != ws.size()) throw Error(ErrorCode::ParseError, "indices and weights differ in length");
      file.cert.add_part(ids, ws);
    }
    file.cert.depth = j.at("depth").get<std::size_t>();
    file.cert.pruned = j.at("pruned").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("certificate: ") + e.what());
  }
  return file;
}

CertificateFile read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return parse_certificate(in);
}

Distribution parse_distribution(const std::string& name) {
  if (name == "cube") return Distribution::cube;
  if (name == "gauss" || name == "gaussian") return Distribution::gauss;
  if (name == "grid") return Distribution::grid;
  throw Error(ErrorCode::InvalidSpec, "unknown distribution '" + name + "'");
}

const char* to_string(Distribution dist) {
  switch (dist) {
    case Distribution::cube: return "cube";
    case Distribution::gauss: return "gauss";
    case Distribution::grid: return "grid";
  }
  return "unknown";
}

PointSet generate_points(Distribution dist, std::size_t d, std::size_t n, std::uint64_t seed) {
  if (d == 0 || n == 0) throw Error(ErrorCode::InvalidSpec, "generation needs d >= 1 and n >= 1");
  std::vector<double> coords(d * n);
  std::mt19937_64 gen(seed);
  switch (dist) {
    case Distribution::cube:
      for (auto& c : coords) c = uniform01(gen);
      break;
    case Distribution::gauss:
      for (std::size_t i = 0; i < coords.size(); i += 2) {
        const double u1 = 1.0 - uniform01(gen);  // (0, 1]
        const double u2 = uniform01(gen);
        const double radius = std::sqrt(-2.0 * std::log(u1));
        coords[i] = radius * std::cos(2.0 * std::numbers::pi * u2);
        if (i + 1 < coords.size()) coords[i + 1] = radius * std::sin(2.0 * std::numbers::pi * u2);
      }
      break;
    case Distribution::grid: {
      std::size_t m = 1;
      auto fits = [&](std::size_t side) {
        std::size_t cap = 1;
        for (std::size_t k = 0; k < d; ++k) {
          if (cap >= n) return true;
          cap *= side;
        }
        return cap >= n;
      };
      while (!fits(m)) ++m;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t rest = i;
        for (std::size_t k = d; k-- > 0;) {
          coords[i * d + k] = static_cast<double>(rest % m + 1);
          rest /= m;
        }
      }
      break;
    }
  }
  return PointSet(d, std::move(coords));
}

}  // namespace tverberg
