#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "tverberg/core.hpp"

namespace tverberg {

/// One point per line, comma-separated coordinates, '#' starts a comment.
/// The first point fixes the dimension. Throws ParseError.
PointSet read_points(std::istream& in);
PointSet read_points_file(const std::string& path);
void write_points(std::ostream& out, const PointSet& points);

struct CertificateFile {
  std::size_t dimension = 0;
  std::size_t n = 0;
  std::string algorithm;
  TverbergCertificate cert;
};

/// {"dimension", "n", "algorithm", "depth", "pruned", "center", "parts": [{"indices", "weights"}]}
std::string certificate_json(const CertificateFile& file, int indent = 2);
CertificateFile parse_certificate(std::istream& in);
CertificateFile read_certificate_file(const std::string& path);

enum class Distribution { cube, gauss, grid };

Distribution parse_distribution(const std::string& name);  ///< throws InvalidSpec
const char* to_string(Distribution dist);

/**
 * Deterministic datasets. cube: uniform on [0,1]^d; gauss: standard normal
 * via Box-Muller; both draw from std::mt19937_64(seed), turning each 64-bit
 * output x into (x >> 11) * 2^-53. grid: the first n points of {1..m}^d,
 * m = ceil(n^(1/d)), in lexicographic order (seed unused).
 */
PointSet generate_points(Distribution dist, std::size_t d, std::size_t n, std::uint64_t seed);

}  // namespace tverberg
