#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tverberg/core.hpp"
#include "tverberg/io.hpp"

namespace tverberg {

enum class Algorithm { simple, better, ms, bootstrap, brute };

Algorithm parse_algorithm(const std::string& name);  ///< throws InvalidSpec
const char* to_string(Algorithm algo);

struct RunOptions {
  std::size_t brute_cap = 12;
  /// Parts requested from brute force; 0 means ceil(n / (d+1)).
  std::size_t brute_parts = 0;
};

TverbergCertificate run_algorithm(Algorithm algo, const PointSet& points, const RunOptions& options = {});

/// Depth the algorithm promises on n points in dimension d.
std::uint64_t guaranteed_depth(Algorithm algo, std::size_t n, std::size_t d, const RunOptions& options = {});

struct BenchRow {
  std::string algorithm;
  std::size_t d = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  std::uint64_t guarantee = 0;
  double ratio = 0.0;
  double wall_ms = 0.0;
  std::uint64_t simple_bound = 0;     ///< ceil(n / 2^d)
  std::uint64_t ms_bound = 0;         ///< ceil(n / 2(d+1)^2)
  std::uint64_t bootstrap_bound = 0;  ///< ceil(n / 4(d+1)^3)
  bool valid = false;
};

struct BenchConfig {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> sizes;
  std::size_t seeds = 1;
  std::uint64_t first_seed = 1;
  std::vector<Algorithm> algorithms;
  Distribution distribution = Distribution::cube;
  RunOptions options;
  /// Independent cells run on OpenMP threads.
  bool parallel = false;
};

/// Runs every (algorithm, d, n, seed) cell and returns rows sorted by
/// (algorithm, d, n, seed). Cells an algorithm cannot handle are skipped.
std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace tverberg
