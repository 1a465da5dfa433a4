#include "tverberg/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <ostream>
#include <tuple>

#include "tverberg/algos.hpp"
#include "tverberg/bounds.hpp"
#include "tverberg/dimension_reduction.hpp"
#include "tverberg/miller_sheehy.hpp"
#include "tverberg/verify.hpp"

namespace tverberg {

Algorithm parse_algorithm(const std::string& name) {
  if (name == "simple") return Algorithm::simple;
  if (name == "better") return Algorithm::better;
  if (name == "ms") return Algorithm::ms;
  if (name == "bootstrap") return Algorithm::bootstrap;
  if (name == "brute") return Algorithm::brute;
  throw Error(ErrorCode::InvalidSpec, "unknown algorithm '" + name + "'");
}

const char* to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::simple: return "simple";
    case Algorithm::better: return "better";
    case Algorithm::ms: return "ms";
    case Algorithm::bootstrap: return "bootstrap";
    case Algorithm::brute: return "brute";
  }
  return "unknown";
}

TverbergCertificate run_algorithm(Algorithm algo, const PointSet& points, const RunOptions& options) {
  switch (algo) {
    case Algorithm::simple: return simple_tverberg(points);
    case Algorithm::better: return better_tverberg(points, SmallSolver::automatic, options.brute_cap);
    case Algorithm::ms: return ms_tverberg(points);
    case Algorithm::bootstrap: return bootstrap_tverberg(points);
    case Algorithm::brute: {
      const std::size_t r = options.brute_parts ? options.brute_parts
                                                : bounds::tverberg(points.size(), static_cast<unsigned>(points.dimension()));
      return brute_force_tverberg(points, r, options.brute_cap);
    }
  }
  throw Error(ErrorCode::InvalidSpec, "unknown algorithm");
}

std::uint64_t guaranteed_depth(Algorithm algo, std::size_t n, std::size_t d, const RunOptions& options) {
  const auto dd = static_cast<unsigned>(d);
  switch (algo) {
    case Algorithm::simple: return bounds::simple(n, dd);
    case Algorithm::better: {
      const bool brute_small = d <= 2 && options.brute_cap >= bounds::ipow(2, dd + 1);
      return brute_small ? bounds::miller_sheehy(n, dd) : bounds::bootstrap(n, dd);
    }
    case Algorithm::ms: return bounds::miller_sheehy(n, dd);
    case Algorithm::bootstrap: return bounds::bootstrap(n, dd);
    case Algorithm::brute: return options.brute_parts ? options.brute_parts : bounds::tverberg(n, dd);
  }
  return 0;
}

namespace {

BenchRow run_cell(Algorithm algo, std::size_t d, std::size_t n, std::uint64_t seed, const BenchConfig& config) {
  BenchRow row;
  row.algorithm = to_string(algo);
  row.d = d;
  row.n = n;
  row.seed = seed;
  row.guarantee = guaranteed_depth(algo, n, d, config.options);
  row.simple_bound = bounds::simple(n, static_cast<unsigned>(d));
  row.ms_bound = bounds::miller_sheehy(n, static_cast<unsigned>(d));
  row.bootstrap_bound = bounds::bootstrap(n, static_cast<unsigned>(d));

  const PointSet points = generate_points(config.distribution, d, n, seed);
  const auto start = std::chrono::steady_clock::now();
  const TverbergCertificate cert = run_algorithm(algo, points, config.options);
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  row.depth = cert.depth;
  row.ratio = row.guarantee ? static_cast<double>(row.depth) / static_cast<double>(row.guarantee) : 0.0;
  row.valid = verify_certificate(points, cert).valid();
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  struct Cell {
    Algorithm algo;
    std::size_t d, n;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (Algorithm algo : config.algorithms)
    for (std::size_t d : config.dims)
      for (std::size_t n : config.sizes) {
        if (algo == Algorithm::brute && n > config.options.brute_cap) continue;
        for (std::size_t s = 0; s < config.seeds; ++s) cells.push_back({algo, d, n, config.first_seed + s});
      }

  std::vector<BenchRow> rows(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  const auto count = static_cast<std::ptrdiff_t>(cells.size());
#if defined(TVERBERG_USE_OPENMP)
#pragma omp parallel for schedule(dynamic) if (config.parallel)
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      const auto& c = cells[static_cast<std::size_t>(i)];
      rows[static_cast<std::size_t>(i)] = run_cell(c.algo, c.d, c.n, c.seed, config);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.algorithm, a.d, a.n, a.seed) < std::tie(b.algorithm, b.d, b.n, b.seed);
  });
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "algorithm,d,n,seed,depth,guarantee,ratio,wall_ms,n_over_2_pow_d,n_over_2_d1_sq,n_over_4_d1_cube,valid\n";
  char buf[64];
  for (const auto& r : rows) {
    out << r.algorithm << ',' << r.d << ',' << r.n << ',' << r.seed << ',' << r.depth << ',' << r.guarantee << ',';
    std::snprintf(buf, sizeof buf, "%.4f,%.3f", r.ratio, r.wall_ms);
    out << buf << ',' << r.simple_bound << ',' << r.ms_bound << ',' << r.bootstrap_bound << ','
        << (r.valid ? 1 : 0) << '\n';
  }
}

}  // namespace tverberg
