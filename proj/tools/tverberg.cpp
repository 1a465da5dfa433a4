#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tverberg/algos.hpp"
#include "tverberg/driver.hpp"
#include "tverberg/io.hpp"
#include "tverberg/verify.hpp"

using namespace tverberg;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kParse = 2, kCap = 3 };

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidSpec: return kParse;
    case ErrorCode::CapExceeded: return kCap;
    default: return kInvalid;
  }
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidSpec, "bad list entry '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate Tverberg points with verifiable certificates"};
  app.require_subcommand(1);

  std::string dist = "cube", out_path;
  std::size_t d = 2, n = 100;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("generate", "write a random or grid point set");
  gen->add_option("--dist", dist, "cube | gauss | grid")->capture_default_str();
  gen->add_option("--d", d, "dimension")->capture_default_str();
  gen->add_option("--n", n, "number of points")->capture_default_str();
  gen->add_option("--seed", seed, "mt19937_64 seed")->capture_default_str();
  gen->add_option("-o,--output", out_path, "output file (default stdout)");

  std::string input, algo = "simple", cert_path;
  RunOptions options;
  options.brute_cap = default_brute_cap();
  auto* compute = app.add_subcommand("compute", "compute a Tverberg certificate");
  compute->add_option("input", input, "points file")->required();
  compute->add_option("--algo", algo, "simple | better | ms | bootstrap | brute")->capture_default_str();
  compute->add_option("-o,--output", cert_path, "certificate file (default stdout)");
  compute->add_option("--parts", options.brute_parts, "parts for brute force (default ceil(n/(d+1)))");
  compute->add_option("--cap", options.brute_cap, "brute-force size cap")->capture_default_str();

  std::string points_path, verify_cert;
  double tol = kVerifyTol;
  auto* verify = app.add_subcommand("verify", "check a certificate against its points");
  verify->add_option("points", points_path, "points file")->required();
  verify->add_option("certificate", verify_cert, "certificate JSON")->required();
  verify->add_option("--tol", tol, "tolerance")->capture_default_str();

  std::string dims = "1,2,3,4,5,6,7", sizes = "1000", algos = "simple,better,ms,bootstrap";
  std::size_t seeds = 3;
  bool parallel = false;
  auto* bench = app.add_subcommand("bench", "depth/time table as CSV");
  bench->add_option("--dims", dims, "comma-separated dimensions")->capture_default_str();
  bench->add_option("--sizes", sizes, "comma-separated point counts")->capture_default_str();
  bench->add_option("--seeds", seeds, "seeds per cell")->capture_default_str();
  bench->add_option("--algos", algos, "comma-separated algorithms")->capture_default_str();
  bench->add_option("--dist", dist, "cube | gauss | grid")->capture_default_str();
  bench->add_flag("--parallel", parallel, "run cells concurrently");
  bench->add_option("-o,--output", out_path, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*gen) {
      const PointSet points = generate_points(parse_distribution(dist), d, n, seed);
      if (out_path.empty()) {
        write_points(std::cout, points);
      } else {
        std::ofstream out(out_path);
        write_points(out, points);
      }
      return kOk;
    }

    if (*compute) {
      const Algorithm a = parse_algorithm(algo);
      const PointSet points = read_points_file(input);
      const auto start = std::chrono::steady_clock::now();
      CertificateFile file;
      file.cert = run_algorithm(a, points, options);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      file.dimension = points.dimension();
      file.n = points.size();
      file.algorithm = to_string(a);
      if (cert_path.empty()) {
        std::cout << certificate_json(file) << '\n';
      } else {
        std::ofstream out(cert_path);
        out << certificate_json(file) << '\n';
      }
      std::fprintf(stderr, "n=%zu d=%zu algorithm=%s depth=%zu guarantee=%llu time_ms=%.3f\n", file.n,
                   file.dimension, file.algorithm.c_str(), file.cert.depth,
                   static_cast<unsigned long long>(guaranteed_depth(a, file.n, file.dimension, options)), ms);
      return kOk;
    }

    if (*verify) {
      const PointSet points = read_points_file(points_path);
      const CertificateFile file = read_certificate_file(verify_cert);
      const ValidationReport report = verify_certificate(points, file.cert, tol);
      bool header_ok = file.dimension == points.dimension() && file.n == points.size();
      if (!header_ok)
        std::printf("header: FAIL (certificate says d=%zu n=%zu, points have d=%zu n=%zu)\n", file.dimension, file.n,
                    points.dimension(), points.size());
      for (const auto& c : report.checks)
        std::printf("(%c) %s: %s%s%s\n", c.label, c.name.c_str(), c.passed ? "ok" : "FAIL",
                    c.detail.empty() ? "" : " - ", c.detail.c_str());
      const bool ok = report.valid() && header_ok;
      std::printf("%s\n", ok ? "valid" : "invalid");
      return ok ? kOk : kInvalid;
    }

    if (*bench) {
      BenchConfig config;
      config.dims = parse_list(dims);
      config.sizes = parse_list(sizes);
      config.seeds = seeds;
      config.distribution = parse_distribution(dist);
      config.options = options;
      config.parallel = parallel;
      std::stringstream ss(algos);
      std::string item;
      while (std::getline(ss, item, ',')) config.algorithms.push_back(parse_algorithm(item));
      const auto rows = run_bench(config);
      if (out_path.empty()) {
        write_bench_csv(std::cout, rows);
      } else {
        std::ofstream out(out_path);
        write_bench_csv(out, rows);
      }
      return kOk;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  }
  return kOk;
}
