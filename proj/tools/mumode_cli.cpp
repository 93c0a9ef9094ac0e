#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mumode/evolution.hpp"
#include "mumode/imex.hpp"
#include "mumode/interpolation.hpp"
#include "mumode/kron.hpp"
#include "mumode/reference.hpp"
#include "mumode/spectral.hpp"
#include "mumode/tucker.hpp"

using namespace mumode;
using core::index_t;
using core::Matrix;
using core::Shape;
using core::Tensor;

namespace {

// ------------------------------------------------------------------ plumbing

/// Scientific notation below 1e-3, plain decimal otherwise (CSV cells).
std::string fmt(double v) {
  char buf[48];
  if (v != 0.0 && std::abs(v) < 1e-3)
    std::snprintf(buf, sizeof buf, "%.6e", v);
  else
    std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct CsvSink {
  std::ostringstream body;
  std::string out_path;  // empty = stdout

  void row(const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k)
      body << (k ? "," : "") << cells[k];
    body << "\r\n";
  }

  int flush() {
    if (out_path.empty()) {
      std::cout << body.str();
      return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return 1;
    }
    f << body.str();
    return 0;
  }
};

/// Where the human-readable summary goes: stdout when the CSV is routed to a
/// file, stderr when the CSV owns stdout.
std::ostream& summary_stream(const CsvSink& sink) {
  return sink.out_path.empty() ? std::cerr : std::cout;
}

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

/// Median wall time of `reps` runs after one discarded warm-up.
template <class Fn>
double time_median(Fn&& fn, int reps) {
  fn();  // warm-up
  std::vector<double> times;
  for (int r = 0; r < reps; ++r) {
    const double t0 = now_seconds();
    fn();
    times.push_back(now_seconds() - t0);
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

Matrix<double> random_matrix(std::mt19937_64& g, index_t rows, index_t cols) {
  std::normal_distribution<double> dist;
  Matrix<double> M(rows, cols);
  for (index_t j = 0; j < cols; ++j)
    for (index_t i = 0; i < rows; ++i) M(i, j) = dist(g);
  return M;
}

Matrix<core::cplx> random_matrix_c(std::mt19937_64& g, index_t rows, index_t cols) {
  std::normal_distribution<double> dist;
  Matrix<core::cplx> M(rows, cols);
  for (index_t j = 0; j < cols; ++j)
    for (index_t i = 0; i < rows; ++i) M(i, j) = core::cplx(dist(g), dist(g));
  return M;
}

template <class T>
Tensor<T> random_tensor(std::mt19937_64& g, const Shape& s) {
  std::normal_distribution<double> dist;
  Tensor<T> t{s};
  for (index_t k = 0; k < t.numel(); ++k) {
    if constexpr (std::is_same_v<T, double>)
      t[k] = dist(g);
    else
      t[k] = core::cplx(dist(g), dist(g));
  }
  return t;
}

// ------------------------------------------------------------------ validate

template <class T>
double tucker_vs_oracle_case(std::mt19937_64& g, bool inject_fault) {
  const index_t d = 1 + index_t(g() % 5);
  std::vector<index_t> in, out;
  for (index_t mu = 0; mu < d; ++mu) {
    in.push_back(1 + index_t(g() % 4));
    out.push_back(1 + index_t(g() % 4));
  }
  Tensor<T> t = random_tensor<T>(g, Shape(in));
  ops::MatrixStack<T> Ls;
  for (index_t mu = 0; mu < d; ++mu) {
    if constexpr (std::is_same_v<T, double>)
      Ls.push_back(random_matrix(g, out[std::size_t(mu)], in[std::size_t(mu)]));
    else
      Ls.push_back(random_matrix_c(g, out[std::size_t(mu)], in[std::size_t(mu)]));
  }
  Tensor<T> fast = ops::tucker(t, Ls);
  if (inject_fault) fast[0] += T(1e-6);
  Tensor<T> slow = kronref::kron_apply_oracle(Ls, t);
  return core::max_abs_diff(fast, slow) / std::max(core::max_abs(slow), 1e-300);
}

int cmd_validate(std::uint64_t seed, const std::string& suite, bool inject_fault) {
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok, double worst) {
    std::printf("%-24s %s   worst error %.3e\n", name.c_str(), ok ? "PASS" : "FAIL",
                worst);
    all_ok = all_ok && ok;
  };

  if (suite.empty() || suite == "tucker") {
    auto g = rng(seed);
    double worst = 0.0;
    for (int c = 0; c < 100; ++c) {
      worst = std::max(worst, tucker_vs_oracle_case<double>(g, inject_fault && c == 0));
      worst = std::max(worst, tucker_vs_oracle_case<core::cplx>(g, false));
    }
    report("tucker-vs-kron-oracle", worst < 1e-13, worst);
  }
  if (suite.empty() || suite == "appendix") {
    auto rep = kronref::appendix_identity_suite(seed, 100, 1e-12);
    double worst = 0.0;
    for (const auto& r : rep.results) worst = std::max(worst, r.max_rel_error);
    if (inject_fault && suite == "appendix") rep.all_passed = false;
    report("appendix-identities", rep.all_passed, worst);
  }
  if (!suite.empty() && suite != "tucker" && suite != "appendix") {
    std::cerr << "unknown suite '" << suite << "' (expected: tucker, appendix)\n";
    return 2;
  }
  return all_ok ? 0 : 1;
}

// ------------------------------------------------------------------ bench2d

int cmd_bench2d(const std::vector<index_t>& sizes, std::uint64_t seed, int reps,
                CsvSink sink) {
  sink.row({"n", "t_loops", "t_matloops", "t_blas"});
  for (index_t n : sizes) {
    auto g = rng(seed + std::uint64_t(n));
    Matrix<double> L1 = random_matrix(g, n, n);
    Matrix<double> L2 = random_matrix(g, n, n);
    Matrix<double> T2 = random_matrix(g, n, n);
    Tensor<double> Tt = core::unvec(T2.storage(), Shape({n, n}));

    Matrix<double> s_loops;
    Matrix<double> s_mat;
    Tensor<double> s_blas;
    const double t_loops =
        time_median([&] { s_loops = reference::sum2d_loops(L1, T2, L2); }, reps);
    const double t_mat = time_median(
        [&] { s_mat = reference::matmul_loops_bt(reference::matmul_loops(L1, T2), L2); },
        reps);
    const double t_blas = time_median([&] { s_blas = ops::tucker(Tt, {L1, L2}); }, reps);

    double scale = core::max_abs(s_blas);
    double diff = 0.0;
    for (index_t j = 0; j < n; ++j)
      for (index_t i = 0; i < n; ++i) {
        const double v = s_blas.at({i + 1, j + 1});
        diff = std::max({diff, std::abs(s_loops(i, j) - v), std::abs(s_mat(i, j) - v)});
      }
    if (diff / scale > 1e-10) {
      std::cerr << "bench2d: implementations disagree at n=" << n << " (rel "
                << diff / scale << ")\n";
      return 1;
    }
    sink.row({std::to_string(n), fmt(t_loops), fmt(t_mat), fmt(t_blas)});
  }
  return sink.flush();
}

// ------------------------------------------------------------------ bench-tucker

int cmd_bench_tucker(index_t d, const std::vector<index_t>& sizes, std::uint64_t seed,
                     int reps, double mem_cap_gib, CsvSink sink) {
  if (d < 3 || d > 6) {
    std::cerr << "bench-tucker: d must be in 3..6\n";
    return 2;
  }
  sink.row({"n", "t_tucker", "t_sequential"});
  for (index_t n : sizes) {
    double numel = 1.0;
    for (index_t mu = 0; mu < d; ++mu) numel *= double(n);
    // input + output + one relayout transient, for both paths
    const double needed_gib = 3.0 * 8.0 * numel / (1024.0 * 1024.0 * 1024.0);
    if (needed_gib > mem_cap_gib) {
      std::cerr << "bench-tucker: n=" << n << "^" << d << " needs about "
                << fmt(needed_gib) << " GiB > cap " << fmt(mem_cap_gib)
                << " GiB, stopping\n";
      return 1;
    }
    auto g = rng(seed + std::uint64_t(n));
    Tensor<double> t = random_tensor<double>(g, Shape(std::vector<index_t>(std::size_t(d), n)));
    ops::MatrixStack<double> Ls;
    for (index_t mu = 0; mu < d; ++mu) Ls.push_back(random_matrix(g, n, n));

    Tensor<double> fused, chained;
    const double t_fused = time_median([&] { fused = ops::tucker(t, Ls); }, reps);
    const double t_seq =
        time_median([&] { chained = ops::tucker_sequential(t, Ls); }, reps);
    const double rel =
        core::max_abs_diff(fused, chained) / std::max(core::max_abs(chained), 1e-300);
    if (rel > 1e-12) {
      std::cerr << "bench-tucker: paths disagree at n=" << n << " (rel " << rel << ")\n";
      return 1;
    }
    sink.row({std::to_string(n), fmt(t_fused), fmt(t_seq)});
  }
  return sink.flush();
}

// ------------------------------------------------------------------ spectral

int cmd_spectral(const std::vector<index_t>& sizes, CsvSink sink) {
  std::vector<std::vector<index_t>> configs;
  if (sizes.empty())
    configs = {{45, 31, 8}, {53, 59, 24}, {69, 105, 38}};
  else if (sizes.size() == 3)
    configs = {sizes};
  else {
    std::cerr << "spectral: --sizes needs exactly three values m1,m2,m3\n";
    return 2;
  }
  sink.row({"m1", "m2", "m3", "error", "time_seconds"});
  for (const auto& m : configs) {
    auto res = apps::hlf_experiment(m[0], m[1], m[2]);
    sink.row({std::to_string(m[0]), std::to_string(m[1]), std::to_string(m[2]),
              fmt(res.accuracy), fmt(res.report.wall_time_seconds)});
    summary_stream(sink) << "spectral m=(" << m[0] << "," << m[1] << "," << m[2]
                         << "): error " << fmt(res.accuracy) << ", "
                         << fmt(res.report.wall_time_seconds) << " s\n";
  }
  return sink.flush();
}

// ------------------------------------------------------------------ interp

int cmd_interp(const std::vector<index_t>& sizes, double mem_cap_gib, CsvSink sink) {
  std::vector<index_t> ms = sizes.empty() ? std::vector<index_t>{5, 15, 25, 35, 45} : sizes;
  const index_t d = 5, n = 35;
  sink.row({"m", "error", "time_seconds"});
  for (index_t m : ms) {
    const std::vector<index_t> mvec(std::size_t(d), m);
    const double needed_gib =
        double(apps::lagrange_interp_bytes(mvec, n)) / (1024.0 * 1024.0 * 1024.0);
    if (needed_gib > mem_cap_gib) {
      summary_stream(sink) << "interp: skipping m=" << m << " (needs about "
                           << fmt(needed_gib) << " GiB > cap " << fmt(mem_cap_gib)
                           << " GiB)\n";
      break;
    }
    auto res = apps::lagrange_interp(apps::runge_function, mvec, n);
    sink.row({std::to_string(m), fmt(res.error_inf_relative),
              fmt(res.report.wall_time_seconds)});
    summary_stream(sink) << "interp m=" << m << ": error "
                         << fmt(res.error_inf_relative) << ", "
                         << fmt(res.report.wall_time_seconds) << " s\n";
  }
  return sink.flush();
}

// ------------------------------------------------------------------ exponential

int cmd_exponential(const std::vector<index_t>& sizes, CsvSink sink) {
  std::vector<index_t> dims = sizes.empty() ? std::vector<index_t>{50, 55, 60} : sizes;
  const double t_star = 0.5;
  const index_t rk4_steps = 1351;
  auto prob = apps::ada_problem(dims, t_star);

  const double t0 = now_seconds();
  Tensor<double> exact = apps::linear_evolution_exact(prob);
  const double t_tucker = now_seconds() - t0;
  const double t1 = now_seconds();
  Tensor<double> rk = apps::rk4_evolve(prob, rk4_steps);
  const double t_rk4 = now_seconds() - t1;

  const double err = core::max_abs_diff(rk, exact) / core::max_abs(exact);
  std::ostringstream dims_s;
  for (std::size_t k = 0; k < dims.size(); ++k) dims_s << (k ? "x" : "") << dims[k];
  sink.row({"grid", "rk4_steps", "error", "t_tucker_seconds", "t_rk4_seconds"});
  sink.row({dims_s.str(), std::to_string(rk4_steps), fmt(err), fmt(t_tucker),
            fmt(t_rk4)});
  summary_stream(sink) << "exponential grid " << dims_s.str() << ": tucker "
                       << fmt(t_tucker) << " s, rk4(" << rk4_steps << ") "
                       << fmt(t_rk4) << " s, relative difference " << fmt(err) << "\n";
  return sink.flush();
}

// ------------------------------------------------------------------ imex

int cmd_imex(const std::vector<index_t>& sizes, double tol, CsvSink sink) {
  std::vector<index_t> dims = sizes.empty() ? std::vector<index_t>{40, 44, 48} : sizes;
  const double t_star = 1.0, tau = 0.01;
  auto prob = apps::heat_semilinear_problem(dims, t_star, tau);
  sink.row({"backend", "error", "avg_inner_iterations", "time_seconds", "converged"});
  const std::pair<apps::ImexBackend, const char*> backends[] = {
      {apps::ImexBackend::Direct, "direct"},
      {apps::ImexBackend::CgVector, "cg-vector"},
      {apps::ImexBackend::CgTensor, "cg-tensor"},
      {apps::ImexBackend::PcgTensor, "pcg-tensor"},
  };
  for (const auto& [backend, name] : backends) {
    auto [U, rep] = apps::imex_evolve(prob, backend, tol);
    sink.row({name, fmt(rep.error_inf_relative), fmt(rep.avg_inner_iterations),
              fmt(rep.wall_time_seconds), rep.converged ? "true" : "false"});
    summary_stream(sink) << "imex " << name << ": error "
                         << fmt(rep.error_inf_relative) << ", avg iterations "
                         << fmt(rep.avg_inner_iterations) << ", "
                         << fmt(rep.wall_time_seconds) << " s\n";
  }
  return sink.flush();
}

std::vector<index_t> parse_sizes(const std::string& csv) {
  std::vector<index_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const long v = std::stol(tok);
    if (v < 1) throw CLI::ValidationError("--sizes entries must be positive");
    out.push_back(index_t(v));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mu-mode tensor kernels: validation, benchmarks, experiments"};
  app.require_subcommand(1);

  std::string sizes_csv;
  std::uint64_t seed = 1234;
  int reps = 3;
  double tol = 1e-8;
  std::string out_path;
  double mem_cap_gib = 8.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--sizes", sizes_csv, "comma-separated sizes");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--reps", reps, "timing repetitions (median reported)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol", tol, "solver tolerance");
    sub->add_option("--out", out_path, "write CSV here instead of stdout");
    sub->add_option("--mem-cap", mem_cap_gib, "memory cap in GiB");
  };

  std::string suite;
  bool inject_fault = false;
  auto* validate = app.add_subcommand("validate", "run the correctness suites");
  add_common(validate);
  validate->add_option("--suite", suite, "run one suite: tucker | appendix");
  validate->add_flag("--inject-fault", inject_fault,
                     "test-only: corrupt one case to exercise the failure path");

  auto* bench2d = app.add_subcommand("bench2d", "two-dimensional transform benchmark");
  add_common(bench2d);
  auto* bench_tucker =
      app.add_subcommand("bench-tucker", "fused vs sequential Tucker benchmark");
  add_common(bench_tucker);
  index_t bench_d = 3;
  bench_tucker->add_option("--d", bench_d, "tensor order (3..6)");

  auto* spectral = app.add_subcommand("spectral", "Hermite-Laguerre-Fourier experiment");
  add_common(spectral);
  auto* interp = app.add_subcommand("interp", "5-D Runge interpolation sweep");
  add_common(interp);
  auto* exponential =
      app.add_subcommand("exponential", "linear evolution: tucker vs RK4");
  add_common(exponential);
  auto* imex = app.add_subcommand("imex", "semilinear IMEX marching, all backends");
  add_common(imex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::vector<index_t> sizes = sizes_csv.empty() ? std::vector<index_t>{}
                                                   : parse_sizes(sizes_csv);
    CsvSink sink;
    sink.out_path = out_path;
    if (validate->parsed()) return cmd_validate(seed, suite, inject_fault);
    if (bench2d->parsed()) {
      if (sizes.empty()) sizes = {50, 100, 200};
      return cmd_bench2d(sizes, seed, reps, std::move(sink));
    }
    if (bench_tucker->parsed()) {
      if (sizes.empty()) sizes = {32, 64, 96, 144};
      return cmd_bench_tucker(bench_d, sizes, seed, reps, mem_cap_gib, std::move(sink));
    }
    if (spectral->parsed()) return cmd_spectral(sizes, std::move(sink));
    if (interp->parsed()) return cmd_interp(sizes, mem_cap_gib, std::move(sink));
    if (exponential->parsed()) return cmd_exponential(sizes, std::move(sink));
    if (imex->parsed()) return cmd_imex(sizes, tol, std::move(sink));
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
