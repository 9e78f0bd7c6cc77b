// Command-line front end: sample the generalized elliptic functions, run
// the identity-verification suite, emit kink-chain profiles, and scan
// R(A)/E(A) curves, as CSV or JSON tables.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "genjac/dsg.hpp"
#include "genjac/genjac.hpp"
#include "genjac/quadrature.hpp"
#include "genjac/table.hpp"
#include "genjac/verify.hpp"
#include "genjac/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitNumeric = 3;

struct CommonOut {
  std::string format = "csv";
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, CommonOut* o) {
  cmd->add_option("--format", o->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o->out_path, "Output file (default stdout)");
}

void emit(const genjac::io::OutputTable& t, const CommonOut& o) {
  std::string text = o.format == "json" ? t.to_json() : t.to_csv();
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + o.out_path);
  f << text;
}

void stamp_version(genjac::io::OutputTable& t) {
  t.set_meta("tool", "genjac");
  t.set_meta("version", std::string(genjac::kVersion));
}

// Optional tolerance override for the verification suite; must parse as a
// positive real when set.
double tol_from_env() {
  const char* s = std::getenv("GENJAC_TOL");
  if (!s || !*s) return 0;
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || !(v > 0) || !std::isfinite(v))
    throw std::invalid_argument("GENJAC_TOL must be a positive real number");
  return v;
}

struct EvalArgs {
  double k1 = 0, k2 = 0, umin = 0, umax = 0;
  int n = 0;
  CommonOut out;
};

int run_eval(const EvalArgs& a) {
  genjac::Moduli mod = genjac::moduli_new(a.k1, a.k2);
  genjac::io::OutputTable t({{"u", ""},
                             {"s", ""},
                             {"c", ""},
                             {"d1", ""},
                             {"d2", ""},
                             {"a", "rad"}});
  stamp_version(t);
  t.set_meta("command", "eval");
  t.set_meta("k1", a.k1);
  t.set_meta("k2", a.k2);
  t.set_meta("u_min", a.umin);
  t.set_meta("u_max", a.umax);
  t.set_meta("n", static_cast<double>(a.n));
  t.set_meta("calK", mod.calK);
  for (int i = 0; i < a.n; ++i) {
    double u = a.n == 1 ? a.umin : a.umin + (a.umax - a.umin) * i / (a.n - 1);
    genjac::GenJacobiValues v = genjac::eval(u, mod);
    t.add_row({u, v.s, v.c, v.d1, v.d2, genjac::amplitude(u, mod)});
  }
  emit(t, a.out);
  return kExitOk;
}

struct VerifyArgs {
  std::int64_t seed = 42;
  int trials = 100;
};

int run_verify(const VerifyArgs& a) {
  double tol = tol_from_env();
  genjac::verify::Report rep =
      genjac::verify::run(static_cast<std::uint64_t>(a.seed), a.trials, tol);
  std::cout << genjac::verify::format_report(rep);
  return rep.all_pass ? kExitOk : kExitVerifyFail;
}

struct KinkArgs {
  double mu = 0, lambda = 0, beta = 1, A = 0;
  double xmin = 0, xmax = 0;
  int n = 0;
  CommonOut out;
};

int run_kink(const KinkArgs& a) {
  genjac::dsg::DSGParams p{a.mu, a.lambda, a.beta, a.A, 0};
  genjac::dsg::KinkSolution sol = genjac::dsg::solve(p);
  genjac::io::OutputTable t({{"x", ""}, {"phi", ""}, {"energy_density", ""}});
  stamp_version(t);
  t.set_meta("command", "kink");
  t.set_meta("mu", a.mu);
  t.set_meta("lambda", a.lambda);
  t.set_meta("beta", a.beta);
  t.set_meta("A", a.A);
  t.set_meta("case_tag", genjac::dsg::to_string(sol.regime.case_tag));
  t.set_meta("case_code", static_cast<double>(sol.regime.case_tag));
  t.set_meta("R", sol.R);
  if (std::isfinite(sol.R)) {
    double E;
    if (sol.energy) {
      E = *sol.energy;
    } else {
      genjac::quad::Options opt;
      opt.abs_tol = 1e-10;
      opt.rel_tol = 1e-10;
      E = genjac::quad::integrate(sol.density, 0, sol.R, opt);
    }
    t.set_meta("E", E);
  }
  if (sol.Q) t.set_meta("Q", *sol.Q);

  // central-difference check of (1/2) phi'^2 = V(phi) + A over the grid
  double h = std::isfinite(sol.R)
                 ? std::clamp(sol.R / 1e5, 1e-6, 3e-5)
                 : 1e-5;
  double resid = 0;
  for (int i = 0; i < a.n; ++i) {
    double x = a.n == 1 ? a.xmin : a.xmin + (a.xmax - a.xmin) * i / (a.n - 1);
    double phi = sol.profile(x);
    double dphi = (sol.profile(x + h) - sol.profile(x - h)) / (2 * h);
    resid = std::fmax(resid, std::fabs(dphi * dphi / 2 -
                                       genjac::dsg::potential(phi, p) - a.A));
    t.add_row({x, phi, sol.density(x)});
  }
  t.set_meta("ode_residual_max", resid);
  emit(t, a.out);
  return kExitOk;
}

struct ScanArgs {
  double mu = 0, lambda = 0, beta = 1;
  double amin = 0, amax = 0;
  int n = 0;
  CommonOut out;
};

int run_scan(const ScanArgs& a) {
  // one row per A; rows where classification fails are skipped and counted
  std::vector<std::optional<std::array<double, 4>>> results(a.n);
  std::vector<char> no_solution(a.n, 0);
  auto worker = [&](int start, int stride) {
    for (int i = start; i < a.n; i += stride) {
      double A = a.n == 1 ? a.amin : a.amin + (a.amax - a.amin) * i / (a.n - 1);
      genjac::dsg::DSGParams p{a.mu, a.lambda, a.beta, A, 0};
      try {
        genjac::dsg::KinkSolution sol = genjac::dsg::solve(p);
        double E = std::numeric_limits<double>::infinity();
        if (std::isfinite(sol.R)) {
          if (sol.energy) {
            E = *sol.energy;
          } else {
            genjac::quad::Options opt;
            opt.abs_tol = 1e-10;
            opt.rel_tol = 1e-10;
            E = genjac::quad::integrate(sol.density, 0, sol.R, opt);
          }
        }
        results[i] = std::array<double, 4>{
            A, static_cast<double>(sol.regime.case_tag), sol.R, E};
      } catch (const std::exception&) {
        no_solution[i] = 1;
      }
    }
  };
  int threads = static_cast<int>(
      std::min<unsigned>(std::thread::hardware_concurrency(),
                         static_cast<unsigned>(std::max(a.n, 1))));
  if (threads < 1) threads = 1;
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < threads; ++s) pool.emplace_back(worker, s, threads);
    for (auto& th : pool) th.join();
  }

  genjac::io::OutputTable t({{"A", ""}, {"case_tag", ""}, {"R", ""}, {"E", ""}});
  stamp_version(t);
  t.set_meta("command", "scan");
  t.set_meta("mu", a.mu);
  t.set_meta("lambda", a.lambda);
  t.set_meta("beta", a.beta);
  t.set_meta("A_min", a.amin);
  t.set_meta("A_max", a.amax);
  t.set_meta("n", static_cast<double>(a.n));
  std::string legend;
  for (int c = 0; c <= static_cast<int>(genjac::dsg::CaseTag::D2_Bounce); ++c) {
    if (c) legend += ";";
    legend += std::to_string(c) + ":" +
              genjac::dsg::to_string(static_cast<genjac::dsg::CaseTag>(c));
  }
  t.set_meta("case_tags", legend);
  int skipped = 0;
  for (int i = 0; i < a.n; ++i) {
    if (results[i]) {
      const auto& r = *results[i];
      t.add_row({r[0], r[1], r[2], r[3]});
    } else if (no_solution[i]) {
      ++skipped;
    }
  }
  t.set_meta("rows_no_solution", static_cast<double>(skipped));
  if (t.rows().empty() && t.dropped() == 0)
    throw std::invalid_argument("scan: no A in the range admits a solution");
  emit(t, a.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Jacobi elliptic functions and double sine-Gordon kink chains"};
  app.set_version_flag("--version", std::string(genjac::kVersion));
  app.require_subcommand(1);

  EvalArgs ea;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Sample s, c, d1, d2 and the amplitude on a u-grid");
  eval_cmd->add_option("--k1", ea.k1, "First modulus")->required();
  eval_cmd->add_option("--k2", ea.k2, "Second modulus")->required();
  eval_cmd->add_option("--umin", ea.umin, "Grid start")->required();
  eval_cmd->add_option("--umax", ea.umax, "Grid end")->required();
  eval_cmd->add_option("-n,--samples", ea.n, "Number of samples")
      ->required()
      ->check(CLI::PositiveNumber);
  add_output_flags(eval_cmd, &ea.out);

  VerifyArgs va;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the randomized identity suite");
  verify_cmd->add_option("--seed", va.seed, "RNG seed")->capture_default_str();
  verify_cmd->add_option("--trials", va.trials, "Random points per family")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  KinkArgs ka;
  CLI::App* kink_cmd =
      app.add_subcommand("kink", "Emit a kink-chain profile and energy density");
  kink_cmd->add_option("--mu", ka.mu, "cos(beta phi) coupling")->required();
  kink_cmd->add_option("--lambda", ka.lambda, "cos(beta phi/2) coupling")->required();
  kink_cmd->add_option("--beta", ka.beta, "Field-space scale")->required();
  kink_cmd->add_option("--A", ka.A, "First-integral constant")->required();
  kink_cmd->add_option("--xmin", ka.xmin, "Grid start")->required();
  kink_cmd->add_option("--xmax", ka.xmax, "Grid end")->required();
  kink_cmd->add_option("-n,--samples", ka.n, "Number of samples")
      ->required()
      ->check(CLI::PositiveNumber);
  add_output_flags(kink_cmd, &ka.out);

  ScanArgs sa;
  CLI::App* scan_cmd =
      app.add_subcommand("scan", "Scan A and tabulate case tag, R, and E");
  scan_cmd->add_option("--mu", sa.mu, "cos(beta phi) coupling")->required();
  scan_cmd->add_option("--lambda", sa.lambda, "cos(beta phi/2) coupling")->required();
  scan_cmd->add_option("--beta", sa.beta, "Field-space scale")->required();
  scan_cmd->add_option("--amin", sa.amin, "Scan start")->required();
  scan_cmd->add_option("--amax", sa.amax, "Scan end")->required();
  scan_cmd->add_option("-n,--samples", sa.n, "Number of samples")
      ->required()
      ->check(CLI::PositiveNumber);
  add_output_flags(scan_cmd, &sa.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(ea);
    if (verify_cmd->parsed()) return run_verify(va);
    if (kink_cmd->parsed()) return run_kink(ka);
    if (scan_cmd->parsed()) return run_scan(sa);
    return kExitUsage;
  } catch (const genjac::numeric_error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}
