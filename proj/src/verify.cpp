#include "genjac/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "genjac/elliptic.hpp"
#include "genjac/genjac.hpp"

namespace genjac::verify {

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(gen);
  }
  Moduli moduli() {
    double k1 = uniform(0.05, 0.98);
    double k2 = uniform(0, k1);
    return moduli_new(k1, k2);
  }
};

double companion_residual(const Moduli& m, double u) {
  GenJacobiValues v = eval(u, m);
  double m1 = m.k1 * m.k1, m2 = m.k2 * m.k2;
  double r = 0;
  r = std::fmax(r, std::fabs(v.c * v.c - (1 - v.s * v.s)));
  r = std::fmax(r, std::fabs(v.d1 * v.d1 - (1 - m1 * v.s * v.s)));
  r = std::fmax(r, std::fabs(v.d2 * v.d2 - (1 - m2 * v.s * v.s)));
  r = std::fmax(r, std::fabs(v.d1 * v.d1 - m1 * v.c * v.c - (1 - m1)));
  r = std::fmax(r, std::fabs(v.d2 * v.d2 - m2 * v.c * v.c - (1 - m2)));
  r = std::fmax(r, std::fabs(m1 * v.d2 * v.d2 - m2 * v.d1 * v.d1 - (m1 - m2)));
  return r;
}

double derivative_residual(const Moduli& m, double u) {
  const double h = 1e-5;
  GenJacobiValues lo = eval(u - h, m), hi = eval(u + h, m), v = eval(u, m);
  double m1 = m.k1 * m.k1, m2 = m.k2 * m.k2;
  double r = 0;
  r = std::fmax(r, std::fabs((hi.s - lo.s) / (2 * h) - v.c * v.d1 * v.d2));
  r = std::fmax(r, std::fabs((hi.c - lo.c) / (2 * h) + v.s * v.d1 * v.d2));
  r = std::fmax(r, std::fabs((hi.d1 - lo.d1) / (2 * h) + m1 * v.s * v.c * v.d2));
  r = std::fmax(r, std::fabs((hi.d2 - lo.d2) / (2 * h) + m2 * v.s * v.c * v.d1));
  return r;
}

double pair_residual(const GenJacobiValues& a, const GenJacobiValues& b) {
  double r = std::fabs(a.s - b.s);
  r = std::fmax(r, std::fabs(a.c - b.c));
  r = std::fmax(r, std::fabs(a.d1 - b.d1));
  r = std::fmax(r, std::fabs(a.d2 - b.d2));
  return r;
}

double addition_residual(const Moduli& m, double u, double v) {
  AddResult ar = add(u, v, m);
  double r = pair_residual(ar.plus, eval(u + v, m));
  return std::fmax(r, pair_residual(ar.minus, eval(u - v, m)));
}

double half_residual(const Moduli& m, double u) {
  HalfSquares h = half(u, m);
  GenJacobiValues w = eval(u / 2, m);
  double r = std::fabs(h.s2 - w.s * w.s);
  r = std::fmax(r, std::fabs(h.c2 - w.c * w.c));
  r = std::fmax(r, std::fabs(h.d12 - w.d1 * w.d1));
  r = std::fmax(r, std::fabs(h.d22 - w.d2 * w.d2));
  return r;
}

double shift_residual(const Moduli& m, double u) {
  return pair_residual(shift_K(u, m), eval(u + m.calK, m));
}

// Table of quotients in terms of the kernel functions at (k2c u, kappa2).
double ratio_residual(const Moduli& m, double u) {
  ell::JacobiTriple t = ell::jacobi_scd(m.k2c * u, m.kappa2);
  double q = m.k2c;
  struct Row {
    FnId num, den;
    double expected;
  };
  const Row rows[] = {
      {FnId::S, FnId::C, t.sn / (q * t.cn)},
      {FnId::C, FnId::S, q * t.cn / t.sn},
      {FnId::D1, FnId::S, q * t.dn / t.sn},
      {FnId::D2, FnId::S, q / t.sn},
      {FnId::S, FnId::D1, t.sn / (q * t.dn)},
      {FnId::C, FnId::D1, t.cn / t.dn},
      {FnId::D2, FnId::D1, 1 / t.dn},
      {FnId::S, FnId::D2, t.sn / q},
      {FnId::C, FnId::D2, t.cn},
      {FnId::D1, FnId::D2, t.dn},
      {FnId::D1, FnId::C, t.dn / t.cn},
      {FnId::D2, FnId::C, 1 / t.cn},
  };
  GenJacobiValues v = eval(u, m);
  double r = 0;
  for (const Row& row : rows) {
    // stay away from poles; they are exercised separately
    if (std::fabs(component(v, row.den)) < 0.05) continue;
    r = std::fmax(r, std::fabs(ratio(u, m, row.num, row.den) - row.expected));
  }
  return r;
}

double special_residual(const Moduli& m) {
  double r = pair_residual(special_value(SpecialPoint::HalfK, m),
                           eval(m.calK / 2, m));
  r = std::fmax(r, pair_residual(special_value(SpecialPoint::K, m),
                                 eval(m.calK, m)));
  r = std::fmax(r, pair_residual(special_value(SpecialPoint::ThreeHalfK, m),
                                 eval(3 * m.calK / 2, m)));
  return r;
}

double antiderivative_residual(const Moduli& m, double u) {
  const double h = 1e-5;
  GenJacobiValues v = eval(u, m);
  struct Row {
    IntegrandId id;
    double integrand;
  };
  const Row rows[] = {
      {IntegrandId::S, v.s},
      {IntegrandId::C, v.c},
      {IntegrandId::D1, v.d1},
      {IntegrandId::D2, v.d2},
      {IntegrandId::SC, v.s * v.c},
      {IntegrandId::SD1, v.s * v.d1},
      {IntegrandId::SD2, v.s * v.d2},
      {IntegrandId::CD1, v.c * v.d1},
      {IntegrandId::CD2, v.c * v.d2},
      {IntegrandId::D1D2, v.d1 * v.d2},
      {IntegrandId::SSq, v.s * v.s},
      {IntegrandId::CSq, v.c * v.c},
      {IntegrandId::D1Sq, v.d1 * v.d1},
      {IntegrandId::D2Sq, v.d2 * v.d2},
      {IntegrandId::D1SqD2Sq, v.d1 * v.d1 * v.d2 * v.d2},
  };
  double r = 0;
  for (const Row& row : rows) {
    double d = (antiderivative(row.id, u + h, m) - antiderivative(row.id, u - h, m)) / (2 * h);
    r = std::fmax(r, std::fabs(d - row.integrand));
  }
  return r;
}

}  // namespace

Report run(std::uint64_t seed, int trials, double tol_override) {
  if (trials < 1) throw std::invalid_argument("verify: trials must be >= 1");
  Report rep;
  rep.seed = seed;
  rep.trials = trials;

  struct Family {
    const char* name;
    double tol;
    std::function<double(Rng&)> sample;
  };
  const Family families[] = {
      {"companion", 1e-12,
       [](Rng& r) {
         Moduli m = r.moduli();
         return companion_residual(m, r.uniform(-2 * m.calK, 2 * m.calK));
       }},
      {"derivative", 1e-6,
       [](Rng& r) {
         Moduli m = r.moduli();
         return derivative_residual(m, r.uniform(-2 * m.calK, 2 * m.calK));
       }},
      {"addition", 1e-10,
       [](Rng& r) {
         Moduli m = r.moduli();
         return addition_residual(m, r.uniform(-2 * m.calK, 2 * m.calK),
                                  r.uniform(-2 * m.calK, 2 * m.calK));
       }},
      {"half", 1e-10,
       [](Rng& r) {
         Moduli m = r.moduli();
         return half_residual(m, r.uniform(0, 2 * m.calK));
       }},
      {"shift", 1e-10,
       [](Rng& r) {
         Moduli m = r.moduli();
         return shift_residual(m, r.uniform(-2 * m.calK, 2 * m.calK));
       }},
      {"table1_ratios", 1e-12,
       [](Rng& r) {
         Moduli m = r.moduli();
         return ratio_residual(m, r.uniform(-2 * m.calK, 2 * m.calK));
       }},
      {"table2_special", 1e-12, [](Rng& r) { return special_residual(r.moduli()); }},
      {"table3_antiderivatives", 1e-6,
       [](Rng& r) {
         Moduli m = r.moduli();
         return antiderivative_residual(m, r.uniform(0.05 * m.calK, 0.95 * m.calK));
       }},
  };

  rep.all_pass = true;
  for (const Family& f : families) {
    Rng rng(seed ^ std::hash<std::string>{}(f.name));
    FamilyResult fr;
    fr.name = f.name;
    fr.tol = tol_override > 0 ? tol_override : f.tol;
    fr.points = static_cast<std::size_t>(trials);
    fr.max_residual = 0;
    for (int i = 0; i < trials; ++i)
      fr.max_residual = std::fmax(fr.max_residual, f.sample(rng));
    fr.pass = fr.max_residual <= fr.tol;
    rep.all_pass = rep.all_pass && fr.pass;
    rep.families.push_back(fr);
  }
  return rep;
}

std::string format_report(const Report& rep) {
  std::ostringstream out;
  out << "identity verification: seed=" << rep.seed << " trials=" << rep.trials
      << "\n";
  for (const FamilyResult& f : rep.families) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-24s max_residual=%.3e tol=%.1e %s\n",
                  f.name.c_str(), f.max_residual, f.tol,
                  f.pass ? "pass" : "FAIL");
    out << buf;
  }
  out << (rep.all_pass ? "all families pass" : "FAILURES present") << "\n";
  return out.str();
}

}  // namespace genjac::verify
