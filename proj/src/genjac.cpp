#include "genjac/genjac.hpp"

#include <cmath>
#include <limits>

#include "genjac/elliptic.hpp"
#include "genjac/quadrature.hpp"

namespace genjac {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

Moduli moduli_new(double k1, double k2) {
  if (!(k1 >= 0 && k1 <= 1 && k2 >= 0 && k2 <= k1))
    throw std::domain_error("moduli_new: requires 0 <= k2 <= k1 <= 1");
  Moduli m;
  m.k1 = k1;
  m.k2 = k2;
  // difference-of-squares forms keep the complements accurate near 1
  m.k1c = std::sqrt((1 - k1) * (1 + k1));
  m.k2c = std::sqrt((1 - k2) * (1 + k2));
  m.kappa2 = (k1 == k2) ? 0.0 : (k1 * k1 - k2 * k2) / ((1 - k2) * (1 + k2));
  if (m.kappa2 > 1) m.kappa2 = 1;
  m.degenerate = (k1 == k2) || (k1 == 1);
  m.calK = (k1 == 1) ? kInf : ell::complete_k(m.kappa2) / m.k2c;
  m.calKc = (m.kappa2 == 0) ? kInf : ell::complete_k(1 - m.kappa2) / m.k2c;
  return m;
}

GenJacobiValues eval(double u, const Moduli& mod) {
  if (mod.k1 >= 1) throw std::domain_error("eval: requires k1 < 1");
  ell::JacobiTriple t = ell::jacobi_scd(mod.k2c * u, mod.kappa2);
  // common scaling D^2 = k2c^2 + k2^2 sn^2 is bounded in [k2c^2, 1]
  double D = std::sqrt(mod.k2c * mod.k2c + mod.k2 * mod.k2 * t.sn * t.sn);
  return {t.sn / D, mod.k2c * t.cn / D, mod.k2c * t.dn / D, mod.k2c / D};
}

double amplitude(double u, const Moduli& mod) {
  if (mod.k1 >= 1) throw std::domain_error("amplitude: requires k1 < 1");
  double theta = ell::jacobi_am(mod.k2c * u, mod.kappa2);
  // tan(a) = tan(theta)/k2c applied per half-period so a stays continuous
  double n = std::floor(theta / kPi + 0.5);
  double r = theta - n * kPi;
  return n * kPi + std::atan2(std::sin(r), mod.k2c * std::cos(r));
}

AddResult add(double u, double v, const Moduli& mod) {
  GenJacobiValues a = eval(u, mod);
  GenJacobiValues b = eval(v, mod);
  double m2 = mod.k2 * mod.k2;
  double k2c2 = mod.k2c * mod.k2c;
  double P = a.d2 * a.d2 * b.d2 * b.d2 -
             mod.kappa2 * k2c2 * k2c2 * a.s * a.s * b.s * b.s;
  double Sp = a.s * a.d2 * b.c * b.d1 + b.s * b.d2 * a.c * a.d1;
  double Sm = a.s * a.d2 * b.c * b.d1 - b.s * b.d2 * a.c * a.d1;
  double Cnum = a.c * a.d2 * b.c * b.d2;
  double Ccross = k2c2 * a.s * a.d1 * b.s * b.d1;
  double Dnum = a.d1 * a.d2 * b.d1 * b.d2;
  double Dcross = mod.kappa2 * k2c2 * a.s * a.c * b.s * b.c;
  AddResult r;
  const double tiny = 1e-300;
  {
    double den = std::sqrt(P * P + m2 * Sp * Sp);
    if (den < tiny) throw numeric_error("add: vanishing denominator");
    r.plus = {Sp / den, (Cnum - Ccross) / den, (Dnum - Dcross) / den, P / den};
  }
  {
    double den = std::sqrt(P * P + m2 * Sm * Sm);
    if (den < tiny) throw numeric_error("add: vanishing denominator");
    r.minus = {Sm / den, (Cnum + Ccross) / den, (Dnum + Dcross) / den, P / den};
  }
  return r;
}

HalfSquares half(double u, const Moduli& mod) {
  if (!(u >= -1e-9 && u <= 2 * mod.calK * (1 + 1e-12) + 1e-9))
    throw std::domain_error("half: requires u in [0, 2 calK]");
  GenJacobiValues v = eval(u, mod);
  double m1 = mod.k1 * mod.k1, m2 = mod.k2 * mod.k2;
  double k2c2 = mod.k2c * mod.k2c;
  // shared denominator d2 - k2^2 c + k2c^2 d1 >= k2c^2 (1 + d1) > 0
  double den = v.d2 - m2 * v.c + k2c2 * v.d1;
  HalfSquares h;
  h.s2 = (v.d2 - v.c) / den;
  h.c2 = k2c2 * (v.c + v.d1) / den;
  if (h.s2 < 0) h.s2 = 0;
  if (h.c2 < 0) h.c2 = 0;
  // the d-rows share a denominator that degenerates at k1 = k2; fall back to
  // the companion relations there
  double dden = m1 * v.d2 - m2 * v.d1 + (m1 - m2) * v.c;
  double scale = m1 * v.d2 + m2 * v.d1 + (m1 - m2) * std::fabs(v.c);
  if (std::fabs(dden) <= 1e-4 * scale || scale == 0) {
    h.d12 = 1 - m1 * h.s2;
    h.d22 = 1 - m2 * h.s2;
  } else {
    h.d12 = (m1 - m2) * (v.c + v.d1) / dden;
    h.d22 = (m1 - m2) * (v.c + v.d2) / dden;
  }
  return h;
}

GenJacobiValues shift_K(double u, const Moduli& mod) {
  GenJacobiValues v = eval(u, mod);
  double m2 = mod.k2 * mod.k2;
  double k1c2 = mod.k1c * mod.k1c;
  // W^2 = d1^2 - k2^2 k1c^2 s^2 >= k1c^2 k2c^2 > 0 for k1 < 1
  double W = std::sqrt(v.d1 * v.d1 - m2 * k1c2 * v.s * v.s);
  if (W < 1e-300) throw numeric_error("shift_K: vanishing denominator");
  return {v.c / W, -mod.k1c * mod.k2c * v.s / W, mod.k1c * v.d2 / W,
          mod.k2c * v.d1 / W};
}

GenJacobiValues special_value(SpecialPoint p, const Moduli& mod) {
  double q1 = mod.k1c, q2 = mod.k2c;
  switch (p) {
    case SpecialPoint::K:
      return {1, 0, q1, q2};
    case SpecialPoint::HalfK:
    case SpecialPoint::ThreeHalfK: {
      double s = 1 / std::sqrt(1 + q1 * q2);
      double c = std::sqrt(q1 * q2) * s;
      double d1 = std::sqrt(q1 * (q1 + q2)) * s;
      double d2 = std::sqrt(q2 * (q1 + q2)) * s;
      if (p == SpecialPoint::ThreeHalfK) c = -c;
      return {s, c, d1, d2};
    }
  }
  throw std::domain_error("special_value: unknown tag");
}

double component(const GenJacobiValues& v, FnId id) {
  switch (id) {
    case FnId::S: return v.s;
    case FnId::C: return v.c;
    case FnId::D1: return v.d1;
    case FnId::D2: return v.d2;
  }
  throw std::domain_error("component: unknown id");
}

double ratio(double u, const Moduli& mod, FnId num, FnId den) {
  GenJacobiValues v = eval(u, mod);
  double d = component(v, den);
  if (std::fabs(d) < std::numeric_limits<double>::min())
    throw pole_error("ratio: denominator vanishes");
  return component(v, num) / d;
}

namespace {

// Antiderivative of s^2, valid on [0, calK):
//   F(u) = sn^3 RJ(cn^2, dn^2, 1, 1 + k2^2 sn^2 / k2c^2) / (3 k2c^3)
// with the kernel functions taken at (k2c u, kappa2).  This is the
// third-kind integral Pi - u rewritten through RJ so that nothing cancels
// as k2 -> 0 (the characteristic -k2^2/k2c^2 then vanishes and RJ -> RD).
double s_squared_antiderivative(double u, const Moduli& mod) {
  ell::JacobiTriple t = ell::jacobi_scd(mod.k2c * u, mod.kappa2);
  double k2c2 = mod.k2c * mod.k2c;
  double p = 1 + mod.k2 * mod.k2 * t.sn * t.sn / k2c2;
  double rj = ell::carlson_rj(t.cn * t.cn, t.dn * t.dn, 1, p);
  return t.sn * t.sn * t.sn * rj / (3 * k2c2 * mod.k2c);
}

}  // namespace

double antiderivative(IntegrandId f, double u, const Moduli& mod) {
  if (mod.k1 >= 1) throw std::domain_error("antiderivative: requires k1 < 1");
  if (!(u >= 0 && u < mod.calK))
    throw std::domain_error("antiderivative: requires u in [0, calK)");
  GenJacobiValues v = eval(u, mod);
  double k1 = mod.k1, k2 = mod.k2;
  double m1 = k1 * k1, m2 = k2 * k2;
  switch (f) {
    case IntegrandId::S: {
      // 1 - c written as s^2/(1+c) to survive small u
      if (k1 < 1e-9) return v.s * v.s / (1 + v.c);
      double mrho = mod.kappa2 / m1;
      double x1 = k1, x2 = k1 * v.c / v.d1;
      if (mrho > 1 - 1e-12)
        return (std::atanh(x1) - std::atanh(x2)) / (k1 * mod.k2c);
      return (ell::inv_sn(x1, mrho) - ell::inv_sn(x2, mrho)) / (k1 * mod.k2c);
    }
    case IntegrandId::C: {
      if (k1 < 1e-9) return v.s;
      double mm = m2 / m1;
      if (mm > 1 - 1e-12) return std::atanh(k1 * v.s) / k1;
      return ell::inv_sn(k1 * v.s, mm) / k1;
    }
    case IntegrandId::D1:
      return ell::inv_sn(v.s, m2);
    case IntegrandId::D2:
      return ell::inv_sn(v.s, m1);
    case IntegrandId::SC: {
      if (k1 < 1e-9) return v.s * v.s / 2;
      if (k2 < 1e-9) return v.s * v.s / (1 + v.d1);
      // log((k2 d1 - k1 d2)/(k2 - k1)) freed of the 0/0 at k1 = k2
      return std::log(v.d2 + k2 * (k1 + k2) * v.s * v.s / (v.d1 + v.d2)) /
             (k1 * k2);
    }
    case IntegrandId::SD1: {
      if (k2 < 1e-12) return v.s * v.s / (1 + v.c);
      double q = k2 * (v.s * v.s / (1 + v.c) - k2 * v.s * v.s / (1 + v.d2)) /
                 (1 - k2);
      return std::log1p(q) / k2;
    }
    case IntegrandId::SD2: {
      if (k1 < 1e-12) return v.s * v.s / (1 + v.c);
      double q = k1 * (v.s * v.s / (1 + v.c) - k1 * v.s * v.s / (1 + v.d1)) /
                 (1 - k1);
      return std::log1p(q) / k1;
    }
    case IntegrandId::CD1:
      if (k2 < 1e-12) return v.s;
      return std::atan(k2 * v.s / v.d2) / k2;
    case IntegrandId::CD2:
      if (k1 < 1e-12) return v.s;
      return std::atan(k1 * v.s / v.d1) / k1;
    case IntegrandId::D1D2:
      return amplitude(u, mod);
    case IntegrandId::SSq:
      return s_squared_antiderivative(u, mod);
    case IntegrandId::CSq:
      return u - s_squared_antiderivative(u, mod);
    case IntegrandId::D1Sq:
      return u - m1 * s_squared_antiderivative(u, mod);
    case IntegrandId::D2Sq:
      return u - m2 * s_squared_antiderivative(u, mod);
    case IntegrandId::D1SqD2Sq: {
      ell::JacobiTriple t = ell::jacobi_scd(mod.k2c * u, mod.kappa2);
      double k2c2 = mod.k2c * mod.k2c;
      double sn3 = t.sn * t.sn * t.sn;
      double p = 1 + m2 * t.sn * t.sn / k2c2;
      double T = sn3 * ell::carlson_rj(t.cn * t.cn, t.dn * t.dn, 1, p) / 3;
      // incomplete E at the kernel argument, difference form
      double Ep = mod.k2c * u -
                  (mod.kappa2 / 3) * sn3 *
                      ell::carlson_rd(t.cn * t.cn, t.dn * t.dn, 1);
      double bracket = Ep - (T / k2c2) * (m1 + m2 / k2c2) + u / mod.k2c +
                       (m2 / mod.k2c) * v.s * v.c * v.d1 / v.d2;
      return mod.k2c / 2 * bracket;
    }
  }
  throw std::domain_error("antiderivative: unknown integrand");
}

double defining_integral(double x, const Moduli& mod) {
  if (!(x >= 0 && x <= 1)) throw std::domain_error("defining_integral: requires x in [0,1]");
  if (mod.k1 >= 1) throw std::domain_error("defining_integral: requires k1 < 1");
  double m1 = mod.k1 * mod.k1, m2 = mod.k2 * mod.k2;
  // t = sin(theta) removes the (1-t^2) endpoint singularity
  double phi = std::asin(x);
  quad::Options opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-13;
  return quad::integrate(
      [m1, m2](double th) {
        double s2 = std::sin(th) * std::sin(th);
        return 1 / std::sqrt((1 - m1 * s2) * (1 - m2 * s2));
      },
      0, phi, opt);
}

}  // namespace genjac
