#include "genjac/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace genjac::ell {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Truncation targets for the duplication loops; the series tails are O(s^6)
// or better, so an eighth root of the tolerance bounds |s|.
const double kTolRF = std::pow(3 * kEps * 0.01, 1.0 / 8);
const double kTolRD = std::pow(0.2 * kEps * 0.01, 1.0 / 8);
const double kTolRC = kTolRD;

constexpr double kPi = 3.14159265358979323846;

void require_nonneg_pair(double x, double y, double z, const char* who) {
  if (x < 0 || y < 0 || z < 0 || (x + y == 0) || (y + z == 0) || (z + x == 0))
    throw std::domain_error(std::string(who) +
                            ": arguments must be nonnegative with at most one zero");
}

}  // namespace

double carlson_rf(double x, double y, double z) {
  require_nonneg_pair(x, y, z, "carlson_rf");
  double A0 = (x + y + z) / 3;
  double an = A0;
  double q = std::max({std::fabs(A0 - x), std::fabs(A0 - y), std::fabs(A0 - z)}) / kTolRF;
  double x0 = x, y0 = y, z0 = z, mul = 1;
  while (q >= mul * std::fabs(an)) {
    double lam = std::sqrt(x0) * std::sqrt(y0) + std::sqrt(y0) * std::sqrt(z0) +
                 std::sqrt(z0) * std::sqrt(x0);
    an = (an + lam) / 4;
    x0 = (x0 + lam) / 4;
    y0 = (y0 + lam) / 4;
    z0 = (z0 + lam) / 4;
    mul *= 4;
  }
  double xx = (A0 - x) / (mul * an), yy = (A0 - y) / (mul * an), zz = -(xx + yy);
  double e2 = xx * yy - zz * zz, e3 = xx * yy * zz;
  // https://dlmf.nist.gov/19.36.E1
  return (1 - e2 / 10 + e3 / 14 + e2 * e2 / 24 - 3 * e2 * e3 / 44 - 5 * e2 * e2 * e2 / 208 +
          3 * e3 * e3 / 104 + e2 * e2 * e3 / 16) /
         std::sqrt(an);
}

double carlson_rc(double x, double y) {
  if (x < 0 || y <= 0) throw std::domain_error("carlson_rc: requires x >= 0, y > 0");
  double A0 = (x + 2 * y) / 3;
  double an = A0;
  double q = std::fabs(A0 - x) / kTolRC;
  double x0 = x, y0 = y, mul = 1;
  while (q >= mul * std::fabs(an)) {
    double lam = 2 * std::sqrt(x0) * std::sqrt(y0) + y0;
    an = (an + lam) / 4;
    x0 = (x0 + lam) / 4;
    y0 = (y0 + lam) / 4;
    mul *= 4;
  }
  double s = (y - A0) / (mul * an);
  // Carlson (1995) eq 2.26
  return (1 + s * s * (3.0 / 10 + s * (1.0 / 7 + s * (3.0 / 8 + s * (9.0 / 22 +
           s * (159.0 / 208 + s * (9.0 / 8))))))) /
         std::sqrt(an);
}

double carlson_rd(double x, double y, double z) {
  if (x < 0 || y < 0 || z <= 0 || x + y == 0)
    throw std::domain_error("carlson_rd: requires x, y >= 0 (one may vanish), z > 0");
  double A0 = (x + y + 3 * z) / 5;
  double an = A0;
  double q = std::max({std::fabs(A0 - x), std::fabs(A0 - y), std::fabs(A0 - z)}) / kTolRD;
  double x0 = x, y0 = y, z0 = z, mul = 1, s = 0;
  while (q >= mul * std::fabs(an)) {
    double lam = std::sqrt(x0) * std::sqrt(y0) + std::sqrt(y0) * std::sqrt(z0) +
                 std::sqrt(z0) * std::sqrt(x0);
    s += 1 / (mul * std::sqrt(z0) * (z0 + lam));
    an = (an + lam) / 4;
    x0 = (x0 + lam) / 4;
    y0 = (y0 + lam) / 4;
    z0 = (z0 + lam) / 4;
    mul *= 4;
  }
  double xx = (A0 - x) / (mul * an), yy = (A0 - y) / (mul * an), zz = -(xx + yy) / 3;
  double e2 = xx * yy - 6 * zz * zz, e3 = (3 * xx * yy - 8 * zz * zz) * zz,
         e4 = 3 * (xx * yy - zz * zz) * zz * zz, e5 = xx * yy * zz * zz * zz;
  // https://dlmf.nist.gov/19.36.E2
  return 3 * s + (1 - 3 * e2 / 14 + e3 / 6 + 9 * e2 * e2 / 88 - 3 * e4 / 22 -
                  9 * e2 * e3 / 52 + 3 * e5 / 26) /
                     (mul * an * std::sqrt(an));
}

double carlson_rj(double x, double y, double z, double p) {
  require_nonneg_pair(x, y, z, "carlson_rj");
  if (p <= 0) throw std::domain_error("carlson_rj: requires p > 0");
  double A0 = (x + y + z + 2 * p) / 5;
  double an = A0;
  double delta = (p - x) * (p - y) * (p - z);
  double q = std::max({std::fabs(A0 - x), std::fabs(A0 - y), std::fabs(A0 - z),
                       std::fabs(A0 - p)}) /
             kTolRD;
  double x0 = x, y0 = y, z0 = z, p0 = p, mul = 1, mul3 = 1, s = 0;
  while (q >= mul * std::fabs(an)) {
    double lam = std::sqrt(x0) * std::sqrt(y0) + std::sqrt(y0) * std::sqrt(z0) +
                 std::sqrt(z0) * std::sqrt(x0);
    double d0 = (std::sqrt(p0) + std::sqrt(x0)) * (std::sqrt(p0) + std::sqrt(y0)) *
                (std::sqrt(p0) + std::sqrt(z0));
    double e0 = delta / (mul3 * d0 * d0);
    if (1 + e0 <= 0) throw std::domain_error("carlson_rj: outside the circular case");
    s += carlson_rc(1, 1 + e0) / (mul * d0);
    an = (an + lam) / 4;
    x0 = (x0 + lam) / 4;
    y0 = (y0 + lam) / 4;
    z0 = (z0 + lam) / 4;
    p0 = (p0 + lam) / 4;
    mul *= 4;
    mul3 *= 64;
  }
  double xx = (A0 - x) / (mul * an), yy = (A0 - y) / (mul * an), zz = (A0 - z) / (mul * an),
         pp = -(xx + yy + zz) / 2;
  double e2 = xx * yy + yy * zz + zz * xx - 3 * pp * pp,
         e3 = xx * yy * zz + 2 * pp * (e2 + 2 * pp * pp),
         e4 = (2 * xx * yy * zz + pp * (e2 + 3 * pp * pp)) * pp,
         e5 = xx * yy * zz * pp * pp;
  // https://dlmf.nist.gov/19.36.E2 (same tail as RD)
  return 6 * s + (1 - 3 * e2 / 14 + e3 / 6 + 9 * e2 * e2 / 88 - 3 * e4 / 22 -
                  9 * e2 * e3 / 52 + 3 * e5 / 26) /
                     (mul * an * std::sqrt(an));
}

double complete_k(double m) {
  if (m > 1) throw std::domain_error("complete_k: requires m <= 1");
  if (1 - m < 1e-12) return std::numeric_limits<double>::infinity();
  return carlson_rf(0, 1 - m, 1);
}

double complete_e(double m) {
  if (m > 1) throw std::domain_error("complete_e: requires m <= 1");
  if (m == 1) return 1.0;
  return carlson_rf(0, 1 - m, 1) - (m / 3) * carlson_rd(0, 1 - m, 1);
}

double complete_pi(double n, double m) {
  if (n >= 1) throw std::domain_error("complete_pi: requires n < 1");
  if (m >= 1) throw std::domain_error("complete_pi: requires m < 1");
  return carlson_rf(0, 1 - m, 1) + (n / 3) * carlson_rj(0, 1 - m, 1, 1 - n);
}

namespace {

// Reduce u modulo 2K and return the quotient; mc = 1 - m > 0 assumed.
struct Reduced {
  double u0;
  long long j;
  double K;
};

Reduced reduce_2k(double u, double m) {
  double K = complete_k(m);
  if (!std::isfinite(K)) return {u, 0, K};
  double ratio = u / (2 * K);
  long long j = ratio >= 9.2e18 || ratio <= -9.2e18 ? 0 : std::llround(ratio);
  return {u - 2 * K * j, j, K};
}

}  // namespace

double incomplete_e(double u, double m) {
  if (!(m >= 0 && m < 1)) throw std::domain_error("incomplete_e: requires 0 <= m < 1");
  if (m == 0) return u;
  Reduced r = reduce_2k(u, m);
  JacobiTriple t = jacobi_scd(r.u0, m);
  double sn = t.sn, cn = t.cn, dn = t.dn;
  // E(u) = u - (m/3) (sn^3 RD(cn^2, dn^2, 1) + 2 j RD(0, 1-m, 1)); the
  // difference form keeps E - u accurate for small m.
  double tail = sn * sn * sn * carlson_rd(cn * cn, dn * dn, 1);
  if (r.j != 0) tail += 2.0 * r.j * carlson_rd(0, 1 - m, 1);
  return u - (m / 3) * tail;
}

double incomplete_pi(double u, double n, double m) {
  if (!(m >= 0 && m < 1)) throw std::domain_error("incomplete_pi: requires 0 <= m < 1");
  if (n >= 1) throw std::domain_error("incomplete_pi: requires n < 1");
  if (n == 0) return u;
  Reduced r = reduce_2k(u, m);
  JacobiTriple t = jacobi_scd(r.u0, m);
  double sn = t.sn, cn = t.cn, dn = t.dn;
  double tail = sn * sn * sn * carlson_rj(cn * cn, dn * dn, 1, 1 - n * sn * sn);
  if (r.j != 0) tail += 2.0 * r.j * carlson_rj(0, 1 - m, 1, 1 - n);
  return u + (n / 3) * tail;
}

double inv_sn(double x, double m) {
  if (!(std::fabs(x) <= 1)) throw std::domain_error("inv_sn: requires |x| <= 1");
  if (!(m >= 0 && m < 1)) throw std::domain_error("inv_sn: requires 0 <= m < 1");
  return x * carlson_rf(1 - x * x, 1 - m * x * x, 1);
}

namespace {

// AGM ladder for parameter m in (0, 1).  Returns the number of levels filled.
struct Agm {
  std::array<double, 32> a, b, c;
  int n;
};

Agm agm_ladder(double m) {
  Agm g;
  g.a[0] = 1;
  g.b[0] = std::sqrt(1 - m);
  g.c[0] = std::sqrt(m);
  int i = 0;
  while (g.c[i] > 1e-15 && i + 1 < static_cast<int>(g.a.size())) {
    g.a[i + 1] = (g.a[i] + g.b[i]) / 2;
    g.b[i + 1] = std::sqrt(g.a[i] * g.b[i]);
    g.c[i + 1] = (g.a[i] - g.b[i]) / 2;
    ++i;
  }
  g.n = i;
  return g;
}

// Descending recursion for the amplitude of u0 in [-K, K]; phase in
// [-pi/2, pi/2] comes back exactly because |c_i sin| <= a_i.
double agm_phase(const Agm& g, double u0) {
  double phi = std::ldexp(g.a[g.n] * u0, g.n);
  for (int i = g.n; i > 0; --i) {
    double t = g.c[i] / g.a[i] * std::sin(phi);
    phi = (phi + std::asin(std::clamp(t, -1.0, 1.0))) / 2;
  }
  return phi;
}

}  // namespace

JacobiTriple jacobi_scd(double u, double m) {
  if (m == 0) return {std::sin(u), std::cos(u), 1.0};
  if (m == 1) {
    double sn = std::tanh(u);
    double sech = 1 / std::cosh(u);
    return {sn, sech, sech};
  }
  if (m < 0) {
    // https://dlmf.nist.gov/19.7.E5 with m1 = m/(m-1) in (0, 1)
    double m1 = m / (m - 1), f = std::sqrt(1 - m);
    JacobiTriple t = jacobi_scd(f * u, m1);
    return {t.sn / (f * t.dn), t.cn / t.dn, 1 / t.dn};
  }
  if (m > 1) {
    // reciprocal-modulus transformation, A&S 16.11
    double k = std::sqrt(m);
    JacobiTriple t = jacobi_scd(k * u, 1 / m);
    return {t.sn / k, t.dn, t.cn};
  }
  Agm g = agm_ladder(m);
  double K = kPi / (2 * g.a[g.n]);
  double ratio = u / (2 * K);
  long long j = ratio >= 9.2e18 || ratio <= -9.2e18 ? 0 : std::llround(ratio);
  double u0 = u - 2 * K * j;
  double phi = agm_phase(g, u0);
  double sn = std::sin(phi), cn = std::cos(phi);
  double mc = 1 - m;
  // dn^2 = (1-m) + m cn^2 avoids cancellation near sn = 1
  double dn = std::sqrt(mc + m * cn * cn);
  double sign = (j % 2 == 0) ? 1.0 : -1.0;
  return {sign * sn, sign * cn, dn};
}

double jacobi_am(double u, double m) {
  if (!(m >= 0 && m <= 1)) throw std::domain_error("jacobi_am: requires 0 <= m <= 1");
  if (m == 0) return u;
  if (m == 1) return std::asin(std::tanh(u));
  Agm g = agm_ladder(m);
  double K = kPi / (2 * g.a[g.n]);
  double ratio = u / (2 * K);
  long long j = ratio >= 9.2e18 || ratio <= -9.2e18 ? 0 : std::llround(ratio);
  double u0 = u - 2 * K * j;
  return agm_phase(g, u0) + kPi * j;
}

}  // namespace genjac::ell
