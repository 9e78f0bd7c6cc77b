#pragma once

// Real elliptic integrals and Jacobi elliptic functions in double precision.
//
// Carlson symmetric forms (RF, RC, RD, RJ) are computed with the duplication
// method of Carlson (1995), Numerical Algorithms 10, 13-98; see also DLMF
// chapter 19.36.  Legendre forms are thin wrappers over the symmetric ones.
// Jacobi functions use the descending Landen / arithmetic-geometric-mean
// recursion (Abramowitz & Stegun 16.4, 17.6) and are extended to modulus
// parameters m < 0 and m > 1 by the standard real transformations
// (DLMF 19.7, A&S 16.10-16.11).

#include <stdexcept>

namespace genjac::ell {

// sn, cn, dn at a common argument.
struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

// Symmetric integral RF(x, y, z).  Requires x, y, z >= 0 with at most one
// of them zero.  Relative accuracy about 3e-16.
double carlson_rf(double x, double y, double z);

// Degenerate symmetric integral RC(x, y) = RF(x, y, y) for x >= 0, y > 0.
double carlson_rc(double x, double y);

// Degenerate symmetric integral RD(x, y, z) = RJ(x, y, z, z).
// Requires x, y >= 0 with at most one of them zero, and z > 0.
double carlson_rd(double x, double y, double z);

// Symmetric integral RJ(x, y, z, p) for the circular case: x, y, z >= 0
// with at most one of them zero, and p > 0.
double carlson_rj(double x, double y, double z, double p);

// Complete integrals in the parameter convention (m = k^2).
// complete_k(m) = K(m), finite for m < 1; returns +inf when 1 - m < 1e-12,
// throws std::domain_error for m >= 1.
double complete_k(double m);

// complete_e(m) = E(m) for m <= 1; E(1) = 1.
double complete_e(double m);

// complete_pi(n, m) = Pi(n, m), circular characteristic n < 1, m < 1.
double complete_pi(double n, double m);

// Incomplete integrals of the second and third kind as functions of the
// Jacobi argument u (so that incomplete_e(F(phi|m), m) = E(phi|m)).
// Valid for any real u and 0 <= m < 1; n < 1 for incomplete_pi.
double incomplete_e(double u, double m);
double incomplete_pi(double u, double n, double m);

// Inverse of x = sn(u, m) on the principal branch: |x| <= 1, 0 <= m < 1.
double inv_sn(double x, double m);

// sn, cn, dn of u for any real parameter m.  m in [0, 1] uses the AGM
// recursion directly; m < 0 and m > 1 are reduced to it.
JacobiTriple jacobi_scd(double u, double m);

// Continuous amplitude am(u, m), increasing in u, for 0 <= m <= 1.
// sin(am) = sn, cos(am) = cn.
double jacobi_am(double u, double m);

}  // namespace genjac::ell
