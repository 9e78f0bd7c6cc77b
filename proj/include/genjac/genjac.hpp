#pragma once

// A two-modulus generalization of the Jacobi elliptic functions.
//
// The quadruple (s, c, d1, d2) inverts the hyperelliptic integral
//
//   u = integral_0^s dt / sqrt((1-t^2)(1-k1^2 t^2)(1-k2^2 t^2)),
//
// with moduli 0 <= k2 <= k1 <= 1, and reduces to (sn, cn, dn, 1) at k2 = 0.
// Everything is computed through the classical kernel at effective modulus
// kappa^2 = (k1^2-k2^2)/(1-k2^2) and scaled argument k2c*u, which keeps all
// four functions real and bounded for real u.

#include <stdexcept>

namespace genjac {

// Signals a loss of meaning in finite arithmetic (vanishing denominators,
// overflow) as opposed to a violated precondition.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A quotient was requested exactly at a zero of its denominator.
struct pole_error : numeric_error {
  using numeric_error::numeric_error;
};

struct Moduli {
  double k1 = 0;
  double k2 = 0;
  double kappa2 = 0;  // effective squared modulus (k1^2-k2^2)/(1-k2^2)
  double k1c = 1;     // sqrt(1-k1^2)
  double k2c = 1;     // sqrt(1-k2^2)
  double calK = 0;    // quarter period K(kappa)/k2c; +inf when k1 = 1
  double calKc = 0;   // companion period K(kappa')/k2c
  bool degenerate = false;  // k1 == k2 (trigonometric) or k1 == 1 (hyperbolic)
};

// Validates 0 <= k2 <= k1 <= 1 and fills the derived fields.
Moduli moduli_new(double k1, double k2);

struct GenJacobiValues {
  double s;   // in [-1, 1]
  double c;   // in [-1, 1]
  double d1;  // in [k1c, 1]
  double d2;  // in [k2c, 1]
};

enum class SpecialPoint { HalfK, K, ThreeHalfK };

enum class FnId { S, C, D1, D2 };

// Integrands with a closed-form antiderivative: the four functions, their
// pairwise products, the squares, and the product of squared d's.
enum class IntegrandId {
  S, C, D1, D2,
  SC, SD1, SD2, CD1, CD2, D1D2,
  SSq, CSq, D1Sq, D2Sq, D1SqD2Sq,
};

// All four functions at u.  Requires k1 < 1.
GenJacobiValues eval(double u, const Moduli& mod);

// Continuous amplitude a(u) with sin(a) = s; a(u + 2 calK) = a(u) + pi.
// Requires k1 < 1.
double amplitude(double u, const Moduli& mod);

struct AddResult {
  GenJacobiValues plus;   // values at u + v
  GenJacobiValues minus;  // values at u - v
};

// Addition theorem evaluated from the values at u and v alone.
AddResult add(double u, double v, const Moduli& mod);

struct HalfSquares {
  double s2;
  double c2;
  double d12;
  double d22;
};

// Squared half-argument values from the values at u; u must lie in
// [0, 2 calK] where the square roots are single-valued.
HalfSquares half(double u, const Moduli& mod);

// Values at u + calK from the values at u.
GenJacobiValues shift_K(double u, const Moduli& mod);

// Closed-form values at calK/2, calK, 3 calK/2.
GenJacobiValues special_value(SpecialPoint p, const Moduli& mod);

// Quotient num(u)/den(u); throws pole_error at exact zeros of the
// denominator.
double ratio(double u, const Moduli& mod, FnId num, FnId den);

// Antiderivative F with F(0) = 0 of the named integrand, on the principal
// interval u in [0, calK) where every branch choice is trivial.
double antiderivative(IntegrandId f, double u, const Moduli& mod);

// The defining integral u(x) for x in [0, 1], by adaptive quadrature of the
// angular form; inverse of x = eval(u).s on [0, calK].  Requires k1 < 1.
double defining_integral(double x, const Moduli& mod);

// Field selector matching FnId.
double component(const GenJacobiValues& v, FnId id);

}  // namespace genjac
