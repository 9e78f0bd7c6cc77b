#pragma once

// Static kink chains of the double sine-Gordon model
//
//   V(phi) = (mu/beta^2) cos(beta phi) - (lambda/beta^2) cos(beta phi/2) + C,
//
// with C fixed so that min V = 0.  Solutions of the first-order equation
// (1/2) phi'^2 = V(phi) + A are classified by the sign structure of
// (mu, lambda, A) into sixteen regimes and built from the two-modulus
// elliptic machinery: writing t = beta^2 A, every oscillatory case reduces
// to a squared-moduli pair (m1, m2) with
//
//   m1 + m2 = 2(4 mu + lambda)/g,   m1 m2 = 8 mu / g,   w0^2 = g/8,
//
// where g = t + 2 lambda (cos(beta phi) vacuum families),
// g = t + (lambda+4mu)^2/(8 mu) (interior-vacuum families), or g = t
// (double-well molecule family).  The pair may be negative or complex
// conjugate; all user-facing arithmetic stays real.

#include <complex>
#include <functional>
#include <optional>

namespace genjac::dsg {

struct DSGParams {
  double mu;      // cos(beta phi) coupling
  double lambda;  // cos(beta phi/2) coupling
  double beta;    // compacton scale, > 0
  double A;       // first-integral constant (energy density offset)
  double x0 = 0;  // kink center; the paper leaves it free
};

enum class CaseTag {
  A1_KinkChain,
  A2_SingleKink,
  A3_TrigPoint,
  A3_SineGordon,
  A4_ComplexModuli,
  A5_KAKChain,
  A6_ConstantEndpoint,
  B1_ComplexModuli,
  B2_SingleLargeSmall,
  B3_KAKChain,
  B4_SmallEndpoint,
  B5_LargeKAK,
  B6_LargeEndpoint,
  C_Molecule,
  D1_Chain,
  D2_Bounce,
};

const char* to_string(CaseTag tag);

struct Regime {
  CaseTag case_tag;
  std::complex<double> m1;  // squared modulus, larger or +conj root
  std::complex<double> m2;  // squared modulus, smaller or -conj root
  bool conjugate_pair = false;
  double t = 0;     // beta^2 A
  double g = 0;     // moduli scale; m1+m2 = 2(4mu+lambda)/g, m1 m2 = 8mu/g
  double sum = 0;   // Re(m1 + m2)
  double prod = 0;  // Re(m1 m2)
  double w0sq = 0;  // g/8, squared frequency scale
};

enum class Periodicity { QuasiPeriodic_4piOverBeta, Periodic_2R, Infinite };

struct KinkSolution {
  std::function<double(double)> profile;  // x -> phi(x)
  std::function<double(double)> density;  // x -> eps(x), energy density
  double R;                               // period of the density; +inf at A = 0
  Periodicity periodicity;
  std::optional<double> energy;  // closed form, where one exists
  std::optional<double> Q;       // topological charge, A = 0 limits only
  Regime regime;
};

// Potential with the vacuum constant folded in (min V = 0).
double potential(double phi, const DSGParams& p);

// Maps parameters to a regime; throws std::domain_error outside every
// solvable region.  Threshold comparisons carry a 1e-12 relative band so
// boundary loci get their dedicated tags.
Regime classify(const DSGParams& p);

// Constructs the kink chain for the classified regime.
KinkSolution solve(const DSGParams& p);

// Chain period; +inf in the single-kink (A = 0) limits.
double radius(const DSGParams& p);

// Energy of one period: closed form where available, else adaptive
// quadrature of the density (tolerance 1e-10).  Throws std::domain_error
// when the period is infinite.
double chain_energy(const DSGParams& p);

// Topological charge of the A = 0 single-kink solutions; domain error
// elsewhere.
double topological_charge(const DSGParams& p);

// The second solution branch of the interior-vacuum (|lambda| < 4 mu)
// phase, built from the lambda -> -lambda symmetry:
// phi_II(x; lambda) = phi_I(x; -lambda) - 2 pi / beta.
KinkSolution mirror_solution(const DSGParams& p);

}  // namespace genjac::dsg
