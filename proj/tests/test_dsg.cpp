#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "genjac/dsg.hpp"

using namespace genjac::dsg;

namespace {
constexpr double kPi = 3.14159265358979323846;

bool close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::fmax(1.0, std::fabs(b));
}

DSGParams make(double mu, double la, double beta, double A) {
  return DSGParams{mu, la, beta, A, 0.0};
}

double dpotential(double phi, const DSGParams& p) {
  return -(p.mu / p.beta) * std::sin(p.beta * phi) +
         (p.lambda / (2 * p.beta)) * std::sin(p.beta * phi / 2);
}

// integrates phi'' = V'(phi) from the profile's own initial data and compares
// downstream; every analytic branch must satisfy the field equation
void ode_check(const DSGParams& p, double xe, double tol) {
  KinkSolution sol = solve(p);
  double phi = sol.profile(0.0);
  double v = std::sqrt(2 * (potential(phi, p) + p.A));
  const int n = 20000;
  const double h = xe / n;
  for (int i = 0; i < n; ++i) {
    auto f = [&](double ph, double vv) { return std::pair{vv, dpotential(ph, p)}; };
    auto [k1p, k1v] = f(phi, v);
    auto [k2p, k2v] = f(phi + h / 2 * k1p, v + h / 2 * k1v);
    auto [k3p, k3v] = f(phi + h / 2 * k2p, v + h / 2 * k2v);
    auto [k4p, k4v] = f(phi + h * k3p, v + h * k3v);
    phi += h / 6 * (k1p + 2 * k2p + 2 * k3p + k4p);
    v += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
  }
  CHECK(std::fabs(phi - sol.profile(xe)) < tol);
}

void density_check(const DSGParams& p) {
  KinkSolution sol = solve(p);
  for (double x : {0.05, 0.4, 0.9, 1.7}) {
    double eps = sol.density(x);
    double ref = 2 * potential(sol.profile(x), p) + p.A;
    CHECK(std::fabs(eps - ref) <= 1e-9 * std::fmax(1.0, std::fabs(ref)));
  }
}
}  // namespace

TEST_CASE("potential normalization") {
  // min V = 0 at the family's vacuum
  DSGParams a = make(0.5, 4, 1, 0);       // cos(beta phi) vacuum at phi = 0
  CHECK(std::fabs(potential(0, a)) < 1e-15);
  DSGParams b = make(1, 2, 1, 0);         // interior vacuum
  double phis = 2 * std::acos(b.lambda / (4 * b.mu));
  CHECK(std::fabs(potential(phis, b)) < 1e-14);
  DSGParams c = make(-1, -1, 1, 0);       // vacuum at phi = 2 pi / beta
  CHECK(std::fabs(potential(2 * kPi, c)) < 1e-14);
  DSGParams d = make(-0.5, 4, 1, 0);      // vacuum at phi = 0
  CHECK(std::fabs(potential(0, d)) < 1e-15);
  for (const DSGParams& p : {a, b, c, d}) {
    for (double phi = -7; phi < 7; phi += 0.13) CHECK(potential(phi, p) > -1e-13);
  }
  // derivative helper used below agrees with the potential
  for (double phi : {0.4, 2.2, 5.0}) {
    double fd = (potential(phi + 1e-6, a) - potential(phi - 1e-6, a)) / 2e-6;
    CHECK(std::fabs(fd - dpotential(phi, a)) < 1e-8);
  }
}

TEST_CASE("classification map") {
  auto tag = [](double mu, double la, double beta, double A) {
    return classify(make(mu, la, beta, A)).case_tag;
  };
  // lambda >= 4 mu > 0: trig threshold at t = (la-4mu)^2/(8mu), lower end at -2la
  CHECK(tag(0.5, 4, 1, 0.5) == CaseTag::A1_KinkChain);
  CHECK(tag(0.5, 4, 1, 1.0) == CaseTag::A3_TrigPoint);
  CHECK(tag(0.5, 4, 1, 1.5) == CaseTag::A4_ComplexModuli);
  CHECK(tag(0.5, 4, 1, 15) == CaseTag::A4_ComplexModuli);
  CHECK(tag(0.5, 4, 1, 0) == CaseTag::A2_SingleKink);
  CHECK(tag(0.5, 4, 1, -1) == CaseTag::A5_KAKChain);
  CHECK(tag(0.5, 4, 1, -7.9) == CaseTag::A5_KAKChain);
  CHECK(tag(0.5, 4, 1, -8) == CaseTag::A6_ConstantEndpoint);
  CHECK_THROWS_AS(classify(make(0.5, 4, 1, -9)), std::domain_error);
  CHECK(tag(0.5, 4, 2, 0.125) == CaseTag::A1_KinkChain);  // thresholds scale as beta^2 A
  CHECK(tag(1, 6, 1, 0.5) == CaseTag::A3_TrigPoint);
  CHECK(tag(1, 6, 1, 0.3) == CaseTag::A1_KinkChain);

  // mu = 0: sine-Gordon ladder
  CHECK(tag(0, 4, 1, 0.7) == CaseTag::A3_SineGordon);
  CHECK(tag(0, 4, 1, 0) == CaseTag::A2_SingleKink);
  CHECK(tag(0, 4, 1, -2) == CaseTag::A5_KAKChain);
  CHECK(tag(0, 4, 1, -8) == CaseTag::A6_ConstantEndpoint);
  CHECK_THROWS_AS(classify(make(0, 4, 1, -9)), std::domain_error);
  CHECK_THROWS_AS(classify(make(0, -1, 1, 0.5)), std::domain_error);
  CHECK_THROWS_AS(classify(make(0, 0, 1, 0.5)), std::domain_error);

  // |lambda| < 4 mu: interior vacuum, endpoint at t = -(la+4mu)^2/(8mu)
  CHECK(tag(1, 2, 1, 0.5) == CaseTag::B1_ComplexModuli);
  CHECK(tag(1, 2, 1, 0) == CaseTag::B2_SingleLargeSmall);
  CHECK(tag(1, 2, 1, -0.2) == CaseTag::B3_KAKChain);
  CHECK(tag(1, 2, 1, -0.5) == CaseTag::B3_KAKChain);  // m2 = 1 seam stays in branch
  CHECK(tag(1, 2, 1, -1) == CaseTag::B5_LargeKAK);
  CHECK(tag(1, 2, 1, -4.4) == CaseTag::B5_LargeKAK);
  CHECK(tag(1, 2, 1, -4.5) == CaseTag::B6_LargeEndpoint);
  CHECK_THROWS_AS(classify(make(1, 2, 1, -5)), std::domain_error);
  CHECK(tag(1, -2, 1, 0.5) == CaseTag::B1_ComplexModuli);
  CHECK(tag(1, -2, 1, 0) == CaseTag::B2_SingleLargeSmall);
  CHECK(tag(1, -2, 1, -0.2) == CaseTag::B3_KAKChain);
  CHECK(tag(1, -2, 1, -0.5) == CaseTag::B4_SmallEndpoint);
  CHECK_THROWS_AS(classify(make(1, -2, 1, -0.6)), std::domain_error);
  CHECK(tag(1, 0, 1, 0) == CaseTag::B2_SingleLargeSmall);
  CHECK(tag(1, 0, 1, -1) == CaseTag::B3_KAKChain);
  CHECK(tag(1, 0, 1, -2) == CaseTag::B4_SmallEndpoint);
  CHECK_THROWS_AS(classify(make(1, 0, 1, -3)), std::domain_error);
  CHECK_THROWS_AS(classify(make(1, -6, 1, 0.5)), std::domain_error);  // lambda <= -4mu

  // mu < 0
  CHECK(tag(-1, -1, 1, 2) == CaseTag::C_Molecule);
  CHECK(tag(-0.5, -3, 1, 2) == CaseTag::C_Molecule);
  CHECK_THROWS_AS(classify(make(-1, -1, 1, 0)), std::domain_error);
  CHECK_THROWS_AS(classify(make(-1, -1, 1, -1)), std::domain_error);
  CHECK(tag(-0.5, 4, 1, 0.5) == CaseTag::D1_Chain);
  CHECK(tag(-0.5, 4, 1, 0) == CaseTag::A2_SingleKink);
  CHECK(tag(-0.5, 4, 1, -2) == CaseTag::D2_Bounce);
  CHECK(tag(-0.5, 4, 1, -8) == CaseTag::A6_ConstantEndpoint);
  CHECK_THROWS_AS(classify(make(-0.5, 4, 1, -9)), std::domain_error);
  CHECK_THROWS_AS(classify(make(-1, 1, 1, -0.5)), std::domain_error);  // lambda <= -4mu side

  // outright invalid input
  CHECK_THROWS_AS(classify(make(0.5, 4, 0, 0.5)), std::domain_error);
  CHECK_THROWS_AS(classify(make(0.5, 4, -1, 0.5)), std::domain_error);
  CHECK_THROWS_AS(classify(make(0.5, 2, 1, 0)), std::domain_error);  // la = 4mu, A = 0 corner
}

TEST_CASE("regime data") {
  Regime r = classify(make(0.5, 4, 1, 0.5));
  CHECK_FALSE(r.conjugate_pair);
  CHECK(close(r.g, 8.5, 1e-15));
  CHECK(close(r.w0sq, 8.5 / 8, 1e-15));
  CHECK(close(r.m1.real(), 0.87226041910271730, 1e-13));
  CHECK(close(r.m2.real(), 0.53950428677963570, 1e-13));
  CHECK(r.m1.imag() == 0.0);
  CHECK(close(r.m1.real() + r.m2.real(), r.sum, 1e-14));
  CHECK(close(r.m1.real() * r.m2.real(), r.prod, 1e-14));

  Regime rc = classify(make(1, 2, 1, 1));
  CHECK(rc.conjugate_pair);
  CHECK(close(rc.g, 5.5, 1e-15));
  CHECK(close(rc.m1.real(), 1.0909090909090909, 1e-13));
  CHECK(close(rc.m1.imag(), 0.51425947722658030, 1e-13));
  CHECK(close(rc.m2.imag(), -rc.m1.imag(), 1e-15));

  Regime ra2 = classify(make(0.5, 4, 1, 0));
  CHECK(ra2.m1.real() == 1.0);
  CHECK(close(ra2.m2.real(), 0.5, 1e-15));  // 4 mu / lambda

  Regime rb2 = classify(make(1, 2, 1, 0));
  CHECK(close(rb2.m1.real(), 8.0 / 6.0, 1e-14));  // double root 8mu/(4mu+la)
  CHECK(close(rb2.m2.real(), 8.0 / 6.0, 1e-14));

  Regime re = classify(make(0.5, 4, 1, -8));
  CHECK(re.w0sq == 0.0);

  Regime rcm = classify(make(-1, -1, 1, 2));
  CHECK(close(rcm.g, 2.0, 1e-15));  // molecule family: g = t
  CHECK(close(rcm.sum, -5.0, 1e-14));
  CHECK(close(rcm.prod, -4.0, 1e-14));
}

TEST_CASE("frozen chain observables") {
  // cos-vacuum chain
  CHECK(close(chain_energy(make(0.5, 4, 1, 0.5)), 29.76251282096290029, 1e-12));
  CHECK(close(radius(make(0.5, 4, 1, 0.5)), 6.0333188384877174046, 1e-12));
  KinkSolution a1 = solve(make(0.5, 4, 1, 0.5));
  CHECK(close(a1.profile(1.0), 9.7028175531287887409, 1e-12));
  CHECK(close(a1.profile(0.25), 7.2983410850987943227, 1e-12));
  CHECK(a1.energy.has_value());
  CHECK(a1.periodicity == Periodicity::QuasiPeriodic_4piOverBeta);

  // trigonometric threshold
  CHECK(close(chain_energy(make(0.5, 4, 1, 1)), 30.412864184619473594, 1e-12));
  // sine-Gordon limit
  CHECK(close(chain_energy(make(0, 4, 1, 0.7)), 32.71946288121282921, 1e-12));
  // kink-antikink chain
  CHECK(close(chain_energy(make(0.5, 4, 1, -4)), 24.238948764476951941, 1e-9));
  CHECK(close(radius(make(0.5, 4, 1, -4)), 3.2161552675608062899, 1e-12));
  // conjugate moduli
  CHECK(close(chain_energy(make(1, 2, 1, 1)), 20.323708777696448421, 1e-9));
  CHECK(close(radius(make(1, 2, 1, 1)), 6.4613481425713809658, 1e-12));
  // double-well molecule
  CHECK(close(chain_energy(make(-1, -1, 1, 2)), 26.062045712707118485, 1e-9));
  CHECK(close(radius(make(-1, -1, 1, 2)), 4.580136819862949963, 1e-12));
}

TEST_CASE("field equation satisfied by every branch") {
  ode_check(make(0.5, 4, 1, 0.5), 1.0, 1e-6);    // A1
  ode_check(make(0.5, 4, 1, 1.0), 1.0, 1e-6);    // A3 trig
  ode_check(make(0, 4, 1, 0.7), 1.0, 1e-6);      // A3 sine-Gordon
  ode_check(make(0.5, 4, 1, 1.5), 1.0, 1e-6);    // A4 conjugate
  ode_check(make(0.5, 4, 1, -4), 0.8, 1e-6);     // A5
  ode_check(make(0.5, 4, 1, 0), 1.2, 1e-6);      // A2 single kink
  ode_check(make(1, 2, 1, 1), 1.0, 1e-6);        // B1
  ode_check(make(1, 2, 1, 0), 1.0, 1e-6);        // B2
  ode_check(make(1, 2, 1, -0.2), 0.9, 1e-6);     // B3
  ode_check(make(1, -2, 1, -0.2), 0.9, 1e-6);    // B3, negative lambda
  ode_check(make(1, 2, 1, -1), 0.8, 1e-6);       // B5
  ode_check(make(-1, -1, 1, 2), 1.0, 1e-6);      // C
  ode_check(make(-0.5, 4, 1, 0.5), 1.0, 1e-6);   // D1
  ode_check(make(-0.5, 4, 1, -2), 0.8, 1e-6);    // D2
}

TEST_CASE("density equals 2V + A on shell") {
  density_check(make(0.5, 4, 1, 0.5));
  density_check(make(0.5, 4, 1, 1.5));
  density_check(make(0.5, 4, 1, -4));
  density_check(make(1, 2, 1, 1));
  density_check(make(1, 2, 1, -0.2));
  density_check(make(1, 2, 1, -1));
  density_check(make(-1, -1, 1, 2));
  density_check(make(-0.5, 4, 1, 0.5));
  density_check(make(-0.5, 4, 1, -2));
  density_check(make(0, 4, 1, 0.7));
}

TEST_CASE("periodicity structure") {
  KinkSolution a1 = solve(make(0.5, 4, 1, 0.5));
  double R = a1.R;
  for (double x : {0.2, 1.1}) {
    CHECK(close(a1.profile(x + R), a1.profile(x) + 4 * kPi, 1e-10));
    CHECK(std::fabs(a1.density(x + R) - a1.density(x)) < 1e-9);
  }
  KinkSolution a5 = solve(make(0.5, 4, 1, -4));
  CHECK(a5.periodicity == Periodicity::Periodic_2R);
  for (double x : {0.2, 0.9}) {
    CHECK(close(a5.profile(x + 2 * a5.R), a5.profile(x), 1e-10));
    CHECK(std::fabs(a5.density(x + a5.R) - a5.density(x)) < 1e-9);
  }
  KinkSolution b1 = solve(make(1, 2, 1, 1));
  CHECK(b1.periodicity == Periodicity::QuasiPeriodic_4piOverBeta);
  CHECK(close(b1.profile(0.3 + b1.R), b1.profile(0.3) + 4 * kPi, 1e-10));
  KinkSolution c = solve(make(-1, -1, 1, 2));
  CHECK(c.periodicity == Periodicity::QuasiPeriodic_4piOverBeta);
  CHECK(close(c.profile(0.3 + c.R), c.profile(0.3) + 4 * kPi, 1e-10));
}

TEST_CASE("single kinks and charges") {
  KinkSolution a2 = solve(make(0.5, 4, 1, 0));
  CHECK(std::isinf(a2.R));
  CHECK(a2.periodicity == Periodicity::Infinite);
  CHECK(a2.Q.has_value());
  CHECK(close(*a2.Q, 4 * kPi, 1e-13));
  CHECK(close(a2.profile(0.0), 2 * kPi, 1e-13));
  CHECK(close(a2.profile(40.0), 4 * kPi, 1e-9));    // upper vacuum
  CHECK(close(a2.profile(-40.0), 0.0, 1e-9));       // lower vacuum
  CHECK(close(topological_charge(make(0.5, 4, 1, 0)), 4 * kPi, 1e-13));

  CHECK(close(topological_charge(make(1, 2, 1, 0)), 8 * kPi / 3, 1e-13));
  KinkSolution b2m = mirror_solution(make(1, 2, 1, 0));
  CHECK(b2m.Q.has_value());
  CHECK(close(*b2m.Q, 4 * kPi / 3, 1e-13));

  CHECK_THROWS_AS(topological_charge(make(0.5, 4, 1, 0.5)), std::domain_error);
  CHECK_THROWS_AS(chain_energy(make(0.5, 4, 1, 0)), std::domain_error);
}

TEST_CASE("constant endpoint solutions") {
  KinkSolution a6 = solve(make(0.5, 4, 1, -8));
  CHECK(close(a6.R, 2 * kPi / std::sqrt(6.0), 1e-14));
  CHECK(close(a6.profile(0.7), 2 * kPi, 1e-14));
  CHECK(close(a6.density(0.7), 8.0, 1e-12));  // 2 V(2 pi) + A = 16 - 8
  CHECK(a6.energy.has_value());
  CHECK(close(*a6.energy, 8.0 * 2 * kPi / std::sqrt(6.0), 1e-12));

  KinkSolution b4 = solve(make(1, -2, 1, -0.5));
  CHECK(close(b4.R, 2 * kPi / std::sqrt(2.0), 1e-14));
  CHECK(close(b4.density(0.3), 0.5, 1e-12));

  KinkSolution b6 = solve(make(1, 2, 1, -4.5));
  CHECK(close(b6.R, 2 * kPi / std::sqrt(6.0), 1e-14));
  CHECK(close(b6.density(0.3), 4.5, 1e-12));
}

TEST_CASE("mirror branch") {
  DSGParams p = make(1, 2, 1, 1);
  KinkSolution m = mirror_solution(p);
  KinkSolution ref = solve(make(1, -2, 1, 1));
  for (double x : {0.0, 0.4, 1.3}) {
    CHECK(close(m.profile(x), ref.profile(x) - 2 * kPi, 1e-12));
    CHECK(close(m.density(x), ref.density(x), 1e-12));
  }
  // branch II solves the original field equation
  DSGParams q = make(1, 2, 1, -0.2);
  KinkSolution mq = mirror_solution(q);
  double phi = mq.profile(0.0);
  double v = std::sqrt(2 * (potential(phi, q) + q.A));
  const int n = 20000;
  const double h = 0.9 / n;
  for (int i = 0; i < n; ++i) {
    auto f = [&](double ph, double vv) { return std::pair{vv, dpotential(ph, q)}; };
    auto [k1p, k1v] = f(phi, v);
    auto [k2p, k2v] = f(phi + h / 2 * k1p, v + h / 2 * k1v);
    auto [k3p, k3v] = f(phi + h / 2 * k2p, v + h / 2 * k2v);
    auto [k4p, k4v] = f(phi + h * k3p, v + h * k3v);
    phi += h / 6 * (k1p + 2 * k2p + 2 * k3p + k4p);
    v += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
  }
  CHECK(std::fabs(phi - mq.profile(0.9)) < 1e-6);

  CHECK_THROWS_AS(mirror_solution(make(0.5, 4, 1, 0.5)), std::domain_error);
  // branch II only exists down to the mirrored endpoint
  CHECK_THROWS_AS(mirror_solution(make(1, 2, 1, -1)), std::domain_error);
}

TEST_CASE("continuity across the trigonometric threshold") {
  KinkSolution mid = solve(make(0.5, 4, 1, 1.0));
  KinkSolution lo = solve(make(0.5, 4, 1, 1.0 - 1e-7));
  KinkSolution hi = solve(make(0.5, 4, 1, 1.0 + 1e-7));
  for (double x : {0.3, 0.7, 1.4}) {
    CHECK(std::fabs(lo.profile(x) - mid.profile(x)) < 1e-5);
    CHECK(std::fabs(hi.profile(x) - mid.profile(x)) < 1e-5);
  }
  CHECK(close(chain_energy(make(0.5, 4, 1, 1.0 - 1e-7)),
              chain_energy(make(0.5, 4, 1, 1.0)), 1e-6));
  // and across the m2 = 1 seam inside the interior-vacuum family
  KinkSolution s1 = solve(make(1, 2, 1, -0.5 + 1e-8));
  KinkSolution s2 = solve(make(1, 2, 1, -0.5 - 1e-8));
  for (double x : {0.3, 0.8}) CHECK(std::fabs(s1.profile(x) - s2.profile(x)) < 1e-4);
}

TEST_CASE("radius matches solve") {
  for (double A : {0.5, 1.5, -4.0}) {
    CHECK(radius(make(0.5, 4, 1, A)) == solve(make(0.5, 4, 1, A)).R);
  }
}
