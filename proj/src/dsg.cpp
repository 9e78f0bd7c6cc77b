#include "genjac/dsg.hpp"

#include <cmath>
#include <limits>

#include "genjac/elliptic.hpp"
#include "genjac/genjac.hpp"
#include "genjac/quadrature.hpp"

namespace genjac::dsg {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative band for regime-threshold comparisons; boundary loci (A = 0,
// trigonometric point, endpoints) map to their dedicated tags inside it.
bool near_band(double a, double b, double scale) {
  return std::fabs(a - b) <=
         1e-12 * std::max({1.0, std::fabs(a), std::fabs(b), scale});
}

// Larger/smaller real roots of m^2 - S m + P, computed without cancellation.
void fill_real_pair(Regime& r, double S, double P) {
  double disc = S * S - 4 * P;
  if (disc < 0) disc = 0;
  double sq = std::sqrt(disc);
  double hi, lo;
  if (S >= 0) {
    hi = (S + sq) / 2;
    lo = hi != 0 ? P / hi : 0.0;
  } else {
    lo = (S - sq) / 2;
    hi = lo != 0 ? P / lo : 0.0;
  }
  if (hi < lo) std::swap(hi, lo);
  r.m1 = hi;
  r.m2 = lo;
  r.conjugate_pair = false;
}

void fill_conjugate_pair(Regime& r, double S, double P) {
  double disc = 4 * P - S * S;
  if (disc < 0) disc = 0;
  r.m1 = {S / 2, std::sqrt(disc) / 2};
  r.m2 = std::conj(r.m1);
  r.conjugate_pair = true;
}

// Both m's diverge as 1/g at an endpoint, but their product over sum tends
// to 4 mu / (4 mu + lambda); report that finite limit as m2.
void fill_endpoint_pair(Regime& r, double mu, double lambda) {
  r.m1 = kInf;
  r.m2 = 4 * mu / (4 * mu + lambda);
  r.conjugate_pair = false;
}

void fill_symmetric(Regime& r, double g, double mu, double lambda) {
  r.g = g;
  r.w0sq = g / 8;
  r.sum = g != 0 ? 2 * (4 * mu + lambda) / g : kInf;
  r.prod = g != 0 ? 8 * mu / g : kInf;
}

}  // namespace

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::A1_KinkChain: return "A1_KinkChain";
    case CaseTag::A2_SingleKink: return "A2_SingleKink";
    case CaseTag::A3_TrigPoint: return "A3_TrigPoint";
    case CaseTag::A3_SineGordon: return "A3_SineGordon";
    case CaseTag::A4_ComplexModuli: return "A4_ComplexModuli";
    case CaseTag::A5_KAKChain: return "A5_KAKChain";
    case CaseTag::A6_ConstantEndpoint: return "A6_ConstantEndpoint";
    case CaseTag::B1_ComplexModuli: return "B1_ComplexModuli";
    case CaseTag::B2_SingleLargeSmall: return "B2_SingleLargeSmall";
    case CaseTag::B3_KAKChain: return "B3_KAKChain";
    case CaseTag::B4_SmallEndpoint: return "B4_SmallEndpoint";
    case CaseTag::B5_LargeKAK: return "B5_LargeKAK";
    case CaseTag::B6_LargeEndpoint: return "B6_LargeEndpoint";
    case CaseTag::C_Molecule: return "C_Molecule";
    case CaseTag::D1_Chain: return "D1_Chain";
    case CaseTag::D2_Bounce: return "D2_Bounce";
  }
  return "unknown";
}

double potential(double phi, const DSGParams& p) {
  double b2 = p.beta * p.beta;
  double mu = p.mu, la = p.lambda;
  double c;
  if (mu > 0 && std::fabs(la) <= 4 * mu)
    c = (la * la / (8 * mu) + mu) / b2;
  else if (la >= 0)
    c = (la - mu) / b2;
  else
    c = -(la + mu) / b2;
  return (mu * std::cos(p.beta * phi) - la * std::cos(p.beta * phi / 2)) / b2 + c;
}

Regime classify(const DSGParams& p) {
  if (!(p.beta > 0) || !std::isfinite(p.beta) || !std::isfinite(p.mu) ||
      !std::isfinite(p.lambda) || !std::isfinite(p.A))
    throw std::domain_error("classify: requires finite parameters and beta > 0");
  double mu = p.mu, la = p.lambda;
  double t = p.beta * p.beta * p.A;
  double s0 = std::fabs(la) + 4 * std::fabs(mu);
  if (s0 == 0) throw std::domain_error("classify: flat potential has no kinks");
  Regime r;
  r.t = t;

  if (mu == 0) {
    if (la <= 0)
      throw std::domain_error("classify: mu = 0 requires lambda > 0");
    if (near_band(t, 0, s0)) {
      r.case_tag = CaseTag::A2_SingleKink;
      fill_symmetric(r, 2 * la, mu, la);
      r.m1 = 1.0;
      r.m2 = 0.0;
      r.conjugate_pair = false;
      return r;
    }
    if (t > 0) {
      r.case_tag = CaseTag::A3_SineGordon;
      fill_symmetric(r, t + 2 * la, mu, la);
      fill_real_pair(r, r.sum, r.prod);
      return r;
    }
    if (near_band(t, -2 * la, s0)) {
      r.case_tag = CaseTag::A6_ConstantEndpoint;
      fill_symmetric(r, 0, mu, la);
      r.w0sq = 0;
      fill_endpoint_pair(r, mu, la);
      return r;
    }
    if (t > -2 * la) {
      r.case_tag = CaseTag::A5_KAKChain;
      fill_symmetric(r, t + 2 * la, mu, la);
      fill_real_pair(r, r.sum, r.prod);
      return r;
    }
    throw std::domain_error("classify: A below the constant endpoint (t < -2 lambda)");
  }

  if (mu > 0) {
    if (la >= 4 * mu) {
      // widely separated wells: chains wind through the cos(beta phi) vacua
      double t_trig = (la - 4 * mu) * (la - 4 * mu) / (8 * mu);
      if (near_band(t, 0, s0)) {
        if (la - 4 * mu <= 1e-12 * s0)
          throw std::domain_error(
              "classify: degenerate boundary lambda = 4 mu at A = 0");
        r.case_tag = CaseTag::A2_SingleKink;
        fill_symmetric(r, 2 * la, mu, la);
        r.m1 = 1.0;
        r.m2 = 4 * mu / la;
        r.conjugate_pair = false;
        return r;
      }
      if (t > 0) {
        fill_symmetric(r, t + 2 * la, mu, la);
        if (near_band(t, t_trig, s0)) {
          r.case_tag = CaseTag::A3_TrigPoint;
          double m0 = 8 * mu / (4 * mu + la);
          r.m1 = m0;
          r.m2 = m0;
          r.conjugate_pair = false;
        } else if (t > t_trig) {
          r.case_tag = CaseTag::A4_ComplexModuli;
          fill_conjugate_pair(r, r.sum, r.prod);
        } else {
          r.case_tag = CaseTag::A1_KinkChain;
          fill_real_pair(r, r.sum, r.prod);
        }
        return r;
      }
      if (near_band(t, -2 * la, s0)) {
        r.case_tag = CaseTag::A6_ConstantEndpoint;
        fill_symmetric(r, 0, mu, la);
        r.w0sq = 0;
        fill_endpoint_pair(r, mu, la);
        return r;
      }
      if (t > -2 * la) {
        r.case_tag = CaseTag::A5_KAKChain;
        fill_symmetric(r, t + 2 * la, mu, la);
        fill_real_pair(r, r.sum, r.prod);
        return r;
      }
      throw std::domain_error("classify: A below the constant endpoint (t < -2 lambda)");
    }
    if (la > -4 * mu) {
      // interior vacua: |lambda| < 4 mu
      double t_end = -(la + 4 * mu) * (la + 4 * mu) / (8 * mu);
      double g = t - t_end;
      if (near_band(t, 0, s0)) {
        r.case_tag = CaseTag::B2_SingleLargeSmall;
        fill_symmetric(r, -t_end, mu, la);
        double m0 = 8 * mu / (4 * mu + la);
        r.m1 = m0;
        r.m2 = m0;
        r.conjugate_pair = false;
        return r;
      }
      if (t > 0) {
        r.case_tag = CaseTag::B1_ComplexModuli;
        fill_symmetric(r, g, mu, la);
        fill_conjugate_pair(r, r.sum, r.prod);
        return r;
      }
      if (near_band(t, t_end, s0)) {
        r.case_tag = la > 0 ? CaseTag::B6_LargeEndpoint : CaseTag::B4_SmallEndpoint;
        fill_symmetric(r, 0, mu, la);
        r.w0sq = 0;
        fill_endpoint_pair(r, mu, la);
        return r;
      }
      if (t > t_end) {
        if (la > 0) {
          // the small-kink species leaves the chain below t_small
          double t_small = -(la - 4 * mu) * (la - 4 * mu) / (8 * mu);
          r.case_tag = t >= t_small ? CaseTag::B3_KAKChain : CaseTag::B5_LargeKAK;
        } else {
          r.case_tag = CaseTag::B3_KAKChain;
        }
        fill_symmetric(r, g, mu, la);
        fill_real_pair(r, r.sum, r.prod);
        return r;
      }
      throw std::domain_error("classify: A below the large-kink endpoint");
    }
    throw std::domain_error(
        "classify: lambda <= -4 mu; use the mirror symmetry "
        "(lambda -> -lambda, phi -> phi + 2 pi / beta)");
  }

  // mu < 0
  if (la >= 0) {
    if (near_band(t, 0, s0)) {
      if (la <= 1e-12 * s0)
        throw std::domain_error("classify: mu < 0, lambda = 0, A = 0 is degenerate");
      r.case_tag = CaseTag::A2_SingleKink;
      fill_symmetric(r, 2 * la, mu, la);
      r.m1 = 1.0;
      r.m2 = 4 * mu / la;
      r.conjugate_pair = false;
      return r;
    }
    if (t > 0) {
      r.case_tag = CaseTag::D1_Chain;
      fill_symmetric(r, t + 2 * la, mu, la);
      fill_real_pair(r, r.sum, r.prod);
      return r;
    }
    if (la > -4 * mu) {
      if (near_band(t, -2 * la, s0)) {
        r.case_tag = CaseTag::A6_ConstantEndpoint;
        fill_symmetric(r, 0, mu, la);
        r.w0sq = 0;
        fill_endpoint_pair(r, mu, la);
        return r;
      }
      if (t > -2 * la) {
        r.case_tag = CaseTag::D2_Bounce;
        fill_symmetric(r, t + 2 * la, mu, la);
        fill_real_pair(r, r.sum, r.prod);
        return r;
      }
    }
    throw std::domain_error("classify: no real oscillatory solution for these (mu < 0) parameters");
  }
  if (t > 0 && !near_band(t, 0, s0)) {
    r.case_tag = CaseTag::C_Molecule;
    fill_symmetric(r, t, mu, la);
    fill_real_pair(r, r.sum, r.prod);
    return r;
  }
  throw std::domain_error("classify: mu < 0, lambda < 0 requires A > 0");
}

namespace {

enum class Form { Winding, Conj, Sd, Sn, Const, Sinh, Tanh };

// Everything the profile/density callables need, captured by value so the
// returned closures are immutable and thread-safe.
struct Builder {
  Form form = Form::Const;
  double beta, x0, A;
  double e0, e1, e2;  // density(a) = e0 - e1 sin^2 a + e2 sin^4 a - A
  double w0 = 0;
  double kap2 = 0, k2c = 1;  // Winding
  double sq = 0, mM = 0, KM = 0;  // Conj
  double mred = 0, rt = 1;  // Sd / Sn
  double coef = 0, rate = 0;  // Sinh / Tanh
};

// Quarter-amplitude a(x): phi = 2 pi/beta + 4 a / beta.
double amp(const Builder& b, double x) {
  double u = b.w0 * (x - b.x0);
  switch (b.form) {
    case Form::Winding: {
      // tan a = tan(am)/k2c, unwrapped so a increases with x
      double th = ell::jacobi_am(b.k2c * u, b.kap2);
      double n = std::floor(th / kPi + 0.5);
      double rr = th - n * kPi;
      return n * kPi + std::atan2(std::sin(rr), b.k2c * std::cos(rr));
    }
    case Form::Conj: {
      double v = b.sq * u;
      double n = std::floor((v + b.KM) / (2 * b.KM));
      double v0 = v - 2 * b.KM * n;  // cell where cn >= 0
      ell::JacobiTriple j = ell::jacobi_scd(v0, b.mM);
      double base = j.cn != 0
                        ? std::atan(j.sn * j.dn / (j.cn * b.sq))
                        : std::copysign(kPi / 2, j.sn);
      return n * kPi + base;
    }
    case Form::Sd: {
      ell::JacobiTriple j = ell::jacobi_scd(b.rt * u, b.mred);
      return std::atan(j.sn / (j.dn * b.rt));
    }
    case Form::Sn: {
      ell::JacobiTriple j = ell::jacobi_scd(b.rt * u, b.mred);
      return std::atan(j.sn / b.rt);
    }
    case Form::Const:
      return 0;
    case Form::Sinh:
      return std::atan(b.coef * std::sinh(b.rate * (x - b.x0)));
    case Form::Tanh:
      return std::atan(b.coef * std::tanh(b.rate * (x - b.x0)));
  }
  return 0;
}

}  // namespace

KinkSolution solve(const DSGParams& p) {
  Regime r = classify(p);
  double mu = p.mu, la = p.lambda, b2 = p.beta * p.beta;
  Builder b;
  b.beta = p.beta;
  b.x0 = p.x0;
  b.A = p.A;
  // exact coefficient forms: w0^2 (m1+m2) = (4 mu + lambda)/4, w0^2 m1 m2 = mu
  b.e0 = 16 * r.w0sq / b2;
  b.e1 = 4 * (4 * mu + la) / b2;
  b.e2 = 16 * mu / b2;
  b.w0 = std::sqrt(r.w0sq);

  KinkSolution sol;
  sol.regime = r;
  sol.energy = std::nullopt;
  sol.Q = std::nullopt;

  switch (r.case_tag) {
    case CaseTag::A1_KinkChain:
    case CaseTag::A3_TrigPoint:
    case CaseTag::A3_SineGordon:
    case CaseTag::C_Molecule:
    case CaseTag::D1_Chain: {
      double m1 = r.m1.real(), m2 = r.m2.real();
      b.form = Form::Winding;
      b.k2c = std::sqrt(1 - m2);
      b.kap2 = m1 == m2 ? 0.0 : (m1 - m2) / (1 - m2);
      if (b.kap2 < 0) b.kap2 = 0;
      if (b.kap2 > 1) b.kap2 = 1;
      sol.R = 2 * ell::complete_k(b.kap2) / (b.k2c * b.w0);
      sol.periodicity = Periodicity::QuasiPeriodic_4piOverBeta;
      break;
    }
    case CaseTag::A4_ComplexModuli:
    case CaseTag::B1_ComplexModuli: {
      // (1-m1)(1-m2) = 1 - S + P must be positive for the real reduction
      double qsq = 1 - r.sum + r.prod;
      if (!(qsq > 0))
        throw numeric_error("solve: conjugate-pair reduction needs (1-m1)(1-m2) > 0");
      double q = std::sqrt(qsq);
      b.form = Form::Conj;
      b.sq = std::sqrt(q);
      b.mM = (2 * q - 2 + r.sum) / (4 * q);
      if (b.mM < 0) b.mM = 0;
      if (b.mM > 1) b.mM = 1;
      b.KM = ell::complete_k(b.mM);
      sol.R = 2 * b.KM / (b.sq * b.w0);
      sol.periodicity = Periodicity::QuasiPeriodic_4piOverBeta;
      break;
    }
    case CaseTag::A5_KAKChain:
    case CaseTag::B5_LargeKAK:
    case CaseTag::D2_Bounce: {
      double m1 = r.m1.real(), m2 = r.m2.real();
      b.form = Form::Sd;
      b.rt = std::sqrt(m1 - m2);
      b.mred = (1 - m2) / (m1 - m2);
      sol.R = 2 * ell::complete_k(b.mred) / (b.rt * b.w0);
      sol.periodicity = Periodicity::Periodic_2R;
      break;
    }
    case CaseTag::B3_KAKChain: {
      double m1 = r.m1.real(), m2 = r.m2.real();
      b.form = Form::Sn;
      b.rt = std::sqrt(m1 - 1);
      b.mred = m1 == m2 ? 1.0 : (m2 - 1) / (m1 - 1);
      if (b.mred < 0) b.mred = 0;
      sol.R = 2 * ell::complete_k(b.mred) / (b.rt * b.w0);
      sol.periodicity = Periodicity::Periodic_2R;
      break;
    }
    case CaseTag::A2_SingleKink: {
      b.form = Form::Sinh;
      b.coef = std::sqrt(la / (la - 4 * mu));
      b.rate = std::sqrt(la / 4 - mu);
      sol.R = kInf;
      sol.periodicity = Periodicity::Infinite;
      sol.Q = 4 * kPi / p.beta;
      break;
    }
    case CaseTag::B2_SingleLargeSmall: {
      double ratio = la / (4 * mu);
      b.form = Form::Tanh;
      b.coef = std::sqrt((4 * mu + la) / (4 * mu - la));
      b.rate = std::sqrt(1 - ratio * ratio) * std::sqrt(mu) / 2;
      sol.R = kInf;
      sol.periodicity = Periodicity::Infinite;
      sol.Q = (8 / p.beta) * std::atan(b.coef);
      break;
    }
    case CaseTag::A6_ConstantEndpoint:
    case CaseTag::B4_SmallEndpoint:
    case CaseTag::B6_LargeEndpoint: {
      b.form = Form::Const;
      sol.R = 2 * kPi / std::sqrt(4 * mu + la);
      sol.periodicity = Periodicity::Periodic_2R;
      sol.energy = sol.R * (2 * potential(2 * kPi / p.beta, p) + p.A);
      break;
    }
  }

  if (r.case_tag == CaseTag::A1_KinkChain) {
    double m1 = r.m1.real(), m2 = r.m2.real();
    double k2c2 = 1 - m2;
    double Ek = ell::complete_e(b.kap2);
    double Kk = ell::complete_k(b.kap2);
    double Pik = ell::complete_pi(-m2 / k2c2, b.kap2);
    sol.energy = (16 * b.w0 * b.k2c / b2) *
                 (Ek - (m1 / m2 + 1 - m1) * Kk + (1 / k2c2 + m1 / m2) * Pik);
  } else if (r.case_tag == CaseTag::A3_TrigPoint) {
    double m0 = r.m1.real();
    double kp = std::sqrt(1 - m0);
    sol.energy = (8 * kPi * std::sqrt(mu) / b2) * (2 - m0 - kp * kp * kp) / m0;
  } else if (r.case_tag == CaseTag::A3_SineGordon) {
    double m1 = r.m1.real();
    double k1 = std::sqrt(m1);
    sol.energy = (16 * std::sqrt(la / 4) / (b2 * k1)) *
                 ((m1 - 1) * ell::complete_k(m1) + 2 * ell::complete_e(m1));
  }

  Builder bb = b;
  double phi0 = 2 * kPi / p.beta;
  sol.profile = [bb, phi0](double x) { return phi0 + 4 * amp(bb, x) / bb.beta; };
  sol.density = [bb](double x) {
    double sa = std::sin(amp(bb, x));
    double s2 = sa * sa;
    return bb.e0 - bb.e1 * s2 + bb.e2 * s2 * s2 - bb.A;
  };
  return sol;
}

double radius(const DSGParams& p) { return solve(p).R; }

double chain_energy(const DSGParams& p) {
  KinkSolution s = solve(p);
  if (!std::isfinite(s.R))
    throw std::domain_error("chain_energy: period is infinite at the single-kink limit");
  if (s.energy) return *s.energy;
  quad::Options opt;
  opt.abs_tol = 1e-10;
  opt.rel_tol = 1e-10;
  return quad::integrate(s.density, p.x0, p.x0 + s.R, opt);
}

double topological_charge(const DSGParams& p) {
  Regime r = classify(p);
  if (r.case_tag == CaseTag::A2_SingleKink) return 4 * kPi / p.beta;
  if (r.case_tag == CaseTag::B2_SingleLargeSmall)
    return (8 / p.beta) *
           std::atan(std::sqrt((4 * p.mu + p.lambda) / (4 * p.mu - p.lambda)));
  throw std::domain_error("topological_charge: defined only at the A = 0 single-kink limits");
}

KinkSolution mirror_solution(const DSGParams& p) {
  Regime r = classify(p);
  switch (r.case_tag) {
    case CaseTag::B1_ComplexModuli:
    case CaseTag::B2_SingleLargeSmall:
    case CaseTag::B3_KAKChain:
    case CaseTag::B4_SmallEndpoint:
    case CaseTag::B5_LargeKAK:
    case CaseTag::B6_LargeEndpoint:
      break;
    default:
      throw std::domain_error("mirror_solution: requires the |lambda| < 4 mu phase");
  }
  DSGParams q = p;
  q.lambda = -p.lambda;
  KinkSolution s = solve(q);
  double shift = 2 * kPi / p.beta;
  std::function<double(double)> f = s.profile;
  s.profile = [f, shift](double x) { return f(x) - shift; };
  return s;
}

}  // namespace genjac::dsg
