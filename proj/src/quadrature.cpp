#include "genjac/quadrature.hpp"

#include <cmath>

namespace genjac::quad {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 nodes).
constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWeightsK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWeightsG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
  double integral;
  double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  double c = (a + b) / 2, h = (b - a) / 2;
  double fc = f(c);
  double resk = kWeightsK[7] * fc;
  double resg = kWeightsG[3] * fc;
  for (int j = 0; j < 7; ++j) {
    double f1 = f(c - h * kNodes[j]);
    double f2 = f(c + h * kNodes[j]);
    resk += kWeightsK[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWeightsG[j / 2] * (f1 + f2);
  }
  return {resk * h, std::fabs(resk - resg) * h};
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double abs_tol, double rel_tol, int depth) {
  Panel p = gk15(f, a, b);
  if (depth <= 0 || p.error <= std::fmax(abs_tol, rel_tol * std::fabs(p.integral)))
    return p.integral;
  double c = (a + b) / 2;
  return adapt(f, a, c, abs_tol / 2, rel_tol, depth - 1) +
         adapt(f, c, b, abs_tol / 2, rel_tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 Options opt) {
  if (a == b) return 0;
  return adapt(f, a, b, opt.abs_tol, opt.rel_tol, opt.max_depth);
}

}  // namespace genjac::quad
