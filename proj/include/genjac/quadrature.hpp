#pragma once

// Adaptive Gauss-Kronrod 7-15 quadrature on a finite interval.

#include <functional>

namespace genjac::quad {

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_depth = 48;
};

// Integrates f over [a, b] by bisection until the embedded error estimate
// drops below max(abs_tol, rel_tol * |integral|) on each panel.
double integrate(const std::function<double(double)>& f, double a, double b,
                 Options opt = {});

}  // namespace genjac::quad
