#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace tenfold::quad {

using cplx = std::complex<double>;

struct QuadResult {
  cplx value{0.0};
  double error = 0.0;
  size_t evals = 0;
  bool converged = false;
};

struct quadrature_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Globally adaptive Gauss-Kronrod 7/15 on [a,b].
QuadResult integrate(const std::function<cplx(double)>& f, double a, double b,
                     double abs_tol = 1e-10, double rel_tol = 1e-10,
                     size_t max_evals = 2'000'000);

/// Integral over the real line, truncated at |x| <= cut*scale (default 8
/// mapped units) with a doubling-based tail check.
QuadResult integrate_line(const std::function<cplx(double)>& f, double scale,
                          double abs_tol = 1e-10, double rel_tol = 1e-10,
                          double cut = 8.0);

/// Tensor-product panelized Gauss-Legendre over a box, with an
/// order-doubling pass as the error estimate.  Meant for smooth
/// (analytic) integrands in 2..4 dimensions.
struct Axis {
  double lo, hi;
  int panels = 1;
};
QuadResult integrate_box(const std::function<cplx(const std::vector<double>&)>& f,
                         const std::vector<Axis>& axes, int order = 24,
                         bool refine_check = true);

}  // namespace tenfold::quad
