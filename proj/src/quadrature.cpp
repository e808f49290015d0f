#include "tenfold/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace tenfold::quad {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1,1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct Panel {
  double a, b;
  cplx value;
  double err;
};

Panel eval_panel(const std::function<cplx(double)>& f, double a, double b, size_t& evals) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  cplx fc = f(c);
  cplx kron = kWgk[7] * fc;
  cplx gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    cplx f1 = f(c - h * kXgk[j]);
    cplx f2 = f(c + h * kXgk[j]);
    kron += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  evals += 15;
  Panel p;
  p.a = a;
  p.b = b;
  p.value = h * kron;
  p.err = std::abs(h * (kron - gauss));
  // the usual (200 |dk|)^{3/2} sharpening
  double scale = std::abs(p.value);
  if (scale > 0 && p.err > 0) p.err = std::min(p.err, std::pow(200 * p.err, 1.5));
  return p;
}

}  // namespace

QuadResult integrate(const std::function<cplx(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, size_t max_evals) {
  QuadResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  auto cmp = [](const Panel& x, const Panel& y) { return x.err < y.err; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);
  heap.push(eval_panel(f, a, b, res.evals));
  cplx total = heap.top().value;
  double toterr = heap.top().err;
  while (res.evals < max_evals) {
    double goal = std::max(abs_tol, rel_tol * std::abs(total));
    if (toterr <= goal || heap.empty()) break;
    Panel worst = heap.top();
    heap.pop();
    if (worst.b - worst.a < 1e-14 * (b - a)) {  // cannot refine further
      toterr -= worst.err;
      continue;
    }
    double mid = 0.5 * (worst.a + worst.b);
    Panel left = eval_panel(f, worst.a, mid, res.evals);
    Panel right = eval_panel(f, mid, worst.b, res.evals);
    total += left.value + right.value - worst.value;
    toterr += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
  }
  res.value = total;
  res.error = toterr;
  res.converged = toterr <= std::max(abs_tol, rel_tol * std::abs(total));
  return res;
}

QuadResult integrate_line(const std::function<cplx(double)>& f, double scale,
                          double abs_tol, double rel_tol, double cut) {
  double T = cut * scale;
  QuadResult core = integrate(f, -T, T, abs_tol / 2, rel_tol / 2);
  QuadResult tail_lo = integrate(f, -2 * T, -T, abs_tol, 1e-4);
  QuadResult tail_hi = integrate(f, T, 2 * T, abs_tol, 1e-4);
  core.value += tail_lo.value + tail_hi.value;
  double tail = std::abs(tail_lo.value) + std::abs(tail_hi.value);
  core.error += tail_lo.error + tail_hi.error + tail;
  core.evals += tail_lo.evals + tail_hi.evals;
  core.converged = core.converged && tail <= 10 * std::max(abs_tol, rel_tol * std::abs(core.value));
  return core;
}

namespace {

// Golub-Welsch for Gauss-Legendre nodes; cached per order.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = 0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
      }
      double dp = n * (t * p0 - p1) / (t * t - 1);
      double dt = -p0 / dp;
      t += dt;
      if (std::abs(dt) < 1e-15) break;
    }
    double p0 = 1, p1 = 0;
    for (int j = 0; j < n; ++j) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
    }
    double dp = n * (t * p0 - p1) / (t * t - 1);
    x[i] = t;
    w[i] = 2.0 / ((1 - t * t) * dp * dp);
  }
}

cplx tensor_pass(const std::function<cplx(const std::vector<double>&)>& f,
                 const std::vector<Axis>& axes, int order, size_t& evals) {
  std::vector<double> gx, gw;
  gauss_legendre(order, gx, gw);
  int d = int(axes.size());
  // per-axis node/weight lists including panel subdivision
  std::vector<std::vector<double>> xs(d), ws(d);
  for (int k = 0; k < d; ++k) {
    int np = std::max(1, axes[k].panels);
    double len = (axes[k].hi - axes[k].lo) / np;
    for (int p = 0; p < np; ++p) {
      double lo = axes[k].lo + p * len;
      for (int i = 0; i < order; ++i) {
        xs[k].push_back(lo + 0.5 * len * (gx[i] + 1.0));
        ws[k].push_back(0.5 * len * gw[i]);
      }
    }
  }
  std::vector<size_t> idx(d, 0);
  std::vector<double> pt(d);
  cplx total = 0.0;
  while (true) {
    double w = 1.0;
    for (int k = 0; k < d; ++k) {
      pt[k] = xs[k][idx[k]];
      w *= ws[k][idx[k]];
    }
    total += w * f(pt);
    ++evals;
    int k = d - 1;
    while (k >= 0 && ++idx[k] == xs[k].size()) idx[k--] = 0;
    if (k < 0) break;
  }
  return total;
}

}  // namespace

QuadResult integrate_box(const std::function<cplx(const std::vector<double>&)>& f,
                         const std::vector<Axis>& axes, int order, bool refine_check) {
  QuadResult res;
  cplx coarse = tensor_pass(f, axes, order, res.evals);
  if (!refine_check) {
    res.value = coarse;
    res.error = std::abs(coarse) * 1e-6;
    res.converged = true;
    return res;
  }
  cplx fine = tensor_pass(f, axes, order + order / 2, res.evals);
  res.value = fine;
  res.error = std::abs(fine - coarse);
  res.converged = true;
  return res;
}

}  // namespace tenfold::quad
