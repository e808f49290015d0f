#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tenfold/quadrature.hpp"

using namespace tenfold::quad;

TEST_CASE("polynomial and smooth 1-dim integrals") {
  auto r = integrate([](double x) { return cplx(x * x); }, 0, 1);
  CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-12);
  CHECK(r.converged);

  r = integrate([](double x) { return cplx(std::cos(x)); }, 0, M_PI / 2);
  CHECK(std::abs(r.value - 1.0) < 1e-12);

  // mildly oscillatory complex integrand
  r = integrate([](double x) { return std::exp(cplx(0, 7.0) * x); }, 0, 1, 1e-12, 1e-12);
  cplx expect = (std::exp(cplx(0, 7.0)) - 1.0) / cplx(0, 7.0);
  CHECK(std::abs(r.value - expect) < 1e-11);
}

TEST_CASE("line integral with gaussian decay") {
  auto r = integrate_line([](double x) { return cplx(std::exp(-x * x)); }, 1.0);
  CHECK(std::abs(r.value - std::sqrt(M_PI)) < 1e-10);
  CHECK(r.converged);

  // shifted oscillatory gaussian: int exp(ix - x^2/2) = sqrt(2 pi) e^{-1/2}
  r = integrate_line([](double x) { return std::exp(cplx(0, 1) * x - 0.5 * x * x); }, 1.0);
  CHECK(std::abs(r.value - std::sqrt(2 * M_PI) * std::exp(-0.5)) < 1e-10);
}

TEST_CASE("tensor boxes") {
  std::vector<Axis> axes = {{-6, 6, 2}, {-6, 6, 2}};
  auto r = integrate_box(
      [](const std::vector<double>& x) {
        return cplx(std::exp(-x[0] * x[0] - x[1] * x[1]));
      },
      axes, 24);
  CHECK(std::abs(r.value - M_PI) < 1e-10);
  CHECK(r.error < 1e-9);

  // 3-dim with a polynomial weight
  std::vector<Axis> axes3 = {{-5, 5, 2}, {-5, 5, 2}, {-5, 5, 2}};
  auto r3 = integrate_box(
      [](const std::vector<double>& x) {
        double s = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        return cplx(x[0] * x[0] * std::exp(-s));
      },
      axes3, 16);
  CHECK(std::abs(r3.value - 0.5 * std::pow(M_PI, 1.5)) < 1e-8);
}
