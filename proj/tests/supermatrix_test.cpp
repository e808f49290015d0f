#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenfold/rng.hpp"
#include "tenfold/supermatrix.hpp"

using namespace tenfold::superalg;
using tenfold::rng::GaussianStream;

namespace {

GrassmannElement random_parity(const GrassmannPool& pool, GaussianStream& rng, int par,
                               double nil_scale = 0.5) {
  GrassmannElement e;
  for (uint64_t mask = 0; mask < (uint64_t(1) << pool.size()); ++mask) {
    if (int(std::popcount(mask) % 2) != par) continue;
    double s = mask == 0 ? 1.0 : nil_scale;
    e += GrassmannElement::monomial(pool, mask, s * cplx(rng.gaussian(), rng.gaussian()));
  }
  return e;
}

SuperMatrix random_super(const GrassmannPool& pool, GaussianStream& rng, Grading g) {
  SuperMatrix m(g, g);
  for (int i = 0; i < g.total(); ++i)
    for (int j = 0; j < g.total(); ++j)
      m.set(i, j, random_parity(pool, rng, m.slot_parity(i, j) > 0 ? 0 : 1));
  return m;
}

double diff(const SuperMatrix& a, const SuperMatrix& b) { return (a - b).norm_inf(); }

}  // namespace

TEST_CASE("identity, parity checks, body") {
  GrassmannPool p(2);
  Grading g{1, 1};
  SuperMatrix id = SuperMatrix::identity(g);
  SuperMatrix a(g, g);
  a.set(0, 0, GrassmannElement(2.0));
  a.set(0, 1, GrassmannElement::generator(p, 0));
  a.set(1, 0, GrassmannElement::generator(p, 1));
  a.set(1, 1, GrassmannElement(3.0));
  CHECK(diff(a * id, a) == 0.0);
  CHECK(diff(id * a, a) == 0.0);
  CHECK_THROWS_AS(a.set(0, 0, GrassmannElement::generator(p, 0)), parity_error);
  CHECK_THROWS_AS(a.set(0, 1, GrassmannElement(1.0)), parity_error);
  Eigen::MatrixXcd b = a.body();
  CHECK(b(0, 0) == cplx(2.0));
  CHECK(b(1, 1) == cplx(3.0));
  CHECK(b(0, 1) == cplx(0.0));
}

TEST_CASE("block-diagonal product and the monomial oracle") {
  GrassmannPool p(4);
  GaussianStream rng(2);
  Grading g{1, 1};
  // diagonal-block matrices multiply blockwise
  SuperMatrix a(g, g), b(g, g);
  a.set(0, 0, GrassmannElement(cplx(1, 2)));
  a.set(1, 1, GrassmannElement(cplx(0, 1)));
  b.set(0, 0, GrassmannElement(cplx(3, 0)));
  b.set(1, 1, GrassmannElement(cplx(1, 1)));
  SuperMatrix ab = a * b;
  CHECK(std::abs(ab.at(0, 0).body() - cplx(1, 2) * cplx(3, 0)) < 1e-14);
  CHECK(std::abs(ab.at(1, 1).body() - cplx(0, 1) * cplx(1, 1)) < 1e-14);
  CHECK(ab.at(0, 1).is_zero());

  // coefficientwise equality with direct expansion for random gradings
  for (int trial = 0; trial < 20; ++trial) {
    SuperMatrix x = random_super(p, rng, g);
    SuperMatrix y = random_super(p, rng, g);
    SuperMatrix xy = x * y;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        GrassmannElement direct = x.at(i, 0) * y.at(0, j) + x.at(i, 1) * y.at(1, j);
        CHECK((xy.at(i, j) - direct).norm_inf() < 1e-12);
      }
  }
}

TEST_CASE("supertransposition laws") {
  GrassmannPool p(6);
  GaussianStream rng(9);
  Grading g{2, 2};
  SuperMatrix sigma = superparity(g);
  CHECK(diff(s_transpose(sigma), sigma) == 0.0);
  for (int trial = 0; trial < 15; ++trial) {
    SuperMatrix a = random_super(p, rng, g);
    SuperMatrix b = random_super(p, rng, g);
    CHECK(diff(s_transpose(a * b), s_transpose(b) * s_transpose(a)) < 1e-10);
    CHECK(diff(s_transpose(s_transpose(a)), sigma * a * sigma) < 1e-12);
  }
}

TEST_CASE("supertrace") {
  GrassmannPool p(4);
  GaussianStream rng(4);
  Grading g{2, 2};
  CHECK(s_trace(SuperMatrix::identity(g)).is_zero());

  Grading g11{1, 1};
  SuperMatrix d(g11, g11);
  d.set(0, 0, GrassmannElement(2.0));
  d.set(1, 1, GrassmannElement(3.0));
  CHECK(s_trace(d) == GrassmannElement(-1.0));

  for (int trial = 0; trial < 15; ++trial) {
    SuperMatrix a = random_super(p, rng, g);
    SuperMatrix b = random_super(p, rng, g);
    CHECK((s_trace(a * b) - s_trace(b * a)).norm_inf() < 1e-10);
    SuperMatrix sigma = superparity(g);
    CHECK((s_trace(sigma * a - a * sigma)).norm_inf() < 1e-12);
  }
}

TEST_CASE("rectangular graded maps: Tr_V (psi psitilde)^k = STr_W (psitilde psi)^k") {
  GrassmannPool p(8);
  GaussianStream rng(21);
  Grading V{3, 0};  // physical space, purely even
  Grading W{1, 1};
  for (int trial = 0; trial < 10; ++trial) {
    SuperMatrix psi(V, W), psit(W, V);
    for (int i = 0; i < V.total(); ++i)
      for (int j = 0; j < W.total(); ++j) {
        psi.set(i, j, random_parity(p, rng, psi.slot_parity(i, j) > 0 ? 0 : 1));
        psit.set(j, i, random_parity(p, rng, psit.slot_parity(j, i) > 0 ? 0 : 1));
      }
    SuperMatrix vv = psi * psit;  // V -> V
    SuperMatrix ww = psit * psi;  // W -> W
    GrassmannElement lhs1 = s_trace(vv), rhs1 = s_trace(ww);
    CHECK((lhs1 - rhs1).norm_inf() < 1e-10);
    GrassmannElement lhs2 = s_trace(vv * vv), rhs2 = s_trace(ww * ww);
    CHECK((lhs2 - rhs2).norm_inf() < 1e-10);
  }
}

TEST_CASE("superdeterminant") {
  GrassmannPool p(4);
  GaussianStream rng(13);
  Grading g{1, 1};
  CHECK((s_det(SuperMatrix::identity(g)) - GrassmannElement(1.0)).norm_inf() == 0.0);

  SuperMatrix d(g, g);
  cplx av(2.0, 1.0), dv(0.5, -0.25);
  d.set(0, 0, GrassmannElement(av));
  d.set(1, 1, GrassmannElement(dv));
  CHECK((s_det(d) - GrassmannElement(av / dv)).norm_inf() < 1e-14);

  SUBCASE("multiplicativity and SDet(exp) = exp(STr)") {
    for (Grading gg : {Grading{1, 1}, Grading{2, 2}}) {
      for (int trial = 0; trial < 40; ++trial) {
        SuperMatrix a = random_super(p, rng, gg);
        SuperMatrix b = random_super(p, rng, gg);
        GrassmannElement lhs = s_det(a * b);
        GrassmannElement rhs = s_det(a) * s_det(b);
        CHECK((lhs - rhs).norm_inf() < 1e-8 * std::max(1.0, rhs.norm_inf()));
        SuperMatrix m = 0.3 * random_super(p, rng, gg);
        CHECK((s_det(s_exp(m)) - g_exp(s_trace(m))).norm_inf() < 1e-10);
      }
    }
  }

  SUBCASE("singular odd-block body is rejected") {
    SuperMatrix s(g, g);
    s.set(0, 0, GrassmannElement(1.0));
    s.set(1, 1, GrassmannElement::monomial(p, 0b11, 1.0));  // zero body
    CHECK_THROWS_AS(s_det(s), singular_body_error);
  }
}

TEST_CASE("block inverse") {
  GrassmannPool p(4);
  GaussianStream rng(31);
  for (Grading g : {Grading{1, 1}, Grading{2, 2}, Grading{2, 1}}) {
    for (int trial = 0; trial < 10; ++trial) {
      SuperMatrix a = random_super(p, rng, g);
      // push bodies away from singularity
      for (int i = 0; i < g.total(); ++i) a.set(i, i, a.at(i, i) + GrassmannElement(3.0));
      SuperMatrix inv = s_inv(a);
      CHECK(diff(a * inv, SuperMatrix::identity(g)) < 1e-10);
      CHECK(diff(inv * a, SuperMatrix::identity(g)) < 1e-10);
      CHECK((s_det(a) * s_det(inv) - GrassmannElement(1.0)).norm_inf() < 1e-10);
    }
  }
}

TEST_CASE("exponential against the 2x2 nilpotent closed form") {
  GrassmannPool p(2);
  Grading g{1, 1};
  SuperMatrix m(g, g);
  m.set(0, 1, GrassmannElement::generator(p, 0));
  m.set(1, 0, GrassmannElement::generator(p, 1));
  // exp of strictly odd off-diagonal: 1 + M + M^2/2, and M^3 = 0
  SuperMatrix e = s_exp(m);
  SuperMatrix expect = SuperMatrix::identity(g) + m + 0.5 * (m * m);
  CHECK(diff(e, expect) < 1e-14);
}
