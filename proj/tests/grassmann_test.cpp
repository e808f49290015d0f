#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdlib>
#include <vector>

#include "tenfold/grassmann.hpp"
#include "tenfold/rng.hpp"

using namespace tenfold::superalg;
using tenfold::rng::GaussianStream;

namespace {

// Independent multiplication oracle: monomials as index sequences,
// product by concatenation followed by bubble sort with sign tracking.
struct NaiveElem {
  std::vector<std::pair<std::vector<int>, cplx>> terms;
};

std::pair<std::vector<int>, int> sort_monomial(std::vector<int> g) {
  int sign = 1;
  for (size_t i = 1; i < g.size(); ++i)
    for (size_t j = i; j > 0 && g[j - 1] > g[j]; --j) {
      std::swap(g[j - 1], g[j]);
      sign = -sign;
    }
  for (size_t i = 1; i < g.size(); ++i)
    if (g[i] == g[i - 1]) return {{}, 0};
  return {g, sign};
}

NaiveElem naive_mul(const NaiveElem& a, const NaiveElem& b) {
  NaiveElem out;
  for (const auto& [ga, ca] : a.terms)
    for (const auto& [gb, cb] : b.terms) {
      std::vector<int> cat = ga;
      cat.insert(cat.end(), gb.begin(), gb.end());
      auto [sorted, sign] = sort_monomial(cat);
      if (sign == 0) continue;
      out.terms.push_back({sorted, double(sign) * ca * cb});
    }
  return out;
}

GrassmannElement to_element(const GrassmannPool& pool, const NaiveElem& n) {
  GrassmannElement e;
  for (const auto& [g, c] : n.terms) {
    uint64_t mask = 0;
    for (int k : g) mask |= uint64_t(1) << k;
    e += GrassmannElement::monomial(pool, mask, c);
  }
  return e;
}

NaiveElem random_naive(const GrassmannPool& pool, GaussianStream& rng, int nterms) {
  NaiveElem n;
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> g;
    for (int k = 0; k < pool.size(); ++k)
      if (rng.uniform() < 0.4) g.push_back(k);
    n.terms.push_back({g, cplx(rng.gaussian(), rng.gaussian())});
  }
  return n;
}

GrassmannElement random_homogeneous(const GrassmannPool& pool, GaussianStream& rng, int par) {
  GrassmannElement e;
  for (uint64_t mask = 0; mask < (uint64_t(1) << pool.size()); ++mask) {
    if (std::popcount(mask) % 2 != par) continue;
    if (rng.uniform() < 0.5) continue;
    e += GrassmannElement::monomial(pool, mask, cplx(rng.gaussian(), rng.gaussian()));
  }
  return e;
}

GrassmannElement xi(const GrassmannPool& p, int k) { return GrassmannElement::generator(p, k); }

}  // namespace

TEST_CASE("anticommutation and distributivity") {
  GrassmannPool p(4);
  CHECK(xi(p, 0) * xi(p, 1) == -(xi(p, 1) * xi(p, 0)));
  GrassmannElement lhs = (GrassmannElement(1.0) + xi(p, 0)) * (GrassmannElement(1.0) + xi(p, 1));
  GrassmannElement rhs = GrassmannElement(1.0) + xi(p, 0) + xi(p, 1) + xi(p, 0) * xi(p, 1);
  CHECK(lhs == rhs);
  CHECK((xi(p, 0) * xi(p, 0)).is_zero());
}

TEST_CASE("product matches brute-force monomial oracle") {
  GrassmannPool p(5);
  // the worked 4-generator case first
  GrassmannElement a = 2.0 * (xi(p, 0) * xi(p, 1));
  GrassmannElement b = 3.0 * (xi(p, 2) * xi(p, 3));
  GrassmannElement expect = GrassmannElement::monomial(p, 0b1111, 6.0);
  CHECK(a * b == expect);

  GaussianStream rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    NaiveElem na = random_naive(p, rng, 4);
    NaiveElem nb = random_naive(p, rng, 4);
    GrassmannElement prod = to_element(p, na) * to_element(p, nb);
    GrassmannElement oracle = to_element(p, naive_mul(na, nb));
    CHECK((prod - oracle).norm_inf() < 1e-12);
  }
}

TEST_CASE("graded commutativity over random homogeneous pairs") {
  GrassmannPool p(6);
  GaussianStream rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int pa = trial % 2, pb = (trial / 2) % 2;
    GrassmannElement a = random_homogeneous(p, rng, pa);
    GrassmannElement b = random_homogeneous(p, rng, pb);
    double sign = (pa == 1 && pb == 1) ? -1.0 : 1.0;
    CHECK((a * b - sign * (b * a)).norm_inf() < 1e-12);
  }
}

TEST_CASE("left derivative") {
  GrassmannPool p(4);
  CHECK(g_derive(xi(p, 0), 0) == GrassmannElement(1.0));
  // sign convention: moving xi0 to the front of xi1*xi0 costs one crossing
  CHECK(g_derive(xi(p, 1) * xi(p, 0), 0) == -xi(p, 1));
  CHECK(g_derive(GrassmannElement(1.0) + xi(p, 0) * xi(p, 1), 2).is_zero());

  GaussianStream rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    GrassmannElement x = random_homogeneous(p, rng, trial % 2);
    int k = trial % 4;
    CHECK(g_derive(g_derive(x, k), k).is_zero());
    // Leibniz for left derivatives: d(ab) = (da)b + (-1)^{|a|} a (db)
    GrassmannElement a = random_homogeneous(p, rng, trial % 2);
    GrassmannElement b = random_homogeneous(p, rng, (trial / 2) % 2);
    double sa = (trial % 2 == 1) ? -1.0 : 1.0;
    GrassmannElement lhs = g_derive(a * b, k);
    GrassmannElement rhs = g_derive(a, k) * b + sa * (a * g_derive(b, k));
    CHECK((lhs - rhs).norm_inf() < 1e-12);
  }
}

TEST_CASE("exp and log") {
  GrassmannPool p(4);
  CHECK(g_exp(GrassmannElement(0.0)) == GrassmannElement(1.0));

  cplx c(0.3, -1.2);
  GrassmannElement e = g_exp(GrassmannElement(c) + xi(p, 0) * xi(p, 1));
  GrassmannElement expect =
      std::exp(c) * (GrassmannElement(1.0) + xi(p, 0) * xi(p, 1));
  CHECK((e - expect).norm_inf() < 1e-12);

  // terminating series example
  GrassmannElement u = 2.0 * (xi(p, 0) * xi(p, 1)) + xi(p, 2) * xi(p, 3);
  GrassmannElement lg = g_log(GrassmannElement(1.0) + u);
  GrassmannElement want = u - 2.0 * (xi(p, 0) * xi(p, 1) * xi(p, 2) * xi(p, 3));
  CHECK((lg - want).norm_inf() < 1e-12);

  GaussianStream rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    GrassmannElement a = random_homogeneous(p, rng, 0);
    CHECK((g_log(g_exp(a)) - a).norm_inf() < 1e-10);
    GrassmannElement inv_check = a + GrassmannElement(2.0);  // keep body away from 0
    CHECK((g_inv(inv_check) * inv_check - GrassmannElement(1.0)).norm_inf() < 1e-12);
  }
  CHECK_THROWS_AS(g_log(xi(p, 0) * xi(p, 1)), singular_body_error);
}

TEST_CASE("pools fail loudly and extend") {
  GrassmannPool p(2), q(2);
  CHECK_THROWS_AS(xi(p, 0) * xi(q, 0), pool_error);
  CHECK_THROWS_AS(xi(p, 0) + xi(q, 1), pool_error);
  int first = p.extend(2);
  CHECK(first == 2);
  CHECK((xi(p, 0) * xi(p, 3)).parity() == 1);
}

TEST_CASE("berezin top coefficient sign") {
  GrassmannPool p(2);
  // d_{x0} d_{x1} applied innermost-first to x0 x1 gives -1
  CHECK(berezin_top(xi(p, 0) * xi(p, 1), 2) == cplx(-1.0));
  GrassmannPool p4(4);
  GrassmannElement top4 = xi(p4, 0) * xi(p4, 1) * xi(p4, 2) * xi(p4, 3);
  CHECK(berezin_top(top4, 4) == cplx(1.0));
  // matches iterated g_derive in the documented order
  GrassmannPool p3(3);
  GaussianStream rng(17);
  GrassmannElement f = random_homogeneous(p3, rng, 1);
  GrassmannElement it = f;
  for (int k = 2; k >= 0; --k) it = g_derive(it, k);
  CHECK(std::abs(it.body() - berezin_top(f, 3)) < 1e-12);
}

TEST_CASE("parity and rendering") {
  GrassmannPool p(3);
  CHECK(GrassmannElement(2.0).parity() == 1);
  CHECK(xi(p, 0).parity() == -1);
  CHECK((GrassmannElement(1.0) + xi(p, 0)).parity() == 0);
  GrassmannElement z = xi(p, 0) * xi(p, 1) - xi(p, 0) * xi(p, 1);
  CHECK(z.is_zero());
  CHECK(z.terms().empty());  // canonical: no stored zeros
  CHECK(GrassmannElement(1.5).to_string() == "(1.5+0i)");
}
