#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tenfold::superalg {

using cplx = std::complex<double>;

struct pool_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct singular_body_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Registry of anticommuting generators xi^0 .. xi^{q-1}.
///
/// Pools are append-only: extend() hands out fresh generator indices
/// without invalidating existing elements.  Elements carry their pool
/// id so that operations on elements from different pools fail loudly
/// instead of silently mixing generator ranges.
class GrassmannPool {
 public:
  explicit GrassmannPool(int generators);

  uint64_t id() const { return id_; }
  int size() const { return size_; }

  /// Appends `extra` new generators, returns the index of the first one.
  int extend(int extra);

 private:
  uint64_t id_;
  int size_;
};

/// Element of the complex Grassmann algebra on the generators of one pool.
///
/// Stored as a sorted sparse list of (generator-subset bitmask, coefficient)
/// with exactly-zero coefficients pruned, so equal elements compare equal
/// term by term.
class GrassmannElement {
 public:
  GrassmannElement() : pool_id_(0) {}
  GrassmannElement(cplx scalar) : pool_id_(0) {  // NOLINT(google-explicit-constructor)
    if (scalar != 0.0) terms_.push_back({0, scalar});
  }
  GrassmannElement(double scalar) : GrassmannElement(cplx(scalar)) {}  // NOLINT

  static GrassmannElement generator(const GrassmannPool& pool, int k);
  static GrassmannElement monomial(const GrassmannPool& pool, uint64_t mask, cplx coeff);

  uint64_t pool_id() const { return pool_id_; }
  const std::vector<std::pair<uint64_t, cplx>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  cplx coeff(uint64_t mask) const;
  cplx body() const { return coeff(0); }
  GrassmannElement nilpotent_part() const;

  /// +1 even, -1 odd, 0 mixed; zero counts as even.
  int parity() const;
  bool is_even() const { return parity() == 1; }
  bool is_odd() const { return parity() == -1; }

  GrassmannElement operator-() const;
  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator*(cplx s, const GrassmannElement& a);
  friend GrassmannElement operator*(const GrassmannElement& a, cplx s) { return s * a; }
  friend GrassmannElement operator*(double s, const GrassmannElement& a) { return cplx(s) * a; }
  friend GrassmannElement operator*(const GrassmannElement& a, double s) { return cplx(s) * a; }
  bool operator==(const GrassmannElement& o) const {
    return pool_id_ == o.pool_id_ ? terms_ == o.terms_ : (is_zero() && o.is_zero());
  }

  /// Largest |coefficient|.
  double norm_inf() const;

  std::string to_string() const;

 private:
  friend GrassmannElement g_derive(const GrassmannElement&, int);
  uint64_t pool_id_;
  std::vector<std::pair<uint64_t, cplx>> terms_;  // sorted by mask, no zeros
  void prune();
  static uint64_t merged_pool(const GrassmannElement& a, const GrassmannElement& b);
};

/// Left derivative with respect to generator k.
GrassmannElement g_derive(const GrassmannElement& a, int k);

/// exp of an even element: exp(body) times the terminating nilpotent series.
GrassmannElement g_exp(const GrassmannElement& a);

/// log of an even element with nonzero body (principal branch on the body).
GrassmannElement g_log(const GrassmannElement& a);

/// Inverse of an even element with nonzero body.
GrassmannElement g_inv(const GrassmannElement& a);

/// Coefficient of xi^0 xi^1 ... xi^{q-1} as produced by the derivative
/// string d_{xi^0} d_{xi^1} ... d_{xi^{q-1}} applied innermost-first.
/// Equals (-1)^{q(q-1)/2} times the stored top coefficient; the global
/// sign is pinned by the vol(S^{2|2}) = +4pi regression anchor.
cplx berezin_top(const GrassmannElement& a, int q);

}  // namespace tenfold::superalg
