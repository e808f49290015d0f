#include "tenfold/grassmann.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <sstream>

namespace tenfold::superalg {

namespace {
std::atomic<uint64_t> g_next_pool_id{1};
}  // namespace

GrassmannPool::GrassmannPool(int generators) : id_(g_next_pool_id++), size_(generators) {
  if (generators < 0 || generators > 62) throw pool_error("pool size out of range");
}

int GrassmannPool::extend(int extra) {
  if (extra < 0 || size_ + extra > 62) throw pool_error("pool extension out of range");
  int first = size_;
  size_ += extra;
  return first;
}

GrassmannElement GrassmannElement::generator(const GrassmannPool& pool, int k) {
  if (k < 0 || k >= pool.size()) throw pool_error("generator index outside pool");
  GrassmannElement e;
  e.pool_id_ = pool.id();
  e.terms_.push_back({uint64_t(1) << k, 1.0});
  return e;
}

GrassmannElement GrassmannElement::monomial(const GrassmannPool& pool, uint64_t mask, cplx coeff) {
  if (mask >> pool.size()) throw pool_error("monomial mask outside pool");
  GrassmannElement e;
  e.pool_id_ = mask ? pool.id() : 0;
  if (coeff != 0.0) e.terms_.push_back({mask, coeff});
  return e;
}

cplx GrassmannElement::coeff(uint64_t mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const auto& t, uint64_t m) { return t.first < m; });
  return (it != terms_.end() && it->first == mask) ? it->second : cplx(0.0);
}

GrassmannElement GrassmannElement::nilpotent_part() const {
  GrassmannElement e = *this;
  if (!e.terms_.empty() && e.terms_.front().first == 0) e.terms_.erase(e.terms_.begin());
  if (e.terms_.empty()) e.pool_id_ = 0;
  return e;
}

int GrassmannElement::parity() const {
  if (terms_.empty()) return 1;
  int p = std::popcount(terms_.front().first) % 2;
  for (const auto& [m, c] : terms_)
    if (std::popcount(m) % 2 != p) return 0;
  return p == 0 ? 1 : -1;
}

void GrassmannElement::prune() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const auto& t) { return t.second == 0.0; }),
               terms_.end());
  if (terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0)) pool_id_ = 0;
}

uint64_t GrassmannElement::merged_pool(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.pool_id_ == 0) return b.pool_id_;
  if (b.pool_id_ == 0 || a.pool_id_ == b.pool_id_) return a.pool_id_;
  throw pool_error("operands belong to different generator pools");
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement e = *this;
  for (auto& [m, c] : e.terms_) c = -c;
  return e;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  uint64_t pid = merged_pool(*this, o);
  std::vector<std::pair<uint64_t, cplx>> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.cbegin();
  auto b = o.terms_.cbegin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      cplx s = a->second + b->second;
      if (s != 0.0) out.push_back({a->first, s});
      ++a, ++b;
    }
  }
  terms_ = std::move(out);
  pool_id_ = pid;
  prune();
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) { return *this += -o; }

namespace {
// Sign of xi^A * xi^B for disjoint ascending-ordered masks: parity of the
// number of generator crossings needed to interleave B into A.
int reorder_sign(uint64_t a, uint64_t b) {
  int crossings = 0;
  while (b) {
    int k = std::countr_zero(b);
    crossings += std::popcount(a >> (k + 1));
    b &= b - 1;
  }
  return (crossings % 2) ? -1 : 1;
}
}  // namespace

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement out;
  out.pool_id_ = GrassmannElement::merged_pool(a, b);
  std::vector<std::pair<uint64_t, cplx>>& acc = out.terms_;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma & mb) continue;
      cplx c = ca * cb * double(reorder_sign(ma, mb));
      uint64_t m = ma | mb;
      auto it = std::lower_bound(acc.begin(), acc.end(), m,
                                 [](const auto& t, uint64_t mm) { return t.first < mm; });
      if (it != acc.end() && it->first == m)
        it->second += c;
      else
        acc.insert(it, {m, c});
    }
  }
  out.prune();
  return out;
}

GrassmannElement operator*(cplx s, const GrassmannElement& a) {
  GrassmannElement e = a;
  for (auto& [m, c] : e.terms_) c *= s;
  e.prune();
  return e;
}

double GrassmannElement::norm_inf() const {
  double v = 0;
  for (const auto& [m, c] : terms_) v = std::max(v, std::abs(c));
  return v;
}

std::string GrassmannElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    uint64_t mm = m;
    while (mm) {
      int k = std::countr_zero(mm);
      os << "*x" << k;
      mm &= mm - 1;
    }
  }
  return os.str();
}

GrassmannElement g_derive(const GrassmannElement& a, int k) {
  GrassmannElement out;
  out.pool_id_ = a.pool_id_;
  uint64_t bit = uint64_t(1) << k;
  uint64_t below = bit - 1;
  for (const auto& [m, c] : a.terms_) {
    if (!(m & bit)) continue;
    int sign = (std::popcount(m & below) % 2) ? -1 : 1;
    out.terms_.push_back({m & ~bit, double(sign) * c});
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  out.prune();
  return out;
}

GrassmannElement g_exp(const GrassmannElement& a) {
  if (a.parity() != 1) throw std::invalid_argument("g_exp needs an even element");
  cplx b = a.body();
  GrassmannElement n = a.nilpotent_part();
  GrassmannElement sum = 1.0, term = 1.0;
  for (int k = 1; !term.is_zero() && k <= 64; ++k) {
    term = term * n;
    term = (1.0 / double(k)) * term;
    sum += term;
  }
  return std::exp(b) * sum;
}

GrassmannElement g_log(const GrassmannElement& a) {
  if (a.parity() != 1) throw std::invalid_argument("g_log needs an even element");
  cplx b = a.body();
  if (b == 0.0) throw singular_body_error("g_log: zero body");
  GrassmannElement u = (1.0 / b) * a.nilpotent_part();
  GrassmannElement sum = std::log(b), term = 1.0;
  for (int k = 1; !term.is_zero() && k <= 64; ++k) {
    term = term * u;
    sum += (((k % 2) ? 1.0 : -1.0) / double(k)) * term;
  }
  return sum;
}

GrassmannElement g_inv(const GrassmannElement& a) {
  if (a.parity() != 1) throw std::invalid_argument("g_inv needs an even element");
  cplx b = a.body();
  if (b == 0.0) throw singular_body_error("g_inv: zero body");
  GrassmannElement u = (-1.0 / b) * a.nilpotent_part();
  GrassmannElement sum = 1.0, term = 1.0;
  for (int k = 1; !term.is_zero() && k <= 64; ++k) {
    term = term * u;
    sum += term;
  }
  return (1.0 / b) * sum;
}

cplx berezin_top(const GrassmannElement& a, int q) {
  uint64_t full = (q >= 64) ? ~uint64_t(0) : ((uint64_t(1) << q) - 1);
  int sign = ((q * (q - 1) / 2) % 2) ? -1 : 1;
  return double(sign) * a.coeff(full);
}

}  // namespace tenfold::superalg
