#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tenfold::rng {

/// splitmix64, used to derive independent substream seeds from
/// (master seed, stream index) pairs.
inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic Gaussian stream:  mt19937_64 with an explicit
/// Box-Muller transform so the byte stream is fully pinned by (seed,
/// stream) on a given machine, independent of library internals.
class GaussianStream {
 public:
  explicit GaussianStream(uint64_t seed, uint64_t stream = 0)
      : eng_(mix64(seed ^ mix64(stream))), have_(false), spare_(0) {}

  double uniform() {  // in (0,1)
    return (double(eng_() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }

  double gaussian() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    double u = uniform(), v = uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    have_ = true;
    spare_ = r * std::sin(2.0 * M_PI * v);
    return r * std::cos(2.0 * M_PI * v);
  }

 private:
  std::mt19937_64 eng_;
  bool have_;
  double spare_;
};

/// Neumaier compensated accumulator; keeps parallel reductions
/// insensitive to summation order at the 1 ulp level.
struct Accumulator {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace tenfold::rng
