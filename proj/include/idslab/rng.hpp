#pragma once

#include <cmath>
#include <cstdint>

#include "idslab/errors.hpp"

// Reproducible random streams. One 64-bit master seed; the stream for
// realization r is seeded by a multiply-xor hash of (master_seed, r) and
// driven by xoshiro256++. Everything here is integer arithmetic plus
// IEEE-exact scaling, so streams are identical across platforms (the
// truncated Gaussian additionally goes through libm log/sqrt).

namespace idslab::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t realization_index) {
  std::uint64_t s = master_seed ^ (0xD1B54A32D192ED03ull * (realization_index + 1));
  // one splitmix64 step decorrelates nearby (seed, index) pairs
  return splitmix64(s);
}

class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    for (auto& w : s_) w = splitmix64(seed);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

// Per-realization value stream.
class Stream {
 public:
  Stream(std::uint64_t master_seed, std::uint64_t realization_index)
      : gen_(mix_seed(master_seed, realization_index)) {}

  // [0, 1), 53-bit resolution
  double u01() { return static_cast<double>(gen_.next() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * u01(); }

  // mean-zero Gaussian, Marsaglia polar method
  double normal(double sigma) {
    if (has_spare_) {
      has_spare_ = false;
      return sigma * spare_;
    }
    double u, v, q;
    do {
      u = 2.0 * u01() - 1.0;
      v = 2.0 * u01() - 1.0;
      q = u * u + v * v;
    } while (q >= 1.0 || q == 0.0);
    const double f = std::sqrt(-2.0 * std::log(q) / q);
    spare_ = v * f;
    has_spare_ = true;
    return sigma * u * f;
  }

  // mean-zero Gaussian conditioned on |x| <= cutoff_k * sigma
  double truncated_normal(double sigma, double cutoff_k) {
    const double bound = cutoff_k * sigma;
    for (long attempt = 0; attempt < 1000000; ++attempt) {
      const double x = normal(sigma);
      if (x >= -bound && x <= bound) return x;
    }
    throw NumericalError("truncated_normal: rejection sampling exceeded 1e6 attempts");
  }

 private:
  Xoshiro256pp gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace idslab::rng
