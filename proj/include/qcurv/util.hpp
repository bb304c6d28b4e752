#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <cstdio>
#include <string>

namespace qcurv {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Deterministic xoshiro-style generator with hand-rolled distributions so
/// that report bytes do not depend on the standard library's distribution
/// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    // splitmix64 expansion of the seed
    std::uint64_t z = seed;
    for (auto& s : state_) {
      z += 0x9e3779b97f4a7c15ULL;
      std::uint64_t w = z;
      w = (w ^ (w >> 30)) * 0xbf58476d1ce4e5b9ULL;
      w = (w ^ (w >> 27)) * 0x94d049bb133111ebULL;
      s = w ^ (w >> 31);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via Box-Muller (pinned, no libstdc++ dependence).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0, u2 = 0;
    do {
      u1 = uniform();
    } while (u1 <= 1e-300);
    u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2 * M_PI * u2);
  }

  /// Uniform direction on the unit sphere of R^m.
  Vec unit_vector(int m) {
    Vec v(m);
    double nrm = 0;
    do {
      for (int i = 0; i < m; ++i) v[i] = normal();
      nrm = v.norm();
    } while (nrm < 1e-12);
    return v / nrm;
  }

  /// Uniform point in the open unit ball of R^m.
  Vec ball_point(int m, double radius = 1.0) {
    const double r = radius * std::pow(uniform(), 1.0 / m);
    return r * unit_vector(m);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t state_[4] = {};
  bool have_spare_ = false;
  double spare_ = 0;
};

/// Fixed 17-significant-digit formatting used for every floating-point value
/// that lands in a report file, so identical runs emit identical bytes.
inline std::string fmt_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// FNV-1a, used to fingerprint configurations in report provenance blocks.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace qcurv
