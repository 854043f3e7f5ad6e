#pragma once

#include <cmath>
#include <cstdint>

namespace kherd {

// SplitMix64 (Steele/Lea/Vigna, public domain). One 64-bit word of state,
// advanced by a fixed odd increment; every output applies the same finalizer.
// Independent streams are obtained by hashing (master seed, stream id) into a
// fresh state, so any (seed, stream) pair reproduces the same byte sequence on
// every platform. Reports that embed an RNG name refer to this as
// "splitmix64" version 1.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; never returns 0, safe under log().
  double uniform_pos() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) by rejection, bias-free.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // One Box-Muller pair of independent standard normals. Consumes exactly two
  // uniforms, keeping stream advancement predictable.
  void normal_pair(double& z0, double& z1) {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    z0 = radius * std::cos(theta);
    z1 = radius * std::sin(theta);
  }

 private:
  std::uint64_t state_;
};

constexpr const char* kRngAlgorithm = "splitmix64";
constexpr int kRngVersion = 1;

// Hash (master seed, stream id) into the initial state of a derived stream.
inline std::uint64_t derive_stream_seed(std::uint64_t master,
                                        std::uint64_t stream) {
  SplitMix64 mixer(master ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  return mixer.next();
}

}  // namespace kherd
