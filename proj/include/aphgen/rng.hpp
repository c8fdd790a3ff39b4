#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace aphgen {

// Small deterministic generator (splitmix64). The standard engines would do,
// but their distribution objects are not bit-portable across standard library
// implementations, and corpus output must be reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n). n must be > 0.
  std::size_t next_index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

  // True with probability p. p <= 0 never fires, p >= 1 always fires.
  bool chance(double p) { return next_unit() < p; }

 private:
  std::uint64_t state_;
};

// Stable 64-bit combine for per-record seed derivation: the derived stream
// depends only on the inputs, never on iteration or scheduling order.
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts);

// FNV-1a over a byte string; used to key order-invariant shuffles by record id.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace aphgen
