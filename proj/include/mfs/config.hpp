#pragma once

#include <cstdint>

namespace mfs {

// Shared run limits.  size_limit bounds the number of weight points a single
// character/branching computation may touch; cutoff is the default height
// bound for well slices; seed drives the deterministic sampler used by the
// randomized property checks.
struct RunConfig {
  long long size_limit = 2'000'000;
  long long cutoff = 8;
  std::uint64_t seed = 0x5eed5eedULL;
};

// Splitmix-style generator: stable across platforms, unlike the standard
// library distributions.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n), n > 0; modulo bias is irrelevant for test sampling.
  long long below(long long n) { return static_cast<long long>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

}  // namespace mfs
