#pragma once

#include <cstdint>

namespace dflab {

// Counter-based generator: value depends only on (seed, stream, counter), so
// any partition of a sample index range across workers draws identical numbers.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  CounterRng split(std::uint64_t stream) const {
    return CounterRng(mix(seed_ ^ mix(stream + 0x9e3779b97f4a7c15ull)), stream);
  }

  std::uint64_t bits(std::uint64_t counter) const {
    return mix(mix(seed_ + 0x9e3779b97f4a7c15ull * (counter + 1)) ^
               mix(stream_ + 0xbf58476d1ce4e5b9ull));
  }

  // uniform in [0, 1)
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  double uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform(counter);
  }

private:
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
};

} // namespace dflab
