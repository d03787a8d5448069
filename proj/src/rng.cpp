#include "clireval/rng.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace clireval {

std::uint64_t draw_below(Rng& rng, std::uint64_t n) {
  if (n == 0) {
    throw std::logic_error("draw_below: n must be > 0");
  }
  // Accept x < 2^64 - (2^64 mod n) so that x % n is unbiased.
  const std::uint64_t rem = (0 - n) % n;  // 2^64 mod n
  std::uint64_t x = rng();
  if (rem != 0) {
    const std::uint64_t limit = 0 - rem;
    while (x >= limit) {
      x = rng();
    }
  }
  return x % n;
}

double draw_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::size_t> sample_indices(Rng& rng, std::size_t n, std::size_t k) {
  if (k > n) {
    throw std::logic_error("sample_indices: k exceeds population size");
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(draw_below(rng, n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace clireval
