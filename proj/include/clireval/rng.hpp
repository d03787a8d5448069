#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace clireval {

// mt19937_64 is fully specified by the standard; the helpers below avoid
// std::uniform_*_distribution, whose output is implementation-defined.
// Every seeded result is therefore reproducible across platforms.
using Rng = std::mt19937_64;

/// Unbiased draw in [0, n) via rejection. n must be > 0.
std::uint64_t draw_below(Rng& rng, std::uint64_t n);

/// Uniform double in [0, 1) built from 53 random bits.
double draw_unit(Rng& rng);

/// k distinct indices from [0, n), partial Fisher-Yates, in draw order.
std::vector<std::size_t> sample_indices(Rng& rng, std::size_t n, std::size_t k);

}  // namespace clireval
