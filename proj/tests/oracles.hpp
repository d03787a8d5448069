#pragma once

// Independent reference implementations used only by tests. These follow
// the metric definitions directly (multiset clipping, product-form
// geometric mean) and share no code with the library's computation paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Tokens = std::vector<std::string>;

inline std::vector<std::string> joined_ngrams(const Tokens& tokens, int n) {
  std::vector<std::string> grams;
  if (static_cast<int>(tokens.size()) < n) {
    return grams;
  }
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string g;
    for (int j = 0; j < n; ++j) {
      if (j > 0) g.push_back('\x1f');
      g += tokens[i + j];
    }
    grams.push_back(std::move(g));
  }
  return grams;
}

/// Direct-definition corpus Bleu on pre-tokenized segments. Clipping is
/// done by erasing matches from a multiset of reference n-grams; the
/// geometric mean is the k-th root of the precision product.
inline double corpus_bleu(const std::vector<Tokens>& hyps, const std::vector<Tokens>& refs,
                          int max_order) {
  std::size_t hyp_len = 0;
  std::size_t ref_len = 0;
  for (const auto& h : hyps) hyp_len += h.size();
  for (const auto& r : refs) ref_len += r.size();

  double product = 1.0;
  int live_orders = 0;
  for (int n = 1; n <= max_order; ++n) {
    long long matches = 0;
    long long total = 0;
    for (std::size_t s = 0; s < hyps.size(); ++s) {
      const auto hyp_grams = joined_ngrams(hyps[s], n);
      const auto ref_grams = joined_ngrams(refs[s], n);
      total += static_cast<long long>(hyp_grams.size());
      std::multiset<std::string> pool(ref_grams.begin(), ref_grams.end());
      for (const auto& g : hyp_grams) {
        const auto it = pool.find(g);
        if (it != pool.end()) {
          pool.erase(it);
          ++matches;
        }
      }
    }
    if (total == 0) {
      continue;
    }
    ++live_orders;
    if (matches == 0) {
      return 0.0;
    }
    product *= static_cast<double>(matches) / static_cast<double>(total);
  }
  if (live_orders == 0) {
    return 0.0;
  }
  const double geo_mean = std::pow(product, 1.0 / live_orders);
  const double bp = hyp_len > ref_len
                        ? 1.0
                        : std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len));
  return 100.0 * bp * geo_mean;
}

/// Spearman rank correlation with average ranks for ties.
inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  const auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return v[x] < v[y]; });
    std::vector<double> r(v.size());
    std::size_t i = 0;
    while (i < order.size()) {
      std::size_t j = i;
      while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
      const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
      for (std::size_t t = i; t <= j; ++t) r[order[t]] = avg;
      i = j + 1;
    }
    return r;
  };
  const auto ra = ranks(a);
  const auto rb = ranks(b);
  const double n = static_cast<double>(a.size());
  double mean_a = 0, mean_b = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mean_a += ra[i];
    mean_b += rb[i];
  }
  mean_a /= n;
  mean_b /= n;
  double cov = 0, var_a = 0, var_b = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cov += (ra[i] - mean_a) * (rb[i] - mean_b);
    var_a += (ra[i] - mean_a) * (ra[i] - mean_a);
    var_b += (rb[i] - mean_b) * (rb[i] - mean_b);
  }
  if (var_a == 0 || var_b == 0) {
    return 0.0;
  }
  return cov / std::sqrt(var_a * var_b);
}

}  // namespace oracle
