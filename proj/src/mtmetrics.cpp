#include "clireval/mtmetrics.hpp"

#include <algorithm>
#include <cmath>

#include "clireval/errors.hpp"

namespace clireval {

std::string_view to_string(Metric metric) {
  return metric == Metric::bleu ? "bleu" : "chrf";
}

Metric metric_from_string(std::string_view name) {
  if (name == "bleu") return Metric::bleu;
  if (name == "chrf") return Metric::chrf;
  throw ValidationError("unknown metric \"" + std::string(name) + "\"");
}

void BleuConfig::validate() const {
  if (max_order < 1) {
    throw ValidationError("bleu max_order must be >= 1");
  }
  if (smoothing == Smoothing::floor && !(floor_value > 0.0)) {
    throw ValidationError("bleu floor value must be > 0");
  }
}

void ChrfConfig::validate() const {
  if (char_order < 1) {
    throw ValidationError("chrf char_order must be >= 1");
  }
  if (word_order < 0) {
    throw ValidationError("chrf word_order must be >= 0");
  }
  if (!(beta > 0.0)) {
    throw ValidationError("chrf beta must be > 0");
  }
}

std::map<std::vector<std::string>, std::size_t> ngram_counts(std::span<const std::string> tokens,
                                                             std::size_t n) {
  if (n < 1) {
    throw ValidationError("n-gram order must be >= 1");
  }
  std::map<std::vector<std::string>, std::size_t> counts;
  if (tokens.size() < n) {
    return counts;
  }
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

namespace {

void check_corpus(std::span<const std::string> hypotheses, std::span<const std::string> references) {
  if (hypotheses.size() != references.size()) {
    throw ValidationError("hypothesis count " + std::to_string(hypotheses.size()) +
                          " does not match reference count " + std::to_string(references.size()));
  }
  if (hypotheses.empty()) {
    throw ValidationError("empty corpus");
  }
}

// Codepoint n-gram counts keyed by the window itself.
std::map<std::vector<std::uint32_t>, std::size_t> codepoint_ngrams(
    const std::vector<std::uint32_t>& cps, std::size_t n) {
  std::map<std::vector<std::uint32_t>, std::size_t> counts;
  if (cps.size() < n) {
    return counts;
  }
  for (std::size_t i = 0; i + n <= cps.size(); ++i) {
    ++counts[std::vector<std::uint32_t>(cps.begin() + static_cast<std::ptrdiff_t>(i),
                                        cps.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

template <typename Key>
std::size_t clipped_matches(const std::map<Key, std::size_t>& hyp,
                            const std::map<Key, std::size_t>& ref) {
  std::size_t matches = 0;
  for (const auto& [gram, count] : hyp) {
    const auto it = ref.find(gram);
    if (it != ref.end()) {
      matches += std::min(count, it->second);
    }
  }
  return matches;
}

struct OrderStats {
  std::uint64_t matches = 0;
  std::uint64_t hyp_total = 0;
  std::uint64_t ref_total = 0;
};

}  // namespace

MetricScore corpus_bleu(std::span<const std::string> hypotheses,
                        std::span<const std::string> references, const BleuConfig& cfg) {
  cfg.validate();
  check_corpus(hypotheses, references);

  const auto order_count = static_cast<std::size_t>(cfg.max_order);
  std::vector<OrderStats> stats(order_count);
  std::uint64_t hyp_len = 0;
  std::uint64_t ref_len = 0;
  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    const auto hyp = tokenize(hypotheses[s], cfg.profile);
    const auto ref = tokenize(references[s], cfg.profile);
    hyp_len += hyp.size();
    ref_len += ref.size();
    for (std::size_t n = 1; n <= order_count; ++n) {
      if (hyp.size() >= n) {
        stats[n - 1].hyp_total += hyp.size() - n + 1;
        stats[n - 1].matches += clipped_matches(ngram_counts(hyp, n), ngram_counts(ref, n));
      }
    }
  }

  MetricScore score{0.0, Metric::bleu, hypotheses.size()};
  double log_sum = 0.0;
  std::size_t live_orders = 0;
  for (const auto& st : stats) {
    if (st.hyp_total == 0) {
      continue;  // no n-grams of this order anywhere in the corpus
    }
    ++live_orders;
    double matches = static_cast<double>(st.matches);
    if (matches == 0.0) {
      if (cfg.smoothing == Smoothing::floor) {
        matches = cfg.floor_value;
      } else {
        return score;
      }
    }
    log_sum += std::log(matches / static_cast<double>(st.hyp_total));
  }
  if (live_orders == 0) {
    return score;
  }
  const double bp =
      hyp_len > ref_len ? 1.0
                        : std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len));
  score.value = 100.0 * bp * std::exp(log_sum / static_cast<double>(live_orders));
  return score;
}

MetricScore corpus_chrf(std::span<const std::string> hypotheses,
                        std::span<const std::string> references, const ChrfConfig& cfg) {
  cfg.validate();
  check_corpus(hypotheses, references);

  const auto char_orders = static_cast<std::size_t>(cfg.char_order);
  const auto word_orders = static_cast<std::size_t>(cfg.word_order);
  std::vector<OrderStats> stats(char_orders + word_orders);

  const LanguageProfile word_profile;  // plain whitespace split for word n-grams
  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    std::vector<std::uint32_t> hyp_cps;
    for (const auto cp : decode_utf8(hypotheses[s])) {
      if (!is_ascii_space(cp)) hyp_cps.push_back(cp);
    }
    std::vector<std::uint32_t> ref_cps;
    for (const auto cp : decode_utf8(references[s])) {
      if (!is_ascii_space(cp)) ref_cps.push_back(cp);
    }
    for (std::size_t n = 1; n <= char_orders; ++n) {
      auto& st = stats[n - 1];
      if (hyp_cps.size() >= n) st.hyp_total += hyp_cps.size() - n + 1;
      if (ref_cps.size() >= n) st.ref_total += ref_cps.size() - n + 1;
      if (hyp_cps.size() >= n && ref_cps.size() >= n) {
        st.matches += clipped_matches(codepoint_ngrams(hyp_cps, n), codepoint_ngrams(ref_cps, n));
      }
    }
    if (word_orders > 0) {
      const auto hyp_words = tokenize(hypotheses[s], word_profile);
      const auto ref_words = tokenize(references[s], word_profile);
      for (std::size_t n = 1; n <= word_orders; ++n) {
        auto& st = stats[char_orders + n - 1];
        if (hyp_words.size() >= n) st.hyp_total += hyp_words.size() - n + 1;
        if (ref_words.size() >= n) st.ref_total += ref_words.size() - n + 1;
        if (hyp_words.size() >= n && ref_words.size() >= n) {
          st.matches += clipped_matches(ngram_counts(hyp_words, n), ngram_counts(ref_words, n));
        }
      }
    }
  }

  double precision_sum = 0.0;
  std::size_t precision_orders = 0;
  double recall_sum = 0.0;
  std::size_t recall_orders = 0;
  for (const auto& st : stats) {
    if (st.hyp_total > 0) {
      precision_sum += static_cast<double>(st.matches) / static_cast<double>(st.hyp_total);
      ++precision_orders;
    }
    if (st.ref_total > 0) {
      recall_sum += static_cast<double>(st.matches) / static_cast<double>(st.ref_total);
      ++recall_orders;
    }
  }
  const double precision = precision_orders > 0 ? precision_sum / precision_orders : 0.0;
  const double recall = recall_orders > 0 ? recall_sum / recall_orders : 0.0;

  MetricScore score{0.0, Metric::chrf, hypotheses.size()};
  const double beta2 = cfg.beta * cfg.beta;
  const double denom = beta2 * precision + recall;
  if (denom > 0.0) {
    score.value = 100.0 * (1.0 + beta2) * precision * recall / denom;
  }
  return score;
}

}  // namespace clireval
