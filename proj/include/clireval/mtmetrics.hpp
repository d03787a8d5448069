#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "clireval/text.hpp"

namespace clireval {

enum class Metric { bleu, chrf };

std::string_view to_string(Metric metric);
Metric metric_from_string(std::string_view name);

enum class Smoothing { none, floor };

/// Corpus Bleu configuration. Defaults: 4-gram, case-sensitive,
/// punctuation split into standalone tokens, no smoothing.
struct BleuConfig {
  int max_order = 4;
  LanguageProfile profile{TokenMode::word, /*lowercase=*/false, /*strip_punct=*/false,
                          /*split_punct=*/true};
  Smoothing smoothing = Smoothing::none;
  double floor_value = 0.1;  // replaces zero match counts when smoothing == floor

  void validate() const;
};

/// Corpus Chrf configuration (chrF2 defaults: 6 character orders, no word
/// orders, beta = 2).
struct ChrfConfig {
  int char_order = 6;
  int word_order = 0;
  double beta = 2.0;

  void validate() const;
};

struct MetricScore {
  double value = 0.0;  // 0..100
  Metric metric = Metric::bleu;
  std::size_t segment_count = 0;
};

/// All contiguous n-grams of tokens with multiplicities; empty when
/// tokens.size() < n.
std::map<std::vector<std::string>, std::size_t> ngram_counts(std::span<const std::string> tokens,
                                                             std::size_t n);

/// Corpus-level Bleu: clipped n-gram matches and totals are summed over all
/// segments per order before taking precisions; the geometric mean runs
/// over orders with nonzero totals; the brevity penalty uses corpus token
/// counts. Any zero precision gives 0 unless floor smoothing is on.
MetricScore corpus_bleu(std::span<const std::string> hypotheses,
                        std::span<const std::string> references, const BleuConfig& cfg = {});

/// Corpus-level Chrf over whitespace-removed codepoint n-grams: per-order
/// precision and recall are corpus-summed, averaged over orders with
/// nonzero totals, then combined with the beta-weighted F-score.
MetricScore corpus_chrf(std::span<const std::string> hypotheses,
                        std::span<const std::string> references, const ChrfConfig& cfg = {});

}  // namespace clireval
