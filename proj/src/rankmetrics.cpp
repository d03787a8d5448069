#include "clireval/rankmetrics.hpp"

#include <algorithm>
#include <cmath>

#include "clireval/errors.hpp"

namespace clireval {

double dcg_at_k(std::span<const double> gains_in_rank_order, std::size_t k) {
  if (k < 1) {
    throw ValidationError("k must be >= 1");
  }
  const std::size_t depth = std::min(k, gains_in_rank_order.size());
  double dcg = 0.0;
  for (std::size_t i = 0; i < depth; ++i) {
    dcg += gains_in_rank_order[i] / std::log2(static_cast<double>(i) + 2.0);
  }
  return dcg;
}

double ndcg_at_k(const ResultList& results, const std::map<std::string, double>& judgments,
                 const RankConfig& cfg) {
  if (judgments.empty()) {
    throw ValidationError("ndcg is undefined for empty judgments");
  }
  std::vector<double> gains;
  gains.reserve(results.hits.size());
  for (const auto& hit : results.hits) {
    const auto it = judgments.find(hit.product_id);
    gains.push_back(it == judgments.end() ? 0.0 : it->second);
  }
  std::vector<double> ideal;
  ideal.reserve(judgments.size());
  for (const auto& [pid, gain] : judgments) {
    ideal.push_back(gain);
  }
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  const double idcg = dcg_at_k(ideal, cfg.k);
  if (idcg <= 0.0) {
    return 0.0;
  }
  return dcg_at_k(gains, cfg.k) / idcg;
}

SearchScore evaluate_query_set(const Index& index, const TranslationSet& queries,
                               const TestSet& testset, const RankConfig& cfg,
                               const LanguageProfile& profile) {
  if (queries.translations.size() != testset.entries.size()) {
    throw ValidationError("translation set \"" + queries.system_id + "\" has " +
                          std::to_string(queries.translations.size()) + " queries but the test set has " +
                          std::to_string(testset.entries.size()) + " entries");
  }
  SearchScore score;
  double sum = 0.0;
  for (std::size_t i = 0; i < testset.entries.size(); ++i) {
    const auto& entry = testset.entries[i];
    if (entry.judgments.empty()) {
      ++score.skipped_count;
      continue;
    }
    const auto results = search_top_k(index, queries.translations[i], cfg.k, profile);
    const double nd = ndcg_at_k(results, entry.judgments, cfg);
    score.per_query.push_back(QueryNdcg{queries.translations[i], nd, results.hits.size()});
    sum += nd;
    ++score.evaluated_count;
  }
  if (score.evaluated_count > 0) {
    score.value = 100.0 * sum / static_cast<double>(score.evaluated_count);
  }
  return score;
}

}  // namespace clireval
