#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "clireval/corpus.hpp"
#include "clireval/searchsim.hpp"

namespace clireval {

struct RankConfig {
  std::size_t k = 16;  // nDCG cutoff; discount is 1/log2(rank+1), gains used as-is
};

struct QueryNdcg {
  std::string query;
  double ndcg = 0.0;
  std::size_t hits = 0;
};

/// Aggregate nDCG@k over a query set, scaled to 0-100. Queries without
/// judgments are skipped, not zero-scored.
struct SearchScore {
  double value = 0.0;
  std::vector<QueryNdcg> per_query;
  std::size_t evaluated_count = 0;
  std::size_t skipped_count = 0;
};

/// Sum of gains[i] / log2(i + 1) over 1-based ranks i <= min(k, len).
double dcg_at_k(std::span<const double> gains_in_rank_order, std::size_t k);

/// DCG of the retrieved gains (unjudged products count 0) over the ideal
/// DCG of the judgment gains sorted descending, both truncated at k.
/// Judgments must be nonempty.
double ndcg_at_k(const ResultList& results, const std::map<std::string, double>& judgments,
                 const RankConfig& cfg = {});

/// Runs search_top_k + ndcg_at_k per entry and averages (in entry order)
/// over queries with nonempty judgments.
SearchScore evaluate_query_set(const Index& index, const TranslationSet& queries,
                               const TestSet& testset, const RankConfig& cfg,
                               const LanguageProfile& profile);

}  // namespace clireval
