#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "clireval/corpus.hpp"
#include "clireval/text.hpp"

namespace clireval {

struct Posting {
  std::uint32_t doc = 0;  // ordinal into the index
  std::uint32_t tf = 0;

  bool operator==(const Posting&) const = default;
};

/// Okapi BM25 parameters. idf(t) = ln(1 + (N - df + 0.5) / (df + 0.5)),
/// which is nonnegative for every df <= N.
struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

/// Inverted index over product titles (and descriptions when present).
/// Immutable after build; safe for concurrent readers.
struct Index {
  LanguageProfile profile;
  std::map<std::string, std::vector<Posting>, std::less<>> postings;  // doc-ordinal ascending
  std::vector<std::uint32_t> doc_lengths;
  std::vector<std::string> product_ids;  // ordinal -> product_id
  double avg_doc_length = 0.0;

  std::size_t doc_count() const { return doc_lengths.size(); }
};

struct ResultHit {
  std::string product_id;
  double score = 0.0;

  bool operator==(const ResultHit&) const = default;
};

/// Top-k retrieval result. Scores are non-increasing; ties are broken by
/// ascending product_id; zero-score documents are excluded.
struct ResultList {
  std::string query;
  std::vector<ResultHit> hits;
  std::size_t k = 0;

  bool operator==(const ResultList&) const = default;
};

Index build_index(const ProductCatalog& catalog, const LanguageProfile& profile);

/// BM25 score of one document against the distinct query terms.
double bm25_score(const Index& index, std::span<const std::string> query_tokens,
                  std::uint32_t doc, const Bm25Params& params = {});

ResultList search_top_k(const Index& index, const std::string& query, std::size_t k,
                        const LanguageProfile& profile, const Bm25Params& params = {});

/// Same, tokenizing the query with the profile the index was built with.
ResultList search_top_k(const Index& index, const std::string& query, std::size_t k);

/// Versioned JSON persistence.
void save_index(const Index& index, const std::string& path);
Index load_index(const std::string& path);

}  // namespace clireval
