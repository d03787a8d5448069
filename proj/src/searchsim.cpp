#include "clireval/searchsim.hpp"

#include <algorithm>
#include <cmath>

#include "clireval/errors.hpp"
#include "serial.hpp"

namespace clireval {

using detail::json;

namespace {

// Distinct query terms in sorted order. Sorting fixes the floating-point
// accumulation order, so scores are reproducible bit for bit.
std::vector<std::string> distinct_terms(std::span<const std::string> tokens) {
  std::vector<std::string> terms(tokens.begin(), tokens.end());
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return terms;
}

double idf(std::size_t doc_count, std::size_t df) {
  const auto n = static_cast<double>(doc_count);
  const auto d = static_cast<double>(df);
  return std::log(1.0 + (n - d + 0.5) / (d + 0.5));
}

double term_contribution(double idf_value, double tf, double doc_len, double avg_len,
                         const Bm25Params& p) {
  const double norm = avg_len > 0.0 ? doc_len / avg_len : 1.0;
  return idf_value * tf * (p.k1 + 1.0) / (tf + p.k1 * (1.0 - p.b + p.b * norm));
}

}  // namespace

Index build_index(const ProductCatalog& catalog, const LanguageProfile& profile) {
  if (catalog.empty()) {
    throw ValidationError("cannot build an index from an empty catalog");
  }
  Index index;
  index.profile = profile;
  index.doc_lengths.reserve(catalog.size());
  index.product_ids.reserve(catalog.size());

  std::uint64_t total_len = 0;
  for (std::size_t d = 0; d < catalog.size(); ++d) {
    const Product& product = catalog.products()[d];
    std::string text = product.title;
    if (product.description) {
      text += ' ';
      text += *product.description;
    }
    const auto tokens = tokenize(text, profile);
    index.doc_lengths.push_back(static_cast<std::uint32_t>(tokens.size()));
    index.product_ids.push_back(product.product_id);
    total_len += tokens.size();

    std::map<std::string, std::uint32_t> tf;
    for (const auto& t : tokens) {
      ++tf[t];
    }
    for (const auto& [term, count] : tf) {
      index.postings[term].push_back(Posting{static_cast<std::uint32_t>(d), count});
    }
  }
  index.avg_doc_length =
      catalog.empty() ? 0.0 : static_cast<double>(total_len) / static_cast<double>(catalog.size());
  return index;
}

double bm25_score(const Index& index, std::span<const std::string> query_tokens,
                  std::uint32_t doc, const Bm25Params& params) {
  if (doc >= index.doc_count()) {
    throw ValidationError("document ordinal " + std::to_string(doc) + " out of range");
  }
  double score = 0.0;
  const double doc_len = index.doc_lengths[doc];
  for (const auto& term : distinct_terms(query_tokens)) {
    const auto it = index.postings.find(term);
    if (it == index.postings.end()) {
      continue;
    }
    const auto& postings = it->second;
    const auto pit = std::lower_bound(postings.begin(), postings.end(), doc,
                                      [](const Posting& p, std::uint32_t d) { return p.doc < d; });
    if (pit == postings.end() || pit->doc != doc) {
      continue;
    }
    score += term_contribution(idf(index.doc_count(), postings.size()),
                               static_cast<double>(pit->tf), doc_len, index.avg_doc_length, params);
  }
  return score;
}

ResultList search_top_k(const Index& index, const std::string& query, std::size_t k,
                        const LanguageProfile& profile, const Bm25Params& params) {
  if (k < 1) {
    throw ValidationError("k must be >= 1");
  }
  ResultList result;
  result.query = query;
  result.k = k;

  const auto terms = distinct_terms(tokenize(query, profile));
  std::vector<double> acc(index.doc_count(), 0.0);
  for (const auto& term : terms) {
    const auto it = index.postings.find(term);
    if (it == index.postings.end()) {
      continue;
    }
    const double w = idf(index.doc_count(), it->second.size());
    for (const auto& [doc, tf] : it->second) {
      acc[doc] += term_contribution(w, static_cast<double>(tf), index.doc_lengths[doc],
                                    index.avg_doc_length, params);
    }
  }

  std::vector<std::uint32_t> matched;
  for (std::uint32_t d = 0; d < acc.size(); ++d) {
    if (acc[d] > 0.0) {
      matched.push_back(d);
    }
  }
  const std::size_t keep = std::min(k, matched.size());
  const auto by_score = [&](std::uint32_t a, std::uint32_t b) {
    if (acc[a] != acc[b]) return acc[a] > acc[b];
    return index.product_ids[a] < index.product_ids[b];
  };
  std::partial_sort(matched.begin(), matched.begin() + static_cast<std::ptrdiff_t>(keep),
                    matched.end(), by_score);
  result.hits.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    result.hits.push_back(ResultHit{index.product_ids[matched[i]], acc[matched[i]]});
  }
  return result;
}

ResultList search_top_k(const Index& index, const std::string& query, std::size_t k) {
  return search_top_k(index, query, k, index.profile);
}

void save_index(const Index& index, const std::string& path) {
  json j;
  j["format"] = "clireval.index";
  j["version"] = 1;
  j["profile"] = detail::profile_to_json(index.profile);
  j["doc_lengths"] = index.doc_lengths;
  j["product_ids"] = index.product_ids;
  j["avg_doc_length"] = index.avg_doc_length;
  json postings = json::object();
  for (const auto& [term, plist] : index.postings) {
    json arr = json::array();
    for (const auto& p : plist) {
      arr.push_back(json::array({p.doc, p.tf}));
    }
    postings[term] = std::move(arr);
  }
  j["postings"] = std::move(postings);
  detail::atomic_write_file(path, j.dump() + "\n");
}

Index load_index(const std::string& path) {
  json j;
  try {
    j = json::parse(detail::read_file(path));
  } catch (const json::exception& e) {
    throw ValidationError(path + ": malformed index file: " + e.what());
  }
  if (j.value("format", "") != "clireval.index") {
    throw ValidationError(path + ": not a clireval index file");
  }
  if (j.value("version", 0) != 1) {
    throw ValidationError(path + ": unsupported index version");
  }
  Index index;
  index.profile = detail::profile_from_json(j.at("profile"), path);
  index.doc_lengths = j.at("doc_lengths").get<std::vector<std::uint32_t>>();
  index.product_ids = j.at("product_ids").get<std::vector<std::string>>();
  if (index.doc_lengths.size() != index.product_ids.size()) {
    throw ValidationError(path + ": doc_lengths and product_ids disagree");
  }
  const std::size_t doc_count = index.doc_lengths.size();
  std::uint64_t total_len = 0;
  for (const auto len : index.doc_lengths) {
    total_len += len;
  }
  index.avg_doc_length = doc_count > 0 ? static_cast<double>(total_len) / doc_count : 0.0;
  for (const auto& [term, arr] : j.at("postings").items()) {
    std::vector<Posting> plist;
    plist.reserve(arr.size());
    std::uint32_t prev_doc = 0;
    bool first = true;
    for (const auto& pj : arr) {
      Posting p{pj.at(0).get<std::uint32_t>(), pj.at(1).get<std::uint32_t>()};
      if (p.doc >= doc_count || p.tf == 0 || (!first && p.doc <= prev_doc)) {
        throw ValidationError(path + ": corrupt postings for term \"" + term + "\"");
      }
      prev_doc = p.doc;
      first = false;
      plist.push_back(p);
    }
    index.postings.emplace(term, std::move(plist));
  }
  return index;
}

}  // namespace clireval
