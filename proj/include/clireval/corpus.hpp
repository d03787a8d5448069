#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clireval {

struct Product {
  std::string product_id;
  std::string title;
  std::optional<std::string> description;
  std::string locale;

  bool operator==(const Product&) const = default;
};

/// Searchable inventory of one store. Immutable once loaded.
class ProductCatalog {
 public:
  /// Rejects empty or duplicate product ids.
  void add(Product product);

  const Product* find(std::string_view product_id) const;
  const std::vector<Product>& products() const { return products_; }
  std::size_t size() const { return products_.size(); }
  bool empty() const { return products_.empty(); }

 private:
  std::vector<Product> products_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
};

struct QueryLogEntry {
  std::string query;
  std::uint64_t frequency = 0;
  std::map<std::string, std::uint64_t> purchases;  // product_id -> purchase count

  bool operator==(const QueryLogEntry&) const = default;
};

enum class Bin { head, torso, tail };

std::string_view to_string(Bin bin);
Bin bin_from_string(std::string_view name);

/// Fraction of sampled queries drawn from each frequency bin.
struct BinSpec {
  double head_share = 0.30;
  double torso_share = 0.40;
  double tail_share = 0.30;

  void validate() const;  // shares in [0,1], summing to 1 within 1e-9
  bool operator==(const BinSpec&) const = default;
};

/// Relevance gain from a purchase count: log_base(offset + count).
/// The defaults give gain(0) = 0 and gain(1) = 1.
struct GainRule {
  double base = 2.0;
  double offset = 1.0;

  double operator()(std::uint64_t purchase_count) const;
  void validate() const;
  bool operator==(const GainRule&) const = default;
};

struct TestEntry {
  std::string query_ref;                     // target-language reference query
  std::string query_src;                     // source-language human translation (may be empty)
  std::map<std::string, double> judgments;   // product_id -> gain
  Bin bin = Bin::torso;

  bool operator==(const TestEntry&) const = default;
};

struct TestSetParams {
  std::uint64_t n = 0;
  BinSpec bins;
  GainRule gain;
  std::uint64_t seed = 0;

  bool operator==(const TestSetParams&) const = default;
};

struct TestSet {
  std::string store_locale;
  std::string source_locale;
  std::optional<TestSetParams> params;  // present when produced by sampling
  std::vector<TestEntry> entries;

  bool operator==(const TestSet&) const = default;
};

/// One system's translations, aligned positionally with a TestSet.
struct TranslationSet {
  std::string system_id;
  std::vector<std::string> translations;

  bool operator==(const TranslationSet&) const = default;
};

/// Catalog JSONL: {"product_id": str, "title": str, "description": str?, "locale": str}.
/// Malformed lines and duplicate ids are reported with their line number.
ProductCatalog load_catalog(const std::string& path);

/// Query log JSONL: {"query": str, "frequency": int, "purchases": {str: int}}.
std::vector<QueryLogEntry> load_query_log(const std::string& path);

/// Samples n queries from the log: entries with at least one purchase are
/// ranked by frequency (descending, ties by query text), split into
/// head/torso/tail rank bins, and sampled uniformly without replacement per
/// bin with the seeded generator. Judgment gains come from the gain rule.
TestSet create_test_set(const std::vector<QueryLogEntry>& log, std::uint64_t n,
                        const BinSpec& bins, const GainRule& gain, std::uint64_t seed,
                        std::string store_locale = {}, std::string source_locale = {});

/// Fills query_src positionally; counts must match.
TestSet attach_source_translations(TestSet ts, const std::vector<std::string>& src_queries);

/// TestSet JSONL: one header object (locales + creation parameters) followed
/// by one entry object per line. Serialization is byte-deterministic.
void save_test_set(const TestSet& ts, const std::string& path);
TestSet load_test_set(const std::string& path);

/// Plain text, one translation per line.
TranslationSet load_translations(const std::string& path, std::string system_id);
void save_translations(const TranslationSet& ts, const std::string& path);

}  // namespace clireval
