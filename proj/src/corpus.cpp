#include "clireval/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "clireval/errors.hpp"
#include "clireval/rng.hpp"
#include "serial.hpp"

namespace clireval {

using detail::json;

void ProductCatalog::add(Product product) {
  if (product.product_id.empty()) {
    throw ValidationError("product_id must be nonempty");
  }
  if (product.title.empty()) {
    throw ValidationError("product \"" + product.product_id + "\" has an empty title");
  }
  const auto [it, inserted] = by_id_.emplace(product.product_id, products_.size());
  if (!inserted) {
    throw ValidationError("duplicate product_id \"" + product.product_id + "\"");
  }
  products_.push_back(std::move(product));
}

const Product* ProductCatalog::find(std::string_view product_id) const {
  const auto it = by_id_.find(product_id);
  return it == by_id_.end() ? nullptr : &products_[it->second];
}

std::string_view to_string(Bin bin) {
  switch (bin) {
    case Bin::head:
      return "head";
    case Bin::torso:
      return "torso";
    case Bin::tail:
      return "tail";
  }
  return "torso";
}

Bin bin_from_string(std::string_view name) {
  if (name == "head") return Bin::head;
  if (name == "torso") return Bin::torso;
  if (name == "tail") return Bin::tail;
  throw ValidationError("unknown bin \"" + std::string(name) + "\"");
}

void BinSpec::validate() const {
  for (const double s : {head_share, torso_share, tail_share}) {
    if (!(s >= 0.0 && s <= 1.0)) {
      throw ValidationError("bin shares must lie in [0,1]");
    }
  }
  if (std::abs(head_share + torso_share + tail_share - 1.0) > 1e-9) {
    throw ValidationError("bin shares must sum to 1");
  }
}

double GainRule::operator()(std::uint64_t purchase_count) const {
  return std::log(offset + static_cast<double>(purchase_count)) / std::log(base);
}

void GainRule::validate() const {
  if (!(base > 1.0)) {
    throw ValidationError("gain rule base must be > 1");
  }
  if (!(offset > 0.0)) {
    throw ValidationError("gain rule offset must be > 0");
  }
}

ProductCatalog load_catalog(const std::string& path) {
  auto in = detail::open_input(path);
  ProductCatalog catalog;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    const auto ctx = detail::where(path, line_no);
    const json j = detail::parse_json_line(line, path, line_no);
    Product p;
    p.product_id = detail::require_string(j, "product_id", ctx);
    p.title = detail::require_string(j, "title", ctx);
    p.locale = detail::require_string(j, "locale", ctx);
    if (j.contains("description")) {
      if (!j.at("description").is_string()) {
        throw ValidationError(ctx + ": field \"description\" must be a string");
      }
      p.description = j.at("description").get<std::string>();
    }
    if (p.product_id.empty()) {
      throw ValidationError(ctx + ": product_id must be nonempty");
    }
    if (p.title.empty()) {
      throw ValidationError(ctx + ": title must be nonempty");
    }
    if (catalog.find(p.product_id) != nullptr) {
      throw ValidationError(ctx + ": duplicate product_id \"" + p.product_id + "\"");
    }
    catalog.add(std::move(p));
  }
  if (catalog.empty()) {
    std::cerr << "warning: catalog " << path << " is empty\n";
  }
  return catalog;
}

std::vector<QueryLogEntry> load_query_log(const std::string& path) {
  auto in = detail::open_input(path);
  std::vector<QueryLogEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    const auto ctx = detail::where(path, line_no);
    const json j = detail::parse_json_line(line, path, line_no);
    QueryLogEntry e;
    e.query = detail::require_string(j, "query", ctx);
    if (e.query.empty()) {
      throw ValidationError(ctx + ": query must be nonempty");
    }
    const auto freq = detail::require_int(j, "frequency", ctx);
    if (freq <= 0) {
      throw ValidationError(ctx + ": frequency must be >= 1, got " + std::to_string(freq));
    }
    e.frequency = static_cast<std::uint64_t>(freq);
    if (j.contains("purchases")) {
      if (!j.at("purchases").is_object()) {
        throw ValidationError(ctx + ": field \"purchases\" must be an object");
      }
      for (const auto& [pid, count] : j.at("purchases").items()) {
        if (!count.is_number_integer() || count.get<std::int64_t>() <= 0) {
          throw ValidationError(ctx + ": purchase count for \"" + pid + "\" must be >= 1");
        }
        e.purchases[pid] = static_cast<std::uint64_t>(count.get<std::int64_t>());
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

namespace {

// Rounded cut of a cumulative share; clamped so fp noise cannot push a
// boundary past the population.
std::size_t share_cut(double cumulative_share, std::size_t total) {
  const auto cut = static_cast<std::size_t>(std::llround(cumulative_share * static_cast<double>(total)));
  return std::min(cut, total);
}

}  // namespace

TestSet create_test_set(const std::vector<QueryLogEntry>& log, std::uint64_t n,
                        const BinSpec& bins, const GainRule& gain, std::uint64_t seed,
                        std::string store_locale, std::string source_locale) {
  bins.validate();
  gain.validate();

  TestSet ts;
  ts.store_locale = std::move(store_locale);
  ts.source_locale = std::move(source_locale);
  ts.params = TestSetParams{n, bins, gain, seed};
  if (n == 0) {
    return ts;
  }
  if (log.empty()) {
    throw ValidationError("query log is empty");
  }

  std::vector<const QueryLogEntry*> eligible;
  eligible.reserve(log.size());
  for (const auto& e : log) {
    if (!e.purchases.empty()) {
      eligible.push_back(&e);
    }
  }
  if (n > eligible.size()) {
    throw ValidationError("sample size " + std::to_string(n) + " exceeds eligible query count " +
                          std::to_string(eligible.size()));
  }

  // Frequency rank order; ties broken by query text so the partition is
  // deterministic.
  std::stable_sort(eligible.begin(), eligible.end(),
                   [](const QueryLogEntry* a, const QueryLogEntry* b) {
                     if (a->frequency != b->frequency) return a->frequency > b->frequency;
                     return a->query < b->query;
                   });

  const std::size_t total = eligible.size();
  const std::size_t head_end = share_cut(bins.head_share, total);
  const std::size_t torso_end = std::max(head_end, share_cut(bins.head_share + bins.torso_share, total));

  const auto n_head = static_cast<std::int64_t>(std::llround(static_cast<double>(n) * bins.head_share));
  auto n_tail = static_cast<std::int64_t>(std::llround(static_cast<double>(n) * bins.tail_share));
  auto n_torso = static_cast<std::int64_t>(n) - n_head - n_tail;
  if (n_torso < 0) {
    n_tail += n_torso;  // remainder rule: torso absorbs rounding, tail backstops
    n_torso = 0;
  }

  struct BinSlice {
    Bin bin;
    std::size_t begin, end;
    std::int64_t want;
  };
  const BinSlice slices[] = {{Bin::head, 0, head_end, n_head},
                             {Bin::torso, head_end, torso_end, n_torso},
                             {Bin::tail, torso_end, total, n_tail}};

  Rng rng(seed);
  for (const auto& s : slices) {
    const auto have = static_cast<std::int64_t>(s.end - s.begin);
    if (s.want > have) {
      throw ValidationError(std::string(to_string(s.bin)) + " bin has " + std::to_string(have) +
                            " eligible queries, need " + std::to_string(s.want));
    }
    auto picks = sample_indices(rng, static_cast<std::size_t>(have), static_cast<std::size_t>(s.want));
    std::sort(picks.begin(), picks.end());  // keep entries in rank order within the bin
    for (const auto p : picks) {
      const QueryLogEntry& src = *eligible[s.begin + p];
      TestEntry entry;
      entry.query_ref = src.query;
      entry.bin = s.bin;
      for (const auto& [pid, count] : src.purchases) {
        entry.judgments[pid] = gain(count);
      }
      ts.entries.push_back(std::move(entry));
    }
  }
  return ts;
}

TestSet attach_source_translations(TestSet ts, const std::vector<std::string>& src_queries) {
  if (src_queries.size() != ts.entries.size()) {
    throw ValidationError("source translation count " + std::to_string(src_queries.size()) +
                          " does not match entry count " + std::to_string(ts.entries.size()));
  }
  for (std::size_t i = 0; i < ts.entries.size(); ++i) {
    ts.entries[i].query_src = src_queries[i];
  }
  return ts;
}

void save_test_set(const TestSet& ts, const std::string& path) {
  std::string out;
  json header;
  header["store_locale"] = ts.store_locale;
  header["source_locale"] = ts.source_locale;
  if (ts.params) {
    header["params"] = json{{"n", ts.params->n},
                            {"seed", ts.params->seed},
                            {"bins",
                             {{"head", ts.params->bins.head_share},
                              {"torso", ts.params->bins.torso_share},
                              {"tail", ts.params->bins.tail_share}}},
                            {"gain", {{"base", ts.params->gain.base}, {"offset", ts.params->gain.offset}}}};
  }
  out += header.dump();
  out += '\n';
  for (const auto& e : ts.entries) {
    json j;
    j["query_ref"] = e.query_ref;
    if (!e.query_src.empty()) {
      j["query_src"] = e.query_src;
    }
    j["bin"] = std::string(to_string(e.bin));
    j["judgments"] = json::object();
    for (const auto& [pid, g] : e.judgments) {
      j["judgments"][pid] = g;
    }
    out += j.dump();
    out += '\n';
  }
  detail::atomic_write_file(path, out);
}

TestSet load_test_set(const std::string& path) {
  auto in = detail::open_input(path);
  TestSet ts;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    const auto ctx = detail::where(path, line_no);
    const json j = detail::parse_json_line(line, path, line_no);
    if (!have_header) {
      ts.store_locale = detail::require_string(j, "store_locale", ctx);
      ts.source_locale = detail::require_string(j, "source_locale", ctx);
      if (j.contains("params")) {
        const json& p = j.at("params");
        TestSetParams params;
        params.n = static_cast<std::uint64_t>(detail::require_int(p, "n", ctx));
        params.seed = static_cast<std::uint64_t>(detail::require_int(p, "seed", ctx));
        params.bins.head_share = detail::require_number(p.at("bins"), "head", ctx);
        params.bins.torso_share = detail::require_number(p.at("bins"), "torso", ctx);
        params.bins.tail_share = detail::require_number(p.at("bins"), "tail", ctx);
        params.gain.base = detail::require_number(p.at("gain"), "base", ctx);
        params.gain.offset = detail::require_number(p.at("gain"), "offset", ctx);
        ts.params = params;
      }
      have_header = true;
      continue;
    }
    TestEntry e;
    e.query_ref = detail::require_string(j, "query_ref", ctx);
    if (j.contains("query_src")) {
      e.query_src = detail::require_string(j, "query_src", ctx);
    }
    e.bin = bin_from_string(detail::require_string(j, "bin", ctx));
    if (!j.contains("judgments") || !j.at("judgments").is_object()) {
      throw ValidationError(ctx + ": missing \"judgments\" object");
    }
    for (const auto& [pid, g] : j.at("judgments").items()) {
      if (!g.is_number()) {
        throw ValidationError(ctx + ": judgment gain for \"" + pid + "\" must be a number");
      }
      const double gain = g.get<double>();
      if (gain < 0.0) {
        throw ValidationError(ctx + ": judgment gain for \"" + pid + "\" must be >= 0");
      }
      e.judgments[pid] = gain;
    }
    ts.entries.push_back(std::move(e));
  }
  if (!have_header) {
    throw ValidationError(path + ": missing test-set header line");
  }
  return ts;
}

TranslationSet load_translations(const std::string& path, std::string system_id) {
  auto in = detail::open_input(path);
  TranslationSet ts;
  ts.system_id = std::move(system_id);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    ts.translations.push_back(line);
  }
  return ts;
}

void save_translations(const TranslationSet& ts, const std::string& path) {
  std::string out;
  for (const auto& t : ts.translations) {
    out += t;
    out += '\n';
  }
  detail::atomic_write_file(path, out);
}

}  // namespace clireval
