#include <algorithm>
#include <set>

#include "clireval/errors.hpp"
#include "clireval/pipeline.hpp"
#include "clireval/rng.hpp"

namespace clireval {

void NoiseSpec::validate() const {
  for (const double p : {p_drop, p_swap, p_substitute}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ValidationError("noise probabilities must lie in [0,1]");
    }
  }
  if (p_substitute > 0.0 && vocabulary.empty()) {
    throw ValidationError("substitution noise requires a nonempty vocabulary");
  }
}

namespace {

std::vector<std::string> whitespace_split(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (const char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
      if (!cur.empty()) {
        tokens.push_back(std::move(cur));
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) {
    tokens.push_back(std::move(cur));
  }
  return tokens;
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) {
      out.push_back(' ');
    }
    out += tokens[i];
  }
  return out;
}

}  // namespace

TranslationSet noisy_translate(const std::vector<std::string>& queries, const NoiseSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  TranslationSet out;
  out.system_id = "noisy";
  out.translations.reserve(queries.size());
  for (const auto& query : queries) {
    bool changed = false;
    std::vector<std::string> kept;
    for (auto& token : whitespace_split(query)) {
      // Three decisions drawn unconditionally so the stream position does
      // not depend on earlier outcomes.
      const double u_drop = draw_unit(rng);
      const double u_swap = draw_unit(rng);
      const double u_sub = draw_unit(rng);
      if (u_drop < spec.p_drop) {
        changed = true;
        continue;
      }
      if (u_swap < spec.p_swap) {
        auto cps = decode_utf8(token);
        if (cps.size() >= 2) {
          const auto pos = static_cast<std::size_t>(draw_below(rng, cps.size() - 1));
          std::swap(cps[pos], cps[pos + 1]);
          token = encode_utf8(cps);
          changed = true;
        }
      }
      if (u_sub < spec.p_substitute && !spec.vocabulary.empty()) {
        token = spec.vocabulary[static_cast<std::size_t>(draw_below(rng, spec.vocabulary.size()))];
        changed = true;
      }
      kept.push_back(std::move(token));
    }
    out.translations.push_back(changed ? join(kept) : query);
  }
  return out;
}

TranslationSet improve_query_subset(const std::vector<std::string>& improved, TranslationSet base,
                                    double fraction, std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw ValidationError("improvement fraction must lie in [0,1]");
  }
  if (improved.size() != base.translations.size()) {
    throw ValidationError("improved translation count " + std::to_string(improved.size()) +
                          " does not match base count " + std::to_string(base.translations.size()));
  }
  const auto count = static_cast<std::size_t>(
      std::llround(fraction * static_cast<double>(base.translations.size())));
  Rng rng(seed);
  for (const auto i : sample_indices(rng, base.translations.size(), count)) {
    base.translations[i] = improved[i];
  }
  return base;
}

std::string pseudo_source(const std::string& query) {
  std::vector<std::string> tokens;
  for (const auto& token : whitespace_split(query)) {
    auto cps = decode_utf8(token);
    std::reverse(cps.begin(), cps.end());
    tokens.push_back(encode_utf8(cps));
  }
  return join(tokens);
}

namespace {

const std::vector<std::string> kBrands = {
    "acme", "nordwind", "kelora", "vastago", "brightline", "ferrum", "lumo", "okapi",
    "solara", "tundra", "verity", "zephyr"};
const std::vector<std::string> kAdjectives = {
    "classic", "compact", "deluxe", "ergonomic", "foldable", "heavy", "light", "modern",
    "portable", "premium", "slim", "vintage", "waterproof", "wireless"};
const std::vector<std::string> kColors = {
    "black", "blue", "bronze", "copper", "green", "grey", "ivory", "navy",
    "olive", "orange", "pink", "purple", "red", "silver", "white", "yellow"};
const std::vector<std::string> kMaterials = {
    "alloy", "bamboo", "canvas", "ceramic", "cotton", "denim", "glass", "leather",
    "linen", "marble", "nylon", "oak", "steel", "velvet", "wool"};
const std::vector<std::string> kNouns = {
    "backpack", "blender", "boots", "bottle", "chair", "desk", "gloves", "hammer",
    "headphones", "jacket", "kettle", "lamp", "mattress", "mixer", "notebook", "pan",
    "razor", "scarf", "shoes", "sofa", "speaker", "tent", "toaster", "umbrella",
    "wallet", "watch"};

const std::string& pick(Rng& rng, const std::vector<std::string>& pool) {
  return pool[static_cast<std::size_t>(draw_below(rng, pool.size()))];
}

std::string product_id_for(std::size_t ordinal) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "P%06zu", ordinal);
  return buf;
}

}  // namespace

SyntheticCorpus generate_synthetic_corpus(std::size_t n_products, std::size_t n_queries,
                                          std::uint64_t seed) {
  SyntheticCorpus out;
  Rng rng(seed);

  struct TitleTerms {
    std::string brand, adjective, color, material, noun;
  };
  std::vector<TitleTerms> terms;
  terms.reserve(n_products);
  for (std::size_t d = 0; d < n_products; ++d) {
    TitleTerms t{pick(rng, kBrands), pick(rng, kAdjectives), pick(rng, kColors),
                 pick(rng, kMaterials), pick(rng, kNouns)};
    Product p;
    p.product_id = product_id_for(d);
    p.title = t.brand + " " + t.adjective + " " + t.color + " " + t.material + " " + t.noun;
    p.locale = "zz-ZZ";
    if (draw_unit(rng) < 0.3) {
      p.description = t.material + " " + t.noun + " by " + t.brand;
    }
    out.catalog.add(std::move(p));
    terms.push_back(std::move(t));
  }

  if (n_queries > 0 && n_products == 0) {
    throw ValidationError("cannot derive queries from an empty catalog");
  }

  std::set<std::string> used;
  std::size_t fallback_counter = 0;
  for (std::size_t q = 0; q < n_queries; ++q) {
    std::string text;
    std::size_t product = 0;
    for (int attempt = 0; attempt < 50; ++attempt) {
      product = static_cast<std::size_t>(draw_below(rng, n_products));
      const TitleTerms& t = terms[product];
      switch (draw_below(rng, 4)) {
        case 0:
          text = t.color + " " + t.noun;
          break;
        case 1:
          text = t.adjective + " " + t.noun;
          break;
        case 2:
          text = t.brand + " " + t.noun;
          break;
        default:
          text = t.color + " " + t.material + " " + t.noun;
          break;
      }
      if (!used.contains(text)) {
        break;
      }
      text.clear();
    }
    if (text.empty() || used.contains(text)) {
      const TitleTerms& t = terms[product];
      text = t.brand + " " + t.adjective + " " + t.color + " " + t.material + " " + t.noun;
      while (used.contains(text)) {
        text += " v" + std::to_string(++fallback_counter);
      }
    }
    used.insert(text);

    QueryLogEntry entry;
    entry.query = text;
    entry.frequency = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::llround(2.0 * static_cast<double>(n_queries) /
                                                   static_cast<double>(q + 1))));
    entry.purchases[out.catalog.products()[product].product_id] = 1 + draw_below(rng, 50);
    if (draw_unit(rng) < 0.3) {
      const auto other = static_cast<std::size_t>(draw_below(rng, n_products));
      entry.purchases[out.catalog.products()[other].product_id] += 1 + draw_below(rng, 5);
    }
    out.log.push_back(std::move(entry));
  }

  std::set<std::string> vocab;
  for (const auto* pool : {&kBrands, &kAdjectives, &kColors, &kMaterials, &kNouns}) {
    vocab.insert(pool->begin(), pool->end());
  }
  out.vocabulary.assign(vocab.begin(), vocab.end());
  return out;
}

}  // namespace clireval
