#include "clireval/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "clireval/errors.hpp"
#include "csv.hpp"
#include "serial.hpp"

namespace clireval {

using detail::json;

namespace {

// Prefixes escaping errors with the pipeline stage that produced them.
template <typename F>
auto stage(const char* name, F&& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    throw ValidationError("[" + std::string(name) + "] " + e.what());
  } catch (const std::exception& e) {
    throw std::runtime_error("[" + std::string(name) + "] " + e.what());
  }
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hash_hex(std::string_view data) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(data)));
  return buf;
}

json thresholds_to_json(const ImpactThresholds& t) {
  return json{{"low", t.class_low_below},
              {"high", t.class_high_at_or_above},
              {"ci", t.strategy_ci_at_or_above},
              {"basis", std::string(to_string(t.rate_basis))}};
}

json config_to_json(const RunConfig& cfg) {
  json translations = json::object();
  for (const auto& [system, path] : cfg.translation_paths) {
    translations[std::string(to_string(system))] = path;
  }
  return json{{"pair", cfg.language_pair},
              {"store", cfg.store},
              {"catalog", cfg.catalog_path},
              {"testset", cfg.testset_path},
              {"translations", translations},
              {"profile", detail::profile_to_json(cfg.search_profile)},
              {"k", cfg.rank.k},
              {"bleu",
               {{"max_order", cfg.bleu.max_order},
                {"smoothing", cfg.bleu.smoothing == Smoothing::none ? "none" : "floor"},
                {"floor_value", cfg.bleu.floor_value},
                {"profile", detail::profile_to_json(cfg.bleu.profile)}}},
              {"chrf",
               {{"char_order", cfg.chrf.char_order},
                {"word_order", cfg.chrf.word_order},
                {"beta", cfg.chrf.beta}}},
              {"thresholds", thresholds_to_json(cfg.thresholds)},
              {"seed", cfg.seed}};
}

ImpactThresholds thresholds_from_json(const json& j, const std::string& context) {
  if (!j.is_object()) {
    throw ValidationError(context + ": thresholds must be an object");
  }
  ImpactThresholds t;
  t.class_low_below = j.value("low", t.class_low_below);
  t.class_high_at_or_above = j.value("high", t.class_high_at_or_above);
  t.strategy_ci_at_or_above = j.value("ci", t.strategy_ci_at_or_above);
  if (j.contains("basis")) {
    t.rate_basis = metric_from_string(j.at("basis").get<std::string>());
  }
  t.validate();
  return t;
}

// Builds records for each pair, routing zero-delta pairs to the undefined
// list instead of aborting the whole report.
void assemble_impact(EvaluationReport& report, const ImpactThresholds& thresholds) {
  for (const auto& pair : report.pairs) {
    try {
      report.records.push_back(
          build_impact_record(pair.pair, pair.store, pair.points, thresholds));
    } catch (const ValidationError& e) {
      UndefinedImpact u;
      u.language_pair = pair.pair;
      u.store = pair.store;
      u.reason = e.what();
      for (const auto& p : pair.points) {
        if (p.system == SystemId::source) u.range_lower = p.ndcg;
        if (p.system == SystemId::reference) u.range_upper = p.ndcg;
      }
      u.range = u.range_upper - u.range_lower;
      report.undefined.push_back(std::move(u));
    }
  }
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
  return parse_run_config(detail::read_file(path), path);
}

RunConfig parse_run_config(const std::string& json_text, const std::string& path) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ValidationError(path + ": malformed config: " + e.what());
  }
  RunConfig cfg;
  cfg.language_pair = detail::require_string(j, "pair", path);
  cfg.store = j.value("store", "");
  cfg.catalog_path = detail::require_string(j, "catalog", path);
  cfg.testset_path = detail::require_string(j, "testset", path);
  if (j.contains("translations")) {
    for (const auto& [name, p] : j.at("translations").items()) {
      cfg.translation_paths[system_from_string(name)] = p.get<std::string>();
    }
  }
  if (j.contains("profile")) {
    cfg.search_profile = detail::profile_from_json(j.at("profile"), path);
  }
  if (j.contains("k")) {
    cfg.rank.k = static_cast<std::size_t>(detail::require_int(j, "k", path));
  }
  if (j.contains("bleu")) {
    const json& b = j.at("bleu");
    cfg.bleu.max_order = static_cast<int>(b.value("max_order", std::int64_t{cfg.bleu.max_order}));
    const std::string smoothing = b.value("smoothing", "none");
    if (smoothing == "none") {
      cfg.bleu.smoothing = Smoothing::none;
    } else if (smoothing == "floor") {
      cfg.bleu.smoothing = Smoothing::floor;
    } else {
      throw ValidationError(path + ": unknown smoothing \"" + smoothing + "\"");
    }
    cfg.bleu.floor_value = b.value("floor_value", cfg.bleu.floor_value);
    if (b.contains("profile")) {
      cfg.bleu.profile = detail::profile_from_json(b.at("profile"), path);
    }
  }
  if (j.contains("chrf")) {
    const json& c = j.at("chrf");
    cfg.chrf.char_order = static_cast<int>(c.value("char_order", std::int64_t{cfg.chrf.char_order}));
    cfg.chrf.word_order = static_cast<int>(c.value("word_order", std::int64_t{cfg.chrf.word_order}));
    cfg.chrf.beta = c.value("beta", cfg.chrf.beta);
  }
  if (j.contains("thresholds")) {
    cfg.thresholds = thresholds_from_json(j.at("thresholds"), path);
  }
  cfg.seed = static_cast<std::uint64_t>(j.value("seed", std::int64_t{0}));
  cfg.out_dir = j.value("out_dir", cfg.out_dir);
  return cfg;
}

ImpactThresholds load_thresholds(const std::string& path) {
  json j;
  try {
    j = json::parse(detail::read_file(path));
  } catch (const json::exception& e) {
    throw ValidationError(path + ": malformed thresholds: " + e.what());
  }
  return thresholds_from_json(j, path);
}

EvaluationReport run_evaluation(const RunConfig& cfg) {
  if (cfg.rank.k < 1) {
    throw ValidationError("[config] k must be >= 1");
  }
  cfg.bleu.validate();
  cfg.chrf.validate();
  cfg.thresholds.validate();
  if (cfg.language_pair.empty()) {
    throw ValidationError("[config] language pair must be named");
  }

  const ProductCatalog catalog = stage("load", [&] { return load_catalog(cfg.catalog_path); });
  const TestSet testset = stage("load", [&] { return load_test_set(cfg.testset_path); });
  if (testset.entries.empty()) {
    throw ValidationError("[load] test set has no entries");
  }

  std::vector<std::string> refs;
  refs.reserve(testset.entries.size());
  for (const auto& e : testset.entries) {
    refs.push_back(e.query_ref);
  }

  const auto system_queries = [&](SystemId system) {
    const auto it = cfg.translation_paths.find(system);
    if (it != cfg.translation_paths.end()) {
      auto ts = load_translations(it->second, std::string(to_string(system)));
      if (ts.translations.size() != testset.entries.size()) {
        throw ValidationError("translation file " + it->second + " has " +
                              std::to_string(ts.translations.size()) + " lines but the test set has " +
                              std::to_string(testset.entries.size()) + " entries");
      }
      return ts;
    }
    TranslationSet ts;
    ts.system_id = std::string(to_string(system));
    if (system == SystemId::reference) {
      ts.translations = refs;
      return ts;
    }
    if (system == SystemId::source) {
      for (const auto& e : testset.entries) {
        ts.translations.push_back(e.query_src);
      }
      if (std::all_of(ts.translations.begin(), ts.translations.end(),
                      [](const std::string& s) { return s.empty(); })) {
        throw ValidationError("test set has no source translations and no source file was given");
      }
      return ts;
    }
    throw ValidationError("no translation file configured for system \"" +
                          std::string(to_string(system)) + "\"");
  };

  const Index index = stage("index", [&] { return build_index(catalog, cfg.search_profile); });

  EvaluationReport report;
  report.seed = cfg.seed;
  report.config_hash = hash_hex(config_to_json(cfg).dump());

  PairScores pair;
  pair.pair = cfg.language_pair;
  pair.store = cfg.store;
  for (const SystemId system :
       {SystemId::source, SystemId::generic, SystemId::adapted, SystemId::reference}) {
    const TranslationSet queries = stage("load", [&] { return system_queries(system); });
    MetricPoint point;
    point.system = system;
    stage("metrics", [&] {
      point.bleu = corpus_bleu(queries.translations, refs, cfg.bleu).value;
      point.chrf = corpus_chrf(queries.translations, refs, cfg.chrf).value;
      point.ndcg = evaluate_query_set(index, queries, testset, cfg.rank, cfg.search_profile).value;
      return 0;
    });
    pair.points.push_back(point);
  }
  report.pairs.push_back(std::move(pair));

  stage("impact", [&] {
    assemble_impact(report, cfg.thresholds);
    return 0;
  });
  return report;
}

std::vector<PairScores> load_scores_csv(const std::string& path) {
  auto in = detail::open_input(path);
  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError(path + ": empty scores file");
  }
  const auto header = detail::csv_split(line);
  const std::vector<std::string> expected = {"pair", "store", "system", "bleu", "chrf", "ndcg"};
  if (header != expected) {
    throw ValidationError(path + ": expected header pair,store,system,bleu,chrf,ndcg");
  }

  std::vector<PairScores> pairs;
  std::map<std::string, std::size_t> by_pair;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    const auto ctx = detail::where(path, line_no);
    const auto fields = detail::csv_split(line);
    if (fields.size() != expected.size()) {
      throw ValidationError(ctx + ": expected 6 fields, got " + std::to_string(fields.size()));
    }
    const std::string& pair_name = fields[0];
    if (pair_name.empty()) {
      throw ValidationError(ctx + ": empty pair name");
    }
    const auto parse_value = [&](const std::string& field, const char* what) {
      try {
        std::size_t pos = 0;
        const double v = std::stod(field, &pos);
        if (pos != field.size()) {
          throw std::invalid_argument(field);
        }
        return v;
      } catch (const std::exception&) {
        throw ValidationError(ctx + ": bad " + what + " value \"" + field + "\"");
      }
    };

    MetricPoint point;
    point.system = system_from_string(fields[2]);
    if (!fields[3].empty()) point.bleu = parse_value(fields[3], "bleu");
    if (!fields[4].empty()) point.chrf = parse_value(fields[4], "chrf");
    if (fields[5].empty()) {
      throw ValidationError(ctx + ": missing ndcg value");
    }
    point.ndcg = parse_value(fields[5], "ndcg");

    auto [it, inserted] = by_pair.emplace(pair_name, pairs.size());
    if (inserted) {
      pairs.push_back(PairScores{pair_name, fields[1], {}});
    }
    PairScores& ps = pairs[it->second];
    for (const auto& existing : ps.points) {
      if (existing.system == point.system) {
        throw ValidationError(ctx + ": duplicate " + std::string(to_string(point.system)) +
                              " row for pair " + pair_name);
      }
    }
    ps.points.push_back(point);
  }
  return pairs;
}

EvaluationReport replay_tables(const std::string& scores_csv_path,
                               const ImpactThresholds& thresholds) {
  thresholds.validate();
  EvaluationReport report;
  report.pairs = load_scores_csv(scores_csv_path);
  if (report.pairs.empty()) {
    throw ValidationError(scores_csv_path + ": no score rows");
  }
  for (const auto& pair : report.pairs) {
    for (const SystemId system :
         {SystemId::source, SystemId::generic, SystemId::adapted, SystemId::reference}) {
      const bool present = std::any_of(pair.points.begin(), pair.points.end(),
                                       [&](const MetricPoint& p) { return p.system == system; });
      if (!present) {
        throw ValidationError(scores_csv_path + ": pair " + pair.pair + " is missing the " +
                              std::string(to_string(system)) + " system row");
      }
    }
  }
  // Rates come straight from the fixture; search and MT metrics never run.
  assemble_impact(report, thresholds);
  report.config_hash =
      hash_hex(json{{"scores", scores_csv_path}, {"thresholds", thresholds_to_json(thresholds)}}.dump());
  return report;
}

}  // namespace clireval
