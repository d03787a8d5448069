#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "clireval/corpus.hpp"
#include "clireval/impact.hpp"
#include "clireval/mtmetrics.hpp"
#include "clireval/rankmetrics.hpp"
#include "clireval/searchsim.hpp"
#include "clireval/text.hpp"

namespace clireval {

/// Token-level noise channel simulating degraded translation quality.
/// Per token, independently: drop, adjacent-codepoint swap, or whole-token
/// substitution from the vocabulary. Deterministic per (queries, spec).
struct NoiseSpec {
  double p_drop = 0.0;
  double p_swap = 0.0;
  double p_substitute = 0.0;
  std::vector<std::string> vocabulary;
  std::uint64_t seed = 0;

  void validate() const;
};

TranslationSet noisy_translate(const std::vector<std::string>& queries, const NoiseSpec& spec);

/// Replaces a seeded fraction of entries in `base` with `improved` —
/// targeted cleanup of a small traffic slice, as opposed to lowering the
/// noise level globally.
TranslationSet improve_query_subset(const std::vector<std::string>& improved, TranslationSet base,
                                    double fraction, std::uint64_t seed);

/// Deterministic pseudo-source rendering of a target-language query
/// (codepoint-reversed tokens). Stands in for the human source translation
/// on synthetic corpora.
std::string pseudo_source(const std::string& query);

struct SyntheticCorpus {
  ProductCatalog catalog;
  std::vector<QueryLogEntry> log;
  std::vector<std::string> vocabulary;  // substitution pool for noise channels
};

/// Templated product titles over a seeded vocabulary; each query is drawn
/// from one product's terms with a Zipf-like frequency and purchases
/// concentrated on that product, so every query has a judged product.
SyntheticCorpus generate_synthetic_corpus(std::size_t n_products, std::size_t n_queries,
                                          std::uint64_t seed);

struct RunConfig {
  std::string language_pair;
  std::string store;
  std::string catalog_path;
  std::string testset_path;
  // generic and adapted are required; source and reference default to the
  // test set's query_src / query_ref columns.
  std::map<SystemId, std::string> translation_paths;
  LanguageProfile search_profile{TokenMode::word, /*lowercase=*/true, /*strip_punct=*/true,
                                 /*split_punct=*/false};
  RankConfig rank;
  BleuConfig bleu;
  ChrfConfig chrf;
  ImpactThresholds thresholds;
  std::uint64_t seed = 0;
  std::string out_dir = "report";
};

RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const std::string& json_text, const std::string& context);

/// Thresholds JSON: {"low": 0.3, "high": 0.7, "ci": 0.5, "basis": "bleu"};
/// absent keys keep their defaults.
ImpactThresholds load_thresholds(const std::string& path);

/// One language pair's metric points, in source/generic/adapted/reference
/// order.
struct PairScores {
  std::string pair;
  std::string store;
  std::vector<MetricPoint> points;
};

/// A pair whose rates could not be computed (zero translation delta).
struct UndefinedImpact {
  std::string language_pair;
  std::string store;
  double range_lower = 0.0;
  double range_upper = 0.0;
  double range = 0.0;
  std::string reason;
};

struct EvaluationReport {
  std::vector<PairScores> pairs;
  std::vector<ImpactRecord> records;
  std::vector<UndefinedImpact> undefined;
  std::string config_hash;
  std::uint64_t seed = 0;
};

/// Full live evaluation: index the catalog, score every system with
/// Bleu/Chrf against the reference queries and with nDCG@k against the
/// judgments, then derive the impact record.
EvaluationReport run_evaluation(const RunConfig& cfg);

/// Computes impact records from a scores CSV alone; never touches the
/// search simulator or the MT metrics.
EvaluationReport replay_tables(const std::string& scores_csv_path,
                               const ImpactThresholds& thresholds = {});

/// Scores CSV: header pair,store,system,bleu,chrf,ndcg. Empty bleu/chrf
/// cells are allowed on reference rows only.
std::vector<PairScores> load_scores_csv(const std::string& path);

/// Writes metric_points.csv, impact.csv, plots/<pair>.csv and run.json
/// under out_dir. Atomic per file; on failure, written files are removed.
void write_report(const EvaluationReport& report, const std::string& out_dir);

std::string render_metric_points_csv(const EvaluationReport& report);
std::string render_impact_csv(const EvaluationReport& report);

/// Per pair, a four-row series (source, generic, adapted, reference) of
/// (system, bleu, chrf, ndcg) suitable for recreating the trend plots.
void emit_plot_data(const EvaluationReport& report, const std::string& plots_dir);

}  // namespace clireval
