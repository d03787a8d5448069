#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clireval/mtmetrics.hpp"

namespace clireval {

enum class SystemId { source, generic, adapted, reference };

std::string_view to_string(SystemId system);
SystemId system_from_string(std::string_view name);

/// One system's (translation metric, search metric) measurement. The
/// reference point carries only the search metric: it is the translation
/// ceiling by construction.
struct MetricPoint {
  SystemId system = SystemId::source;
  std::optional<double> bleu;
  std::optional<double> chrf;
  double ndcg = 0.0;
};

enum class ImpactClass { low, medium, high };
enum class Strategy { si, ci_and_si };

std::string_view to_string(ImpactClass cls);
std::string_view to_string(Strategy strategy);

/// Classification cutoffs on the launching rate and the CI cutoff on the
/// improvement rate. Defaults reproduce the published exemplar labels.
struct ImpactThresholds {
  double class_low_below = 0.30;
  double class_high_at_or_above = 0.70;
  double strategy_ci_at_or_above = 0.50;
  Metric rate_basis = Metric::bleu;

  void validate() const;
};

struct ImpactRecord {
  std::string language_pair;
  std::string store;
  double launch_rate_bleu = 0.0;
  double launch_rate_chrf = 0.0;
  double improve_rate_bleu = 0.0;
  double improve_rate_chrf = 0.0;
  double range_lower = 0.0;
  double range_upper = 0.0;
  double range = 0.0;
  ImpactClass impact_class = ImpactClass::low;
  Strategy strategy = Strategy::si;
};

/// (S_adapt - S_source) / (T_adapt - T_source). Zero translation delta is
/// an error: the rate is undefined, not zero or infinite.
double launching_rate(double s_adapt, double s_source, double t_adapt, double t_source);

/// (S_adapt - S_generic) / (T_adapt - T_generic).
double improvement_rate(double s_adapt, double s_generic, double t_adapt, double t_generic);

struct ImpactRange {
  double lower = 0.0;  // search metric of untranslated source queries
  double upper = 0.0;  // search metric of reference translations
  double range = 0.0;
};

ImpactRange impact_range(double s_source, double s_ref);

ImpactClass classify(double launch_rate, const ImpactThresholds& thresholds = {});
Strategy recommend_strategy(double improve_rate, const ImpactThresholds& thresholds = {});

enum class RankKey { range, launch_bleu, launch_chrf };

/// Descending by the unrounded key, ties ascending by language pair.
std::vector<ImpactRecord> rank_pairs(const std::vector<ImpactRecord>& records, RankKey key);

/// Assembles every rate, the range, the class, and the strategy from the
/// four system points (source, generic, adapted, reference).
ImpactRecord build_impact_record(const std::string& language_pair, const std::string& store,
                                 std::span<const MetricPoint> points,
                                 const ImpactThresholds& thresholds = {});

}  // namespace clireval
