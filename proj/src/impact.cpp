#include "clireval/impact.hpp"

#include <algorithm>

#include "clireval/errors.hpp"

namespace clireval {

std::string_view to_string(SystemId system) {
  switch (system) {
    case SystemId::source:
      return "source";
    case SystemId::generic:
      return "generic";
    case SystemId::adapted:
      return "adapted";
    case SystemId::reference:
      return "reference";
  }
  return "source";
}

SystemId system_from_string(std::string_view name) {
  if (name == "source") return SystemId::source;
  if (name == "generic") return SystemId::generic;
  if (name == "adapted") return SystemId::adapted;
  if (name == "reference") return SystemId::reference;
  throw ValidationError("unknown system \"" + std::string(name) + "\"");
}

std::string_view to_string(ImpactClass cls) {
  switch (cls) {
    case ImpactClass::low:
      return "Low";
    case ImpactClass::medium:
      return "Medium";
    case ImpactClass::high:
      return "High";
  }
  return "Low";
}

std::string_view to_string(Strategy strategy) {
  return strategy == Strategy::si ? "SI" : "CI+SI";
}

void ImpactThresholds::validate() const {
  if (!(class_low_below > 0.0) || !(class_high_at_or_above > class_low_below)) {
    throw ValidationError("impact thresholds must satisfy 0 < low < high");
  }
}

double launching_rate(double s_adapt, double s_source, double t_adapt, double t_source) {
  if (t_adapt == t_source) {
    throw ValidationError("undefined impact rate: translation metric delta is zero");
  }
  return (s_adapt - s_source) / (t_adapt - t_source);
}

double improvement_rate(double s_adapt, double s_generic, double t_adapt, double t_generic) {
  if (t_adapt == t_generic) {
    throw ValidationError("undefined impact rate: translation metric delta is zero");
  }
  return (s_adapt - s_generic) / (t_adapt - t_generic);
}

ImpactRange impact_range(double s_source, double s_ref) {
  return ImpactRange{s_source, s_ref, s_ref - s_source};
}

ImpactClass classify(double launch_rate, const ImpactThresholds& thresholds) {
  thresholds.validate();
  if (launch_rate < thresholds.class_low_below) {
    return ImpactClass::low;
  }
  if (launch_rate >= thresholds.class_high_at_or_above) {
    return ImpactClass::high;
  }
  return ImpactClass::medium;
}

Strategy recommend_strategy(double improve_rate, const ImpactThresholds& thresholds) {
  thresholds.validate();
  return improve_rate >= thresholds.strategy_ci_at_or_above ? Strategy::ci_and_si : Strategy::si;
}

std::vector<ImpactRecord> rank_pairs(const std::vector<ImpactRecord>& records, RankKey key) {
  if (records.empty()) {
    throw ValidationError("cannot rank an empty record list");
  }
  const auto key_of = [key](const ImpactRecord& r) {
    switch (key) {
      case RankKey::range:
        return r.range;
      case RankKey::launch_bleu:
        return r.launch_rate_bleu;
      case RankKey::launch_chrf:
        return r.launch_rate_chrf;
    }
    return r.range;
  };
  std::vector<ImpactRecord> ranked = records;
  std::stable_sort(ranked.begin(), ranked.end(), [&](const ImpactRecord& a, const ImpactRecord& b) {
    const double ka = key_of(a);
    const double kb = key_of(b);
    if (ka != kb) return ka > kb;
    return a.language_pair < b.language_pair;
  });
  return ranked;
}

ImpactRecord build_impact_record(const std::string& language_pair, const std::string& store,
                                 std::span<const MetricPoint> points,
                                 const ImpactThresholds& thresholds) {
  thresholds.validate();
  const auto find_point = [&](SystemId system) -> const MetricPoint& {
    const MetricPoint* found = nullptr;
    for (const auto& p : points) {
      if (p.system == system) {
        if (found != nullptr) {
          throw ValidationError("duplicate " + std::string(to_string(system)) + " point for " +
                                language_pair);
        }
        found = &p;
      }
    }
    if (found == nullptr) {
      throw ValidationError("missing " + std::string(to_string(system)) + " point for " +
                            language_pair);
    }
    return *found;
  };
  const auto require_t = [&](const MetricPoint& p, Metric metric) {
    const auto& value = metric == Metric::bleu ? p.bleu : p.chrf;
    if (!value) {
      throw ValidationError("missing " + std::string(to_string(metric)) + " value for " +
                            std::string(to_string(p.system)) + " point of " + language_pair);
    }
    return *value;
  };

  const MetricPoint& source = find_point(SystemId::source);
  const MetricPoint& generic = find_point(SystemId::generic);
  const MetricPoint& adapted = find_point(SystemId::adapted);
  const MetricPoint& reference = find_point(SystemId::reference);

  ImpactRecord rec;
  rec.language_pair = language_pair;
  rec.store = store;
  rec.launch_rate_bleu = launching_rate(adapted.ndcg, source.ndcg, require_t(adapted, Metric::bleu),
                                        require_t(source, Metric::bleu));
  rec.launch_rate_chrf = launching_rate(adapted.ndcg, source.ndcg, require_t(adapted, Metric::chrf),
                                        require_t(source, Metric::chrf));
  rec.improve_rate_bleu = improvement_rate(adapted.ndcg, generic.ndcg, require_t(adapted, Metric::bleu),
                                           require_t(generic, Metric::bleu));
  rec.improve_rate_chrf = improvement_rate(adapted.ndcg, generic.ndcg, require_t(adapted, Metric::chrf),
                                           require_t(generic, Metric::chrf));
  const ImpactRange range = impact_range(source.ndcg, reference.ndcg);
  rec.range_lower = range.lower;
  rec.range_upper = range.upper;
  rec.range = range.range;

  const bool bleu_basis = thresholds.rate_basis == Metric::bleu;
  rec.impact_class = classify(bleu_basis ? rec.launch_rate_bleu : rec.launch_rate_chrf, thresholds);
  rec.strategy =
      recommend_strategy(bleu_basis ? rec.improve_rate_bleu : rec.improve_rate_chrf, thresholds);
  return rec;
}

}  // namespace clireval
