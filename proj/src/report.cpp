#include <filesystem>

#include "clireval/pipeline.hpp"
#include "csv.hpp"
#include "format.hpp"
#include "serial.hpp"

namespace clireval {

namespace fs = std::filesystem;
using detail::csv_row;
using detail::format_double;
using detail::format_fixed;
using detail::json;

namespace {

std::string optional_value(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::string safe_filename(std::string_view name) {
  std::string out;
  for (const char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '-' || c == '_' || c == '.';
    out.push_back(ok ? c : '_');
  }
  return out.empty() ? std::string("pair") : out;
}

}  // namespace

std::string render_metric_points_csv(const EvaluationReport& report) {
  std::string out = csv_row({"pair", "store", "system", "bleu", "chrf", "ndcg"});
  for (const auto& pair : report.pairs) {
    for (const auto& p : pair.points) {
      out += csv_row({pair.pair, pair.store, std::string(to_string(p.system)), optional_value(p.bleu),
                      optional_value(p.chrf), format_double(p.ndcg)});
    }
  }
  return out;
}

std::string render_impact_csv(const EvaluationReport& report) {
  std::string out = csv_row({"pair", "store", "launch_bleu", "launch_chrf", "improve_bleu",
                             "improve_chrf", "lower", "upper", "range", "class", "strategy",
                             "raw_launch_bleu", "raw_launch_chrf", "raw_improve_bleu",
                             "raw_improve_chrf"});
  for (const auto& r : report.records) {
    out += csv_row({r.language_pair, r.store, format_fixed(r.launch_rate_bleu, 2),
                    format_fixed(r.launch_rate_chrf, 2), format_fixed(r.improve_rate_bleu, 2),
                    format_fixed(r.improve_rate_chrf, 2), format_fixed(r.range_lower, 2),
                    format_fixed(r.range_upper, 2), format_fixed(r.range, 2),
                    std::string(to_string(r.impact_class)), std::string(to_string(r.strategy)),
                    format_double(r.launch_rate_bleu), format_double(r.launch_rate_chrf),
                    format_double(r.improve_rate_bleu), format_double(r.improve_rate_chrf)});
  }
  for (const auto& u : report.undefined) {
    out += csv_row({u.language_pair, u.store, "undefined", "undefined", "undefined", "undefined",
                    format_fixed(u.range_lower, 2), format_fixed(u.range_upper, 2),
                    format_fixed(u.range, 2), "undefined", "undefined", "", "", "", ""});
  }
  return out;
}

namespace {

std::string plot_csv(const PairScores& pair) {
  std::string out = csv_row({"system", "bleu", "chrf", "ndcg"});
  // Fixed series order so the trend line reads source -> generic ->
  // adapted -> reference.
  for (const SystemId system :
       {SystemId::source, SystemId::generic, SystemId::adapted, SystemId::reference}) {
    for (const auto& p : pair.points) {
      if (p.system == system) {
        out += csv_row({std::string(to_string(system)), optional_value(p.bleu),
                        optional_value(p.chrf), format_double(p.ndcg)});
      }
    }
  }
  return out;
}

}  // namespace

void emit_plot_data(const EvaluationReport& report, const std::string& plots_dir) {
  if (report.pairs.empty()) {
    return;
  }
  fs::create_directories(plots_dir);
  for (const auto& pair : report.pairs) {
    detail::atomic_write_file((fs::path(plots_dir) / (safe_filename(pair.pair) + ".csv")).string(),
                              plot_csv(pair));
  }
}

void write_report(const EvaluationReport& report, const std::string& out_dir) {
  fs::create_directories(out_dir);
  std::vector<std::string> written;
  const auto emit = [&](const fs::path& path, const std::string& content) {
    detail::atomic_write_file(path.string(), content);
    written.push_back(path.string());
  };
  try {
    const fs::path root(out_dir);
    emit(root / "metric_points.csv", render_metric_points_csv(report));
    emit(root / "impact.csv", render_impact_csv(report));

    const fs::path plots = root / "plots";
    fs::create_directories(plots);
    for (const auto& pair : report.pairs) {
      emit(plots / (safe_filename(pair.pair) + ".csv"), plot_csv(pair));
    }

    json run;
    run["config_hash"] = report.config_hash;
    run["seed"] = report.seed;
    json pair_names = json::array();
    for (const auto& pair : report.pairs) {
      pair_names.push_back(pair.pair);
    }
    run["pairs"] = std::move(pair_names);
    run["records"] = report.records.size();
    run["undefined"] = report.undefined.size();
    emit(root / "run.json", run.dump(2) + "\n");
  } catch (...) {
    // Do not leave a half-written report behind.
    for (const auto& path : written) {
      std::error_code ec;
      fs::remove(path, ec);
    }
    throw;
  }
}

}  // namespace clireval
