// clireval: build CLIR test sets from query logs, retrieve with a BM25
// simulator, score translations (Bleu/Chrf) and rankings (nDCG@k), and
// derive launching/improvement impact rates per language pair.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clireval/corpus.hpp"
#include "clireval/errors.hpp"
#include "clireval/impact.hpp"
#include "clireval/mtmetrics.hpp"
#include "clireval/pipeline.hpp"
#include "clireval/rankmetrics.hpp"
#include "clireval/searchsim.hpp"
#include "clireval/text.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace clireval;

namespace {

// Optional JSON config; subcommand flags win over config values.
class AppConfig {
 public:
  void load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ValidationError("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      root_ = json::parse(buf.str());
    } catch (const json::exception& e) {
      throw ValidationError(path + ": malformed config: " + e.what());
    }
    if (!root_.is_object()) {
      throw ValidationError(path + ": config must be a JSON object");
    }
  }

  const json* section(const char* name) const {
    if (!root_.contains(name)) {
      return nullptr;
    }
    return &root_.at(name);
  }

  const json& root() const { return root_; }

  template <typename T>
  void fallback(const CLI::Option* opt, const char* section_name, const char* key, T& var) const {
    if (opt != nullptr && opt->count() > 0) {
      return;
    }
    const json* sec = section_name == nullptr ? &root_ : section(section_name);
    if (sec == nullptr || !sec->is_object() || !sec->contains(key)) {
      return;
    }
    try {
      var = sec->at(key).get<T>();
    } catch (const json::exception& e) {
      throw ValidationError(std::string("config key \"") + key + "\": " + e.what());
    }
  }

 private:
  json root_ = json::object();
};

LanguageProfile profile_from_flags(const std::string& mode, bool lowercase, bool strip_punct,
                                   bool split_punct) {
  LanguageProfile p;
  if (mode == "word") {
    p.mode = TokenMode::word;
  } else if (mode == "char") {
    p.mode = TokenMode::character;
  } else {
    throw ValidationError("unknown profile mode \"" + mode + "\" (expected word or char)");
  }
  p.lowercase = lowercase;
  p.strip_punct = strip_punct;
  p.split_punct = split_punct;
  return p;
}

std::vector<std::string> read_lines(const std::string& path) {
  return load_translations(path, "lines").translations;
}

void write_lines(const std::vector<std::string>& lines, const std::string& path) {
  TranslationSet ts;
  ts.translations = lines;
  save_translations(ts, path);
}

void save_catalog_jsonl(const ProductCatalog& catalog, const std::string& path) {
  std::string out;
  for (const auto& p : catalog.products()) {
    json j;
    j["product_id"] = p.product_id;
    j["title"] = p.title;
    if (p.description) {
      j["description"] = *p.description;
    }
    j["locale"] = p.locale;
    out += j.dump();
    out += '\n';
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  f << out;
}

void save_query_log_jsonl(const std::vector<QueryLogEntry>& log, const std::string& path) {
  std::string out;
  for (const auto& e : log) {
    json j;
    j["query"] = e.query;
    j["frequency"] = e.frequency;
    j["purchases"] = json::object();
    for (const auto& [pid, count] : e.purchases) {
      j["purchases"][pid] = count;
    }
    out += j.dump();
    out += '\n';
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  f << out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cross-lingual product-search MT evaluation toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_dir = "report";
  AppConfig config;
  const auto* opt_config = app.add_option("--config", config_path, "JSON config file");
  const auto* opt_seed = app.add_option("--seed", seed, "random seed");
  const auto* opt_out_dir = app.add_option("--out-dir", out_dir, "report output directory");

  // Applied before any subcommand callback runs.
  app.parse_complete_callback([&] {
    if (opt_config->count() > 0) {
      config.load(config_path);
    }
    config.fallback<std::uint64_t>(opt_seed, nullptr, "seed", seed);
    config.fallback<std::string>(opt_out_dir, nullptr, "out_dir", out_dir);
  });

  // ---- testset create ----------------------------------------------------
  auto* testset_cmd = app.add_subcommand("testset", "test-set operations");
  auto* ts_create = testset_cmd->add_subcommand("create", "sample a test set from a query log");
  struct {
    std::string log, out, src, store_locale, source_locale, out_refs, out_src;
    std::uint64_t n = 0;
    double head = 0.30, torso = 0.40, tail = 0.30;
    double gain_base = 2.0, gain_offset = 1.0;
    bool pseudo_src = false;
  } tsc;
  const auto* tsc_log = ts_create->add_option("--log", tsc.log, "query log JSONL");
  const auto* tsc_n = ts_create->add_option("--n", tsc.n, "sample size");
  const auto* tsc_out = ts_create->add_option("--out", tsc.out, "output test-set JSONL");
  const auto* tsc_head = ts_create->add_option("--head", tsc.head, "head share");
  const auto* tsc_torso = ts_create->add_option("--torso", tsc.torso, "torso share");
  const auto* tsc_tail = ts_create->add_option("--tail", tsc.tail, "tail share");
  const auto* tsc_gb = ts_create->add_option("--gain-base", tsc.gain_base, "gain log base");
  const auto* tsc_go = ts_create->add_option("--gain-offset", tsc.gain_offset, "gain log offset");
  const auto* tsc_store = ts_create->add_option("--store-locale", tsc.store_locale, "store locale tag");
  const auto* tsc_srcl = ts_create->add_option("--source-locale", tsc.source_locale, "source locale tag");
  const auto* tsc_src = ts_create->add_option("--src", tsc.src, "source translations, one per line");
  ts_create->add_flag("--pseudo-src", tsc.pseudo_src,
                      "derive pseudo source translations (synthetic corpora)");
  ts_create->add_option("--out-refs", tsc.out_refs, "also write reference queries, one per line");
  ts_create->add_option("--out-src", tsc.out_src, "also write source queries, one per line");
  ts_create->callback([&] {
    config.fallback<std::string>(tsc_log, "testset", "log", tsc.log);
    config.fallback<std::uint64_t>(tsc_n, "testset", "n", tsc.n);
    config.fallback<std::string>(tsc_out, "testset", "out", tsc.out);
    config.fallback<double>(tsc_head, "testset", "head", tsc.head);
    config.fallback<double>(tsc_torso, "testset", "torso", tsc.torso);
    config.fallback<double>(tsc_tail, "testset", "tail", tsc.tail);
    config.fallback<double>(tsc_gb, "testset", "gain_base", tsc.gain_base);
    config.fallback<double>(tsc_go, "testset", "gain_offset", tsc.gain_offset);
    config.fallback<std::string>(tsc_store, "testset", "store_locale", tsc.store_locale);
    config.fallback<std::string>(tsc_srcl, "testset", "source_locale", tsc.source_locale);
    config.fallback<std::string>(tsc_src, "testset", "src", tsc.src);
    if (tsc.log.empty() || tsc.out.empty()) {
      throw ValidationError("testset create requires --log and --out");
    }
    const auto log = load_query_log(tsc.log);
    TestSet ts = create_test_set(log, tsc.n, BinSpec{tsc.head, tsc.torso, tsc.tail},
                                 GainRule{tsc.gain_base, tsc.gain_offset}, seed, tsc.store_locale,
                                 tsc.source_locale);
    if (!tsc.src.empty()) {
      ts = attach_source_translations(std::move(ts), read_lines(tsc.src));
    } else if (tsc.pseudo_src) {
      std::vector<std::string> src;
      src.reserve(ts.entries.size());
      for (const auto& e : ts.entries) {
        src.push_back(pseudo_source(e.query_ref));
      }
      ts = attach_source_translations(std::move(ts), src);
    }
    save_test_set(ts, tsc.out);
    if (!tsc.out_refs.empty()) {
      std::vector<std::string> refs;
      refs.reserve(ts.entries.size());
      for (const auto& e : ts.entries) {
        refs.push_back(e.query_ref);
      }
      write_lines(refs, tsc.out_refs);
    }
    if (!tsc.out_src.empty()) {
      std::vector<std::string> src;
      src.reserve(ts.entries.size());
      for (const auto& e : ts.entries) {
        src.push_back(e.query_src);
      }
      write_lines(src, tsc.out_src);
    }
    std::size_t head_n = 0, torso_n = 0, tail_n = 0;
    for (const auto& e : ts.entries) {
      (e.bin == Bin::head ? head_n : e.bin == Bin::torso ? torso_n : tail_n) += 1;
    }
    std::cout << "wrote " << ts.entries.size() << " entries (" << head_n << " head, " << torso_n
              << " torso, " << tail_n << " tail) to " << tsc.out << "\n";
  });

  // ---- index build -------------------------------------------------------
  auto* index_cmd = app.add_subcommand("index", "search index operations");
  auto* idx_build = index_cmd->add_subcommand("build", "build a BM25 index from a catalog");
  struct {
    std::string catalog, out, mode = "word";
    bool lowercase = true, strip_punct = true;
  } idx;
  const auto* idx_catalog = idx_build->add_option("--catalog", idx.catalog, "catalog JSONL");
  const auto* idx_out = idx_build->add_option("--out", idx.out, "output index file");
  const auto* idx_mode = idx_build->add_option("--profile", idx.mode, "word|char tokenization");
  idx_build->add_flag("--lowercase,!--no-lowercase", idx.lowercase, "lowercase ASCII (default on)");
  idx_build->add_flag("--strip-punct,!--no-strip-punct", idx.strip_punct,
                      "treat punctuation as separators (default on)");
  idx_build->callback([&] {
    config.fallback<std::string>(idx_catalog, "index", "catalog", idx.catalog);
    config.fallback<std::string>(idx_out, "index", "out", idx.out);
    config.fallback<std::string>(idx_mode, "index", "profile", idx.mode);
    if (idx.catalog.empty() || idx.out.empty()) {
      throw ValidationError("index build requires --catalog and --out");
    }
    const auto catalog = load_catalog(idx.catalog);
    const auto profile = profile_from_flags(idx.mode, idx.lowercase, idx.strip_punct, false);
    const Index index = build_index(catalog, profile);
    save_index(index, idx.out);
    std::cout << "indexed " << index.doc_count() << " products, " << index.postings.size()
              << " terms -> " << idx.out << "\n";
  });

  // ---- metrics mt / metrics ndcg ------------------------------------------
  auto* metrics_cmd = app.add_subcommand("metrics", "metric computations");
  auto* mt = metrics_cmd->add_subcommand("mt", "corpus Bleu/Chrf of hypotheses vs references");
  struct {
    std::string hyp, ref, metric = "bleu", smoothing = "none", mode = "word";
    int max_order = 4, char_order = 6, word_order = 0;
    double beta = 2.0;
    bool lowercase = false, strip_punct = false, split_punct = true;
  } mtc;
  const auto* mt_hyp = mt->add_option("--hyp", mtc.hyp, "hypotheses, one per line");
  const auto* mt_ref = mt->add_option("--ref", mtc.ref, "references, one per line");
  const auto* mt_metric = mt->add_option("--metric", mtc.metric, "bleu|chrf");
  const auto* mt_max = mt->add_option("--max-order", mtc.max_order, "bleu n-gram order");
  const auto* mt_sm = mt->add_option("--smoothing", mtc.smoothing, "none|floor");
  const auto* mt_co = mt->add_option("--char-order", mtc.char_order, "chrf character order");
  const auto* mt_wo = mt->add_option("--word-order", mtc.word_order, "chrf word order");
  const auto* mt_beta = mt->add_option("--beta", mtc.beta, "chrf beta");
  const auto* mt_mode = mt->add_option("--profile", mtc.mode, "bleu tokenizer: word|char");
  mt->add_flag("--lowercase,!--no-lowercase", mtc.lowercase, "lowercase before tokenizing");
  mt->add_flag("--strip-punct,!--no-strip-punct", mtc.strip_punct, "drop punctuation");
  mt->add_flag("--split-punct,!--no-split-punct", mtc.split_punct,
               "punctuation as standalone tokens (default on)");
  mt->callback([&] {
    config.fallback<std::string>(mt_hyp, "metrics_mt", "hyp", mtc.hyp);
    config.fallback<std::string>(mt_ref, "metrics_mt", "ref", mtc.ref);
    config.fallback<std::string>(mt_metric, "metrics_mt", "metric", mtc.metric);
    config.fallback<int>(mt_max, "metrics_mt", "max_order", mtc.max_order);
    config.fallback<std::string>(mt_sm, "metrics_mt", "smoothing", mtc.smoothing);
    config.fallback<int>(mt_co, "metrics_mt", "char_order", mtc.char_order);
    config.fallback<int>(mt_wo, "metrics_mt", "word_order", mtc.word_order);
    config.fallback<double>(mt_beta, "metrics_mt", "beta", mtc.beta);
    config.fallback<std::string>(mt_mode, "metrics_mt", "profile", mtc.mode);
    if (mtc.hyp.empty() || mtc.ref.empty()) {
      throw ValidationError("metrics mt requires --hyp and --ref");
    }
    const auto hyps = read_lines(mtc.hyp);
    const auto refs = read_lines(mtc.ref);
    MetricScore score;
    if (metric_from_string(mtc.metric) == Metric::bleu) {
      BleuConfig cfg;
      cfg.max_order = mtc.max_order;
      if (mtc.smoothing == "floor") {
        cfg.smoothing = Smoothing::floor;
      } else if (mtc.smoothing != "none") {
        throw ValidationError("unknown smoothing \"" + mtc.smoothing + "\"");
      }
      cfg.profile = profile_from_flags(mtc.mode, mtc.lowercase, mtc.strip_punct, mtc.split_punct);
      score = corpus_bleu(hyps, refs, cfg);
    } else {
      ChrfConfig cfg;
      cfg.char_order = mtc.char_order;
      cfg.word_order = mtc.word_order;
      cfg.beta = mtc.beta;
      score = corpus_chrf(hyps, refs, cfg);
    }
    json out;
    out["metric"] = std::string(to_string(score.metric));
    out["value"] = score.value;
    out["segments"] = score.segment_count;
    std::cout << out.dump() << "\n";
  });

  auto* ndcg = metrics_cmd->add_subcommand("ndcg", "nDCG@k of retrieval vs judgments");
  struct {
    std::string index, queries, testset, per_query;
    std::size_t k = 16;
  } ndc;
  const auto* nd_index = ndcg->add_option("--index", ndc.index, "index file");
  const auto* nd_queries = ndcg->add_option("--queries", ndc.queries, "queries, one per line");
  const auto* nd_testset = ndcg->add_option("--testset", ndc.testset, "test-set JSONL");
  const auto* nd_k = ndcg->add_option("--k", ndc.k, "cutoff");
  const auto* nd_pq = ndcg->add_option("--per-query", ndc.per_query, "per-query CSV output");
  ndcg->callback([&] {
    config.fallback<std::string>(nd_index, "metrics_ndcg", "index", ndc.index);
    config.fallback<std::string>(nd_queries, "metrics_ndcg", "queries", ndc.queries);
    config.fallback<std::string>(nd_testset, "metrics_ndcg", "testset", ndc.testset);
    config.fallback<std::size_t>(nd_k, "metrics_ndcg", "k", ndc.k);
    config.fallback<std::string>(nd_pq, "metrics_ndcg", "per_query", ndc.per_query);
    if (ndc.index.empty() || ndc.queries.empty() || ndc.testset.empty()) {
      throw ValidationError("metrics ndcg requires --index, --queries and --testset");
    }
    const Index index = load_index(ndc.index);
    const TestSet testset = load_test_set(ndc.testset);
    const TranslationSet queries = load_translations(ndc.queries, "queries");
    const SearchScore score =
        evaluate_query_set(index, queries, testset, RankConfig{ndc.k}, index.profile);
    json out;
    out["metric"] = "ndcg";
    out["k"] = ndc.k;
    out["value"] = score.value;
    out["evaluated"] = score.evaluated_count;
    out["skipped"] = score.skipped_count;
    std::cout << out.dump() << "\n";
    if (!ndc.per_query.empty()) {
      std::ostringstream csv;
      csv << "query,ndcg,hits\n";
      for (const auto& q : score.per_query) {
        std::string field = q.query;
        const bool quote = field.find_first_of(",\"\n") != std::string::npos;
        if (quote) {
          std::string escaped = "\"";
          for (const char c : field) {
            if (c == '"') escaped += '"';
            escaped += c;
          }
          escaped += '"';
          field = escaped;
        }
        csv << field << ',' << q.ndcg << ',' << q.hits << '\n';
      }
      std::ofstream f(ndc.per_query, std::ios::binary | std::ios::trunc);
      if (!f) {
        throw std::runtime_error("cannot open " + ndc.per_query + " for writing");
      }
      f << csv.str();
    }
  });

  // ---- impact compute ------------------------------------------------------
  auto* impact_cmd = app.add_subcommand("impact", "impact-rate computations");
  auto* imp = impact_cmd->add_subcommand("compute", "impact rates from a scores CSV");
  struct {
    std::string scores, thresholds, out;
  } impc;
  const auto* imp_scores = imp->add_option("--scores", impc.scores, "scores CSV");
  const auto* imp_th = imp->add_option("--thresholds", impc.thresholds, "thresholds JSON");
  const auto* imp_out = imp->add_option("--out", impc.out, "output impact CSV");
  imp->callback([&] {
    config.fallback<std::string>(imp_scores, "impact", "scores", impc.scores);
    config.fallback<std::string>(imp_th, "impact", "thresholds", impc.thresholds);
    config.fallback<std::string>(imp_out, "impact", "out", impc.out);
    if (impc.scores.empty() || impc.out.empty()) {
      throw ValidationError("impact compute requires --scores and --out");
    }
    ImpactThresholds thresholds;
    if (!impc.thresholds.empty()) {
      thresholds = load_thresholds(impc.thresholds);
    }
    const EvaluationReport report = replay_tables(impc.scores, thresholds);
    std::ofstream f(impc.out, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw std::runtime_error("cannot open " + impc.out + " for writing");
    }
    f << render_impact_csv(report);
    std::cout << "wrote " << report.records.size() << " impact rows";
    if (!report.undefined.empty()) {
      std::cout << " (" << report.undefined.size() << " undefined)";
    }
    std::cout << " to " << impc.out << "\n";
  });

  // ---- run -----------------------------------------------------------------
  auto* run = app.add_subcommand("run", "end-to-end evaluation of one language pair");
  struct {
    std::string pair, store, catalog, testset, generic, adapted, source, reference;
    std::string mode = "word";
    std::size_t k = 16;
    bool lowercase = true, strip_punct = true;
  } runc;
  const auto* run_pair = run->add_option("--pair", runc.pair, "language pair label");
  const auto* run_store = run->add_option("--store", runc.store, "store label");
  const auto* run_catalog = run->add_option("--catalog", runc.catalog, "catalog JSONL");
  const auto* run_testset = run->add_option("--testset", runc.testset, "test-set JSONL");
  const auto* run_generic = run->add_option("--generic", runc.generic, "generic MT translations");
  const auto* run_adapted = run->add_option("--adapted", runc.adapted, "adapted MT translations");
  const auto* run_source = run->add_option("--source", runc.source, "source passthrough queries");
  const auto* run_reference = run->add_option("--reference", runc.reference, "reference queries");
  const auto* run_k = run->add_option("--k", runc.k, "nDCG cutoff");
  const auto* run_mode = run->add_option("--profile", runc.mode, "word|char tokenization");
  run->add_flag("--lowercase,!--no-lowercase", runc.lowercase, "lowercase ASCII (default on)");
  run->add_flag("--strip-punct,!--no-strip-punct", runc.strip_punct,
                "punctuation as separators (default on)");
  run->callback([&] {
    RunConfig cfg;
    const json* section = config.section("run");
    if (section == nullptr && config.root().contains("pair") && config.root().contains("catalog")) {
      section = &config.root();  // the config file itself is a run config
    }
    if (section != nullptr) {
      cfg = parse_run_config(section->dump(), "config");
    }
    if (run_pair->count() > 0) cfg.language_pair = runc.pair;
    if (run_store->count() > 0) cfg.store = runc.store;
    if (run_catalog->count() > 0) cfg.catalog_path = runc.catalog;
    if (run_testset->count() > 0) cfg.testset_path = runc.testset;
    if (run_generic->count() > 0) cfg.translation_paths[SystemId::generic] = runc.generic;
    if (run_adapted->count() > 0) cfg.translation_paths[SystemId::adapted] = runc.adapted;
    if (run_source->count() > 0) cfg.translation_paths[SystemId::source] = runc.source;
    if (run_reference->count() > 0) cfg.translation_paths[SystemId::reference] = runc.reference;
    if (run_k->count() > 0) cfg.rank.k = runc.k;
    if (run_mode->count() > 0 || section == nullptr) {
      cfg.search_profile = profile_from_flags(runc.mode, runc.lowercase, runc.strip_punct, false);
    }
    if (opt_seed->count() > 0 || cfg.seed == 0) cfg.seed = seed;
    if (opt_out_dir->count() > 0 || cfg.out_dir.empty()) cfg.out_dir = out_dir;
    if (cfg.catalog_path.empty() || cfg.testset_path.empty()) {
      throw ValidationError("run requires --catalog and --testset (or a config file)");
    }
    if (cfg.language_pair.empty()) {
      throw ValidationError("run requires --pair");
    }
    const EvaluationReport report = run_evaluation(cfg);
    write_report(report, cfg.out_dir);
    for (const auto& pair : report.pairs) {
      for (const auto& p : pair.points) {
        std::cout << pair.pair << " " << to_string(p.system) << ": bleu="
                  << (p.bleu ? std::to_string(*p.bleu) : "-") << " chrf="
                  << (p.chrf ? std::to_string(*p.chrf) : "-") << " ndcg=" << p.ndcg << "\n";
      }
    }
    for (const auto& r : report.records) {
      std::cout << r.language_pair << ": launch " << r.launch_rate_bleu << "/" << r.launch_rate_chrf
                << " improve " << r.improve_rate_bleu << "/" << r.improve_rate_chrf << " range "
                << r.range << " class " << to_string(r.impact_class) << " strategy "
                << to_string(r.strategy) << "\n";
    }
    for (const auto& u : report.undefined) {
      std::cout << u.language_pair << ": rates undefined (" << u.reason << ")\n";
    }
    std::cout << "report written to " << cfg.out_dir << "\n";
  });

  // ---- replay ----------------------------------------------------------------
  auto* replay = app.add_subcommand("replay", "impact report from a scores CSV fixture");
  struct {
    std::string scores, thresholds;
  } repc;
  const auto* rep_scores = replay->add_option("--scores", repc.scores, "scores CSV");
  const auto* rep_th = replay->add_option("--thresholds", repc.thresholds, "thresholds JSON");
  replay->callback([&] {
    config.fallback<std::string>(rep_scores, "replay", "scores", repc.scores);
    config.fallback<std::string>(rep_th, "replay", "thresholds", repc.thresholds);
    if (repc.scores.empty()) {
      throw ValidationError("replay requires --scores");
    }
    ImpactThresholds thresholds;
    if (!repc.thresholds.empty()) {
      thresholds = load_thresholds(repc.thresholds);
    }
    const EvaluationReport report = replay_tables(repc.scores, thresholds);
    write_report(report, out_dir);
    std::cout << "replayed " << report.pairs.size() << " pairs, " << report.records.size()
              << " impact records -> " << out_dir << "\n";
  });

  // ---- synth -------------------------------------------------------------------
  auto* synth = app.add_subcommand("synth", "generate a synthetic catalog and query log");
  struct {
    std::size_t products = 5000, queries = 500;
    std::string out_catalog, out_log, out_vocab;
  } syn;
  const auto* syn_p = synth->add_option("--products", syn.products, "number of products");
  const auto* syn_q = synth->add_option("--queries", syn.queries, "number of queries");
  const auto* syn_oc = synth->add_option("--out-catalog", syn.out_catalog, "catalog JSONL output");
  const auto* syn_ol = synth->add_option("--out-log", syn.out_log, "query log JSONL output");
  const auto* syn_ov = synth->add_option("--out-vocab", syn.out_vocab, "vocabulary output");
  synth->callback([&] {
    config.fallback<std::size_t>(syn_p, "synth", "products", syn.products);
    config.fallback<std::size_t>(syn_q, "synth", "queries", syn.queries);
    config.fallback<std::string>(syn_oc, "synth", "out_catalog", syn.out_catalog);
    config.fallback<std::string>(syn_ol, "synth", "out_log", syn.out_log);
    config.fallback<std::string>(syn_ov, "synth", "out_vocab", syn.out_vocab);
    if (syn.out_catalog.empty() || syn.out_log.empty()) {
      throw ValidationError("synth requires --out-catalog and --out-log");
    }
    const SyntheticCorpus corpus = generate_synthetic_corpus(syn.products, syn.queries, seed);
    save_catalog_jsonl(corpus.catalog, syn.out_catalog);
    save_query_log_jsonl(corpus.log, syn.out_log);
    if (!syn.out_vocab.empty()) {
      write_lines(corpus.vocabulary, syn.out_vocab);
    }
    std::cout << "generated " << corpus.catalog.size() << " products, " << corpus.log.size()
              << " queries\n";
  });

  // ---- noise ----------------------------------------------------------------------
  auto* noise = app.add_subcommand("noise", "apply a noisy-translation channel to queries");
  struct {
    std::string in, out, vocab;
    double p_drop = 0.0, p_swap = 0.0, p_substitute = 0.0, improve_fraction = 0.0;
  } noi;
  const auto* noi_in = noise->add_option("--in", noi.in, "input queries, one per line");
  const auto* noi_out = noise->add_option("--out", noi.out, "output queries");
  const auto* noi_pd = noise->add_option("--p-drop", noi.p_drop, "token drop probability");
  const auto* noi_ps = noise->add_option("--p-swap", noi.p_swap, "adjacent-char swap probability");
  const auto* noi_pu = noise->add_option("--p-substitute", noi.p_substitute,
                                         "token substitution probability");
  const auto* noi_vocab = noise->add_option("--vocab", noi.vocab,
                                            "substitution vocabulary (default: input tokens)");
  const auto* noi_if = noise->add_option("--improve-fraction", noi.improve_fraction,
                                         "restore this seeded fraction of queries to the input");
  noise->callback([&] {
    config.fallback<std::string>(noi_in, "noise", "in", noi.in);
    config.fallback<std::string>(noi_out, "noise", "out", noi.out);
    config.fallback<double>(noi_pd, "noise", "p_drop", noi.p_drop);
    config.fallback<double>(noi_ps, "noise", "p_swap", noi.p_swap);
    config.fallback<double>(noi_pu, "noise", "p_substitute", noi.p_substitute);
    config.fallback<std::string>(noi_vocab, "noise", "vocab", noi.vocab);
    config.fallback<double>(noi_if, "noise", "improve_fraction", noi.improve_fraction);
    if (noi.in.empty() || noi.out.empty()) {
      throw ValidationError("noise requires --in and --out");
    }
    const auto queries = read_lines(noi.in);
    NoiseSpec spec;
    spec.p_drop = noi.p_drop;
    spec.p_swap = noi.p_swap;
    spec.p_substitute = noi.p_substitute;
    spec.seed = seed;
    if (!noi.vocab.empty()) {
      spec.vocabulary = read_lines(noi.vocab);
    } else {
      std::set<std::string> vocab;
      const LanguageProfile plain;
      for (const auto& q : queries) {
        for (auto& t : tokenize(q, plain)) {
          vocab.insert(std::move(t));
        }
      }
      spec.vocabulary.assign(vocab.begin(), vocab.end());
    }
    TranslationSet noisy = noisy_translate(queries, spec);
    if (noi.improve_fraction > 0.0) {
      noisy = improve_query_subset(queries, std::move(noisy), noi.improve_fraction, seed + 1);
    }
    save_translations(noisy, noi.out);
    std::cout << "wrote " << noisy.translations.size() << " queries to " << noi.out << "\n";
  });

  // ---- plot-data -----------------------------------------------------------------
  auto* plot = app.add_subcommand("plot-data", "per-pair metric series from a metric points CSV");
  struct {
    std::string metric_points;
  } plc;
  const auto* plot_mp = plot->add_option("--metric-points", plc.metric_points, "metric points CSV");
  plot->callback([&] {
    config.fallback<std::string>(plot_mp, "plot_data", "metric_points", plc.metric_points);
    if (plc.metric_points.empty()) {
      throw ValidationError("plot-data requires --metric-points");
    }
    EvaluationReport report;
    report.pairs = load_scores_csv(plc.metric_points);
    if (report.pairs.empty()) {
      std::cout << "no pairs in " << plc.metric_points << "; nothing to emit\n";
      return;
    }
    emit_plot_data(report, out_dir);
    std::cout << "wrote " << report.pairs.size() << " series to " << out_dir << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
