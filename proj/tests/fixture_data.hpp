#pragma once

// The twelve-pair benchmark: published per-system metric values and the
// rate/range/ranking results derived from them. Mirrors
// fixtures/impact_study_scores.csv; expected values are frozen here.

#include <array>
#include <string>

namespace fixture {

struct PairRow {
  const char* pair;
  const char* store;
  double bleu_source, bleu_generic, bleu_adapted;
  double chrf_source, chrf_generic, chrf_adapted;
  double ndcg_source, ndcg_generic, ndcg_adapted, ndcg_reference;
  // published 2-dp rates: launch bleu/chrf, improve bleu/chrf
  double launch_bleu, launch_chrf, improve_bleu, improve_chrf;
  double range;  // published nDCG impact range
};

inline constexpr std::array<PairRow, 12> kPairs = {{
    {"ptpt-eses", "Spain", 16.49, 33.28, 63.08, 48.37, 73.26, 81.52, 42.53, 41.89, 47.64, 55.65,
     0.11, 0.15, 0.19, 0.70, 13.12},
    {"enus-jajp", "Japan", 2.8, 21.1, 30.6, 10.49, 41.91, 48.67, 36.2, 35.80, 43.19, 62.30,
     0.25, 0.18, 0.78, 1.09, 26.10},
    {"engb-dede", "Germany", 10.1, 45.61, 63.08, 33.08, 69.68, 80.99, 38.54, 52.38, 53.88, 61.91,
     0.29, 0.32, 0.09, 0.13, 23.37},
    {"frca-enca", "Canada", 3.77, 30.01, 40.46, 27.04, 69.72, 75.85, 33.34, 40.98, 44.64, 53.47,
     0.31, 0.23, 0.35, 0.60, 20.13},
    {"nlnl-dede", "Germany", 14.09, 36.87, 48.11, 42.63, 75.34, 80.58, 31.11, 43.67, 47.26, 56.76,
     0.47, 0.43, 0.32, 0.69, 25.65},
    {"esmx-enus", "US", 2.6, 26.6, 33.3, 24.92, 65.62, 69.19, 37.7, 50.6, 52.90, 69.40,
     0.50, 0.34, 0.34, 0.64, 31.70},
    {"ptbr-enus", "US", 3.7, 26.8, 41.91, 25.66, 64.2, 68.33, 27.2, 46.71, 50.89, 60.28,
     0.62, 0.56, 0.28, 1.01, 33.08},
    {"dede-enus", "US", 6.88, 46.74, 60.93, 30.49, 73.82, 81.36, 17.78, 46.91, 51.54, 60.27,
     0.62, 0.66, 0.33, 0.61, 42.49},
    {"knin-enin", "India", 2.77, 52.02, 71.27, 5.29, 82.67, 88.62, 2.90, 48.7, 52.27, 58.28,
     0.72, 0.59, 0.19, 0.60, 55.38},
    {"trtr-dede", "Germany", 6.4, 23.4, 28.8, 23.08, 64.27, 67.3, 26.8, 44.60, 45.90, 63.90,
     0.85, 0.43, 0.24, 0.43, 37.10},
    {"kokr-enus", "US", 6.02, 32.53, 38.39, 10.7, 69.79, 74.75, 19.59, 49.38, 51.29, 60.42,
     0.98, 0.49, 0.33, 0.39, 40.83},
    {"mlin-enin", "India", 4.41, 41.7, 47.02, 7.64, 77.7, 83.19, 4.00, 44.38, 48.34, 58.28,
     1.04, 0.59, 0.74, 0.72, 54.28},
}};

inline constexpr std::array<const char*, 12> kRankByLaunchBleu = {
    "mlin-enin", "kokr-enus", "trtr-dede", "knin-enin", "dede-enus", "ptbr-enus",
    "esmx-enus", "nlnl-dede", "frca-enca", "engb-dede", "enus-jajp", "ptpt-eses"};

inline constexpr std::array<const char*, 12> kRankByLaunchChrf = {
    "dede-enus", "knin-enin", "mlin-enin", "ptbr-enus", "kokr-enus", "trtr-dede",
    "nlnl-dede", "esmx-enus", "engb-dede", "frca-enca", "enus-jajp", "ptpt-eses"};

inline constexpr std::array<const char*, 12> kRankByRange = {
    "knin-enin", "mlin-enin", "dede-enus", "kokr-enus", "trtr-dede", "ptbr-enus",
    "esmx-enus", "enus-jajp", "nlnl-dede", "engb-dede", "frca-enca", "ptpt-eses"};

inline const PairRow& row(const std::string& pair) {
  for (const auto& r : kPairs) {
    if (pair == r.pair) {
      return r;
    }
  }
  throw std::out_of_range("no fixture row for " + pair);
}

}  // namespace fixture
