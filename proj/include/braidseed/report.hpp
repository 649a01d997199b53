// report.hpp: the aggregated analysis record for one (u, beta) and its
// lossless JSON round trip. Integers serialize as JSON numbers,
// half-integers as strings "p/2".
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidseed/autgroup.hpp"
#include "braidseed/exchange.hpp"
#include "braidseed/plabic.hpp"
#include "braidseed/variety.hpp"

namespace braidseed {

struct AnalysisReport {
  int n = 2;
  std::vector<int> u_word;     // lexicographically smallest reduced word
  std::vector<int> u_oneline;
  std::vector<int> beta;
  std::vector<int> J;
  int m = 0, f = 0;
  std::vector<int> vertex_order;  // vertex_order[id-1] = origin braid position
  std::vector<std::vector<int64_t>> boundaries;
  IntMatrix h_twice, d_twice;  // serialized as dyadic matrices H, D
  IntMatrix bhat;
  int64_t det = 1;
  IntMatrix a;
  IntMatrix torus_weights;  // (m+f) x f
  std::vector<std::string> torus_actions;
  SignReport sign;
  AnomalyCounters anomalies;
  DimensionReport dimension;
  std::optional<std::vector<InductiveStep>> step_log;  // present with --inductive

  bool operator==(const AnalysisReport&) const;
};

bool operator==(const InductiveStep& lhs, const InductiveStep& rhs);
bool operator==(const DimensionReport& lhs, const DimensionReport& rhs);

// Full pipeline for one pair. Throws EmptyVariety when u is not a subword.
AnalysisReport build_report(const Permutation& u, const BraidWord& beta, bool inductive = false);

std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const std::string& text);
std::string report_to_pretty(const AnalysisReport& report);

// Runs the internal validation suite on a finished report: determinant,
// skew/symmetry, mutable rows of D, frozen classification, kernel equations,
// and direct/inductive route agreement. Throws InternalError on failure.
void validate_report(const AnalysisReport& report);

}  // namespace braidseed
