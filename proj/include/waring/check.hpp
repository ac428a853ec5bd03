#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waring/certificate.hpp"
#include "waring/octic14.hpp"

namespace waring {

enum class CriterionSet { All, Range, Ranger, Mo, Kruskal, Octic14 };

/// Parses "all", "range", "ranger", "mo", "kruskal", "octic14".
std::optional<CriterionSet> criterion_set_from_string(const std::string& s);

struct CheckOptions {
  CriterionSet criteria = CriterionSet::All;
  octic14::SystemMode mode = octic14::SystemMode::Full;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
};

struct Timing {
  std::string stage;
  double seconds = 0;
};

struct CheckResult {
  std::vector<Certificate> certificates;  // in the order they ran
  Certificate overall;
  std::vector<Timing> timings;
  std::optional<octic14::Report> octic_report;

  /// 0 when a verdict was reached, 1 when inconclusive or degenerate.
  int exit_code() const noexcept;
};

/// Runs the selected criteria cheapest first (range, ranger, mo, reshaped
/// Kruskal, octic14), stopping at the first identifiability verdict. A
/// criterion whose hypotheses do not apply yields Inconclusive; a redundant
/// decomposition yields Degenerate.
CheckResult run_check(const Instance& inst, const CheckOptions& opt = {});

}  // namespace waring
