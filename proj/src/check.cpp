#include "waring/check.hpp"

#include <chrono>
#include <functional>
#include <utility>

#include "waring/criteria.hpp"
#include "waring/errors.hpp"

namespace waring {

namespace {

bool decides_identifiability(VerdictKind v) {
  return v == VerdictKind::IdentifiableOfRank || v == VerdictKind::NotIdentifiable;
}

Certificate guarded(const std::string& name, const std::function<Certificate()>& run) {
  try {
    return run();
  } catch (const Error& e) {
    Certificate c;
    c.criterion = name;
    c.verdict = e.code() == ErrorCode::RedundancyDetected ? VerdictKind::Degenerate : VerdictKind::Inconclusive;
    c.reason = e.what();
    return c;
  }
}

}  // namespace

std::optional<CriterionSet> criterion_set_from_string(const std::string& s) {
  if (s == "all") return CriterionSet::All;
  if (s == "range") return CriterionSet::Range;
  if (s == "ranger") return CriterionSet::Ranger;
  if (s == "mo") return CriterionSet::Mo;
  if (s == "kruskal") return CriterionSet::Kruskal;
  if (s == "octic14") return CriterionSet::Octic14;
  return std::nullopt;
}

int CheckResult::exit_code() const noexcept {
  switch (overall.verdict) {
    case VerdictKind::IdentifiableOfRank:
    case VerdictKind::ComputesRank:
    case VerdictKind::NotIdentifiable: return 0;
    default: return 1;
  }
}

CheckResult run_check(const Instance& inst, const CheckOptions& opt) {
  CheckResult res;
  const bool octic_applies = inst.points.n() == 2 && inst.degree == 8 && inst.points.size() == 14;
  std::vector<std::pair<CriterionSet, std::string>> order = {{CriterionSet::Range, "range"},
                                                             {CriterionSet::Ranger, "ranger"},
                                                             {CriterionSet::Mo, "mo"},
                                                             {CriterionSet::Kruskal, "kruskal"},
                                                             {CriterionSet::Octic14, "octic14"}};
  for (const auto& [which, name] : order) {
    if (opt.criteria != CriterionSet::All && opt.criteria != which) continue;
    if (opt.criteria == CriterionSet::All && which == CriterionSet::Octic14 && !octic_applies) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Certificate cert = guarded(name, [&]() -> Certificate {
      switch (which) {
        case CriterionSet::Range: return range_certify(inst, opt.jobs);
        case CriterionSet::Ranger: return ranger_certify(inst, opt.jobs);
        case CriterionSet::Mo: return mo_certify(inst, opt.jobs);
        case CriterionSet::Kruskal: return reshaped_kruskal_certify(inst, opt.jobs);
        default: return octic14::certify(inst, {opt.mode, opt.jobs, opt.seed}, res.octic_report);
      }
    });
    if (cert.criterion.empty()) cert.criterion = name;
    res.timings.push_back({name, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()});
    res.certificates.push_back(std::move(cert));
    if (decides_identifiability(res.certificates.back().verdict)) break;
  }

  // identifiability verdicts outrank ComputesRank, which outranks the rest
  const Certificate* best = nullptr;
  auto score = [](VerdictKind v) {
    if (decides_identifiability(v)) return 3;
    if (v == VerdictKind::ComputesRank) return 2;
    if (v == VerdictKind::Degenerate) return 1;
    return 0;
  };
  for (const auto& c : res.certificates)
    if (!best || score(c.verdict) > score(best->verdict)) best = &c;
  if (best) {
    res.overall = *best;
  } else {
    res.overall.criterion = "none";
    res.overall.reason = "no criterion selected";
  }
  return res;
}

}  // namespace waring
