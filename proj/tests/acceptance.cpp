#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>

#include "properties.hpp"
#include "support.hpp"
#include "waring/check.hpp"
#include "waring/criteria.hpp"
#include "waring/errors.hpp"
#include "waring/instance_gen.hpp"
#include "waring/octic14.hpp"

using namespace waring;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

int failures = 0;

void report(int n, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    o = body();
  } catch (const std::exception& e) {
    o = fail(std::string("exception: ") + e.what());
  }
  char time[32];
  std::snprintf(time, sizeof time, "%.2fs", seconds_since(t0));
  std::printf("[%s] criterion %d: %s (%s)%s%s\n", o.ok ? "PASS" : "FAIL", n, title.c_str(), time,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
  failures += !o.ok;
}

std::string verdict_of(const Instance& inst, octic14::SystemMode mode, std::uint64_t seed = 0) {
  return octic14::certify(inst, {mode, 1, seed}).verdict_string();
}

Outcome optics_case(bool t2) {
  const auto t0 = Clock::now();
  std::optional<octic14::Report> rep;
  const Certificate c = octic14::certify(support::optics_instance(t2), {}, rep);
  const double secs = seconds_since(t0);
  if (!rep) return fail("no system was built: " + c.verdict_string());
  const auto& pre = rep->preconditions;
  if (pre.veronese_rank != 14 || pre.h4 != 14 || pre.k3 != 10 || pre.k3_subsets != 1001)
    return fail("test ranks " + std::to_string(pre.veronese_rank) + ", " + std::to_string(pre.h4) + ", " +
                std::to_string(pre.k3));
  const std::size_t want_rank = t2 ? 11 : 12;
  if (rep->system_rank != want_rank) return fail("system rank " + std::to_string(rep->system_rank));
  if (t2) {
    if (c.verdict != VerdictKind::NotIdentifiable) return fail(c.verdict_string());
    if (!c.witness || !c.witness->passed()) return fail("witness not verified");
  } else if (c.verdict_string() != "IdentifiableOfRank(14)") {
    return fail(c.verdict_string());
  }
  if (secs >= 5.0) return fail("took " + std::to_string(secs) + "s");
  return {true, "ranks (14, 14, 10), system rank " + std::to_string(want_rank) + ", " + c.verdict_string()};
}

}  // namespace

int main() {
  using octic14::SystemMode;

  report(1, "identifiable fourteen-point octic", [] { return optics_case(false); });
  report(2, "unidentifiable fourteen-point octic", [] { return optics_case(true); });

  report(3, "full and thirteen-row systems agree", []() -> Outcome {
    std::vector<Instance> cases = {support::optics_instance(false), support::optics_instance(true)};
    for (std::uint64_t s = 0; s < 50; ++s) {
      cases.push_back(gen::gen_identifiable(1000 + s).instance);
      cases.push_back(gen::gen_unidentifiable(1000 + s).instance);
    }
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const std::string full = verdict_of(cases[i], SystemMode::Full);
      const std::string p13 = verdict_of(cases[i], SystemMode::Paper13, i);
      if (full != p13) return fail("instance " + std::to_string(i) + ": " + full + " vs " + p13);
    }
    return {true, std::to_string(cases.size()) + " instances"};
  });

  report(4, "generator round-trip", []() -> Outcome {
    const auto t0 = Clock::now();
    for (std::uint64_t s = 0; s < 50; ++s) {
      const auto u = gen::gen_unidentifiable(s);
      const Certificate cu = octic14::certify(u.instance);
      if (cu.verdict != VerdictKind::NotIdentifiable || !cu.witness || !cu.witness->passed())
        return fail("unidentifiable seed " + std::to_string(s) + ": " + cu.verdict_string());
      const auto g = gen::gen_identifiable(s);
      const Certificate ci = octic14::certify(g.instance);
      if (ci.verdict_string() != "IdentifiableOfRank(14)")
        return fail("identifiable seed " + std::to_string(s) + ": " + ci.verdict_string());
    }
    const double secs = seconds_since(t0);
    if (secs >= 180) return fail("took " + std::to_string(secs) + "s");
    return {true, "50/50 NotIdentifiable with witness, 50/50 IdentifiableOfRank(14)"};
  });

  report(5, "Hilbert function properties", []() -> Outcome {
    if (auto e = props::hilbert_battery(5005, 200); !e.empty()) return fail(e);
    return {true, "200 random sets"};
  });

  report(6, "span intersection identity", []() -> Outcome {
    std::size_t overlap = 0, defect = 0;
    if (auto e = props::cap_battery(6006, 100, &overlap, &defect); !e.empty()) return fail(e);
    if (overlap == 0) return fail("no overlapping pair was drawn");
    return {true, "100 triples, " + std::to_string(overlap) + " overlapping, " + std::to_string(defect) +
                      " with positive h^1"};
  });

  report(7, "Cayley-Bacharach suite", []() -> Outcome {
    struct Case {
      const char* file;
      std::vector<std::size_t> h, dh;
      std::vector<bool> cb;  // CB(1), CB(2)
    };
    const std::vector<Case> cases = {{"general6.json", {1, 3, 6, 6, 6}, {1, 2, 3, 0, 0}, {true, false}},
                                     {"conic6.json", {1, 3, 5, 6, 6}, {1, 2, 2, 1, 0}, {true, true}},
                                     {"five_aligned6.json", {1, 3, 4, 5, 6, 6}, {1, 2, 1, 1, 1, 0}, {false, false}}};
    for (const auto& c : cases) {
      const PointSet z = support::load_fixture(c.file).points;
      const HilbertProfile prof = hilbert_profile(z, c.h.size() - 1);
      if (prof.values != c.h || prof.differences != c.dh) return fail(std::string(c.file) + ": " + props::profile_string(prof));
      for (std::size_t d = 1; d <= 2; ++d)
        if (cb_check(z, d) != c.cb[d - 1]) return fail(std::string(c.file) + ": CB(" + std::to_string(d) + ")");
    }
    gen::GeneratorConfig cfg;
    cfg.prime = 101;
    cfg.require_kruskal = false;
    cfg.rational_residual = true;
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto g = gen::gen_unidentifiable(s, cfg);
      if (!g.witness || !g.witness->residual_points) return fail("seed " + std::to_string(s) + ": B not recovered");
      if (auto e = props::complete_intersection_union(g.instance.points, *g.witness->residual_points); !e.empty())
        return fail("seed " + std::to_string(s) + ": " + e);
    }
    return {true, "3 tables, 10 unions over p = 101"};
  });

  report(8, "Hilbert-Burch structure", []() -> Outcome {
    if (auto e = props::hilbert_burch_structure(support::optics_set()); !e.empty()) return fail("fixture: " + e);
    for (std::uint64_t s = 0; s < 50; ++s) {
      const auto a = gen::random_admissible_pointset(8000 + s);
      if (auto e = props::hilbert_burch_structure(a.points); !e.empty()) return fail("seed " + std::to_string(s) + ": " + e);
    }
    return {true, "fixture and 50 admissible sets"};
  });

  report(9, "general criteria", []() -> Outcome {
    const PrimeContext ctx;
    support::Rng rng(9009);
    auto generic = [&](std::size_t count, std::size_t d) {
      const PointSet a = support::random_general_set(ctx, 2, count, rng);
      return Instance(a, d, support::random_nonzero(ctx, count, rng));
    };
    const std::string r13 = range_certify(generic(13, 8)).verdict_string();
    if (r13 != "IdentifiableOfRank(13)") return fail("range, 13 points: " + r13);
    const std::string r14 = ranger_certify(support::optics_instance(false)).verdict_string();
    if (r14 != "ComputesRank(14)") return fail("ranger, fixture: " + r14);
    const std::string r7 = range_certify(generic(7, 5)).verdict_string();
    if (r7 != "IdentifiableOfRank(7)") return fail("range, d = 5: " + r7);
    const std::string r10 = ranger_certify(generic(10, 6)).verdict_string();
    if (r10 != "ComputesRank(10)") return fail("ranger, d = 6: " + r10);
    return {true, r13 + ", " + r14 + ", " + r7 + ", " + r10};
  });

  report(10, "no identifiability claim on degenerate input", []() -> Outcome {
    const PrimeContext ctx;
    support::Rng rng(10010);
    std::vector<PointSet> bases = {support::optics_set(ctx)};
    for (std::uint64_t s = 0; s < 4; ++s) bases.push_back(gen::random_admissible_pointset(10000 + s).points);
    std::size_t zero = 0, dup = 0, conic = 0, rejected = 0;
    for (std::size_t t = 0; t < 1000; ++t) {
      const PointSet& base = bases[rng.below(bases.size())];
      std::vector<Point> pts = base.points();
      Vector lambda = support::random_nonzero(ctx, 14, rng);
      const std::size_t kind = t % 3;
      if (kind == 0) {
        const std::size_t k = 1 + rng.below(3);
        for (std::size_t i = 0; i < k; ++i) lambda[rng.below(14)] = 0;
        ++zero;
      } else if (kind == 1) {
        const std::size_t i = rng.below(14), j = (i + 1 + rng.below(13)) % 14;
        const Residue c = static_cast<Residue>(1 + rng.below(ctx.prime() - 1));
        for (std::size_t v = 0; v < 3; ++v) pts[j][v] = ctx.mul(c, pts[i][v]);
        ++dup;
      } else {
        const support::RandomConic q = support::random_conic(ctx, rng);
        const std::size_t k = 8 + rng.below(7);
        std::vector<Point> on;
        while (on.size() < k) support::push_distinct(ctx, on, q.at(ctx, static_cast<Residue>(rng.below(ctx.prime())), 1));
        for (const auto& p : pts) {
          if (on.size() == 14) break;
          support::push_distinct(ctx, on, p);
        }
        pts = std::move(on);
        ++conic;
      }
      CheckResult r;
      try {
        r = run_check(Instance(PointSet(ctx, 2, pts), 8, lambda));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DuplicatePoint) return fail(std::string("unexpected error: ") + e.what());
        ++rejected;
        continue;
      }
      for (const auto& c : r.certificates)
        if (c.verdict == VerdictKind::IdentifiableOfRank)
          return fail("perturbation " + std::to_string(t) + ": " + c.criterion + " claims " + c.verdict_string());
      if (r.overall.verdict == VerdictKind::IdentifiableOfRank) return fail("perturbation " + std::to_string(t));
    }
    return {true, std::to_string(zero) + " zero-coefficient, " + std::to_string(dup) + " duplicated (" +
                      std::to_string(rejected) + " rejected on load), " + std::to_string(conic) + " conic-heavy"};
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
