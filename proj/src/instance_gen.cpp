#include "waring/instance_gen.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "waring/errors.hpp"
#include "waring/sampling.hpp"

namespace waring::gen {

namespace {

constexpr std::size_t kPoints = 14;
constexpr std::size_t kChosenResidual = 11;

std::optional<PointSet> sample_points(const PrimeContext& ctx, FieldSampler& rng) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < kPoints; ++i) pts.push_back(rng.uniform_vector(3));
  try {
    return PointSet(ctx, 2, std::move(pts));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<PointSet> next_admissible(const PrimeContext& ctx, FieldSampler& rng, const GeneratorConfig& cfg,
                                        std::size_t& attempts) {
  while (attempts < cfg.attempt_budget) {
    ++attempts;
    auto a = sample_points(ctx, rng);
    if (a && is_admissible(*a, cfg.require_kruskal, cfg.jobs)) return a;
  }
  return std::nullopt;
}

[[noreturn]] void exhausted(std::size_t budget) {
  throw Error(ErrorCode::GenerationExhausted, "no instance after " + std::to_string(budget) + " attempts");
}

// Row basis of the span of `vs`.
std::vector<Vector> row_basis(const PrimeContext& ctx, std::size_t len, const std::vector<Vector>& vs) {
  RowEchelon e = rref(DenseMatrix::from_rows(ctx, len, vs));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    auto r = e.reduced.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

// Parameter vector whose residual set passes through 11 random rational
// points of the quartic outside A.
std::optional<Vector> parameters_through_rational_points(const PointSet& a, const octic14::ResidualFamily& fam,
                                                         FieldSampler& rng, std::uint64_t scan_limit) {
  const PrimeContext& ctx = a.context();
  std::vector<Point> on_q;
  for (auto& p : rational_common_zeros(ctx, {fam.base.quartic}, scan_limit))
    if (!a.contains(p)) on_q.push_back(std::move(p));
  if (on_q.size() < kChosenResidual) return std::nullopt;
  for (std::size_t i = 0; i < kChosenResidual; ++i)
    std::swap(on_q[i], on_q[i + rng.raw() % (on_q.size() - i)]);

  std::vector<Vector> rows;
  for (std::size_t i = 0; i < kChosenResidual; ++i) {
    for (const auto& m : fam.param_minors) {
      Vector row(octic14::ResidualFamily::kParams);
      for (std::size_t t = 0; t < row.size(); ++t) row[t] = m.part(t).evaluate(on_q[i]);
      rows.push_back(std::move(row));
    }
  }
  auto ker = kernel_basis(DenseMatrix::from_rows(ctx, octic14::ResidualFamily::kParams, rows));
  if (ker.size() != 1) return std::nullopt;
  return ker.front();
}

}  // namespace

std::string to_string(GroundTruth g) {
  return g == GroundTruth::ExpectedIdentifiable ? "ExpectedIdentifiable" : "KnownUnidentifiable";
}

std::optional<GroundTruth> ground_truth_from_string(const std::string& s) {
  if (s == "ExpectedIdentifiable") return GroundTruth::ExpectedIdentifiable;
  if (s == "KnownUnidentifiable") return GroundTruth::KnownUnidentifiable;
  return std::nullopt;
}

bool is_admissible(const PointSet& a, bool require_kruskal, unsigned jobs) {
  if (a.n() != 2 || a.size() != kPoints) return false;
  if (hilbert_function(a, 8) != kPoints || hilbert_function(a, 4) != kPoints) return false;
  return !require_kruskal || kruskal_rank(a, 3, jobs).k == 10;
}

AdmissibleSet random_admissible_pointset(std::uint64_t seed, const GeneratorConfig& cfg) {
  PrimeContext ctx(cfg.prime);
  FieldSampler rng(ctx, seed);
  std::size_t attempts = 0;
  auto a = next_admissible(ctx, rng, cfg, attempts);
  if (!a) exhausted(cfg.attempt_budget);
  return {std::move(*a), attempts};
}

GeneratedInstance gen_identifiable(std::uint64_t seed, const GeneratorConfig& cfg) {
  PrimeContext ctx(cfg.prime);
  FieldSampler rng(ctx, seed);
  std::size_t attempts = 0;
  auto a = next_admissible(ctx, rng, cfg, attempts);
  if (!a) exhausted(cfg.attempt_budget);
  Vector lambda(kPoints);
  for (auto& l : lambda) l = rng.nonzero();
  return {Instance(std::move(*a), 8, std::move(lambda)), GroundTruth::ExpectedIdentifiable, std::nullopt, seed,
          attempts};
}

GeneratedInstance gen_unidentifiable(std::uint64_t seed, const GeneratorConfig& cfg) {
  PrimeContext ctx(cfg.prime);
  if (cfg.rational_residual && cfg.prime > cfg.scan_limit)
    throw Error(ErrorCode::ScanBudgetExceeded, "rational residual generation needs p <= " + std::to_string(cfg.scan_limit));
  FieldSampler rng(ctx, seed);
  std::size_t attempts = 0;
  while (attempts < cfg.attempt_budget) {
    auto a = next_admissible(ctx, rng, cfg, attempts);
    if (!a) break;
    std::optional<octic14::ResidualFamily> fam;
    try {
      fam = octic14::residual_family(octic14::hilbert_burch(*a));
    } catch (const Error&) {
      continue;
    }

    std::optional<Vector> params;
    if (cfg.rational_residual)
      params = parameters_through_rational_points(*a, *fam, rng, cfg.scan_limit);
    else
      params = rng.nonzero_vector(octic14::ResidualFamily::kParams);
    if (!params) continue;

    std::optional<PointSet> b;
    if (cfg.rational_residual) {
      auto rec = recover_residual_points(*a, fam->base.quartic, fam->minors_at(*params), kPoints, cfg.scan_limit);
      if (!rec.complete()) continue;
      b.emplace(ctx, 2, std::move(rec.points));
    }

    auto gens = octic14::residual_octic_generators(*fam, *params);
    auto ib8 = row_basis(ctx, 45, gens);
    if (ib8.size() != 31) continue;
    auto sum = octic14::octic_ideal_basis(*a);
    sum.insert(sum.end(), ib8.begin(), ib8.end());
    auto ann = kernel_basis(DenseMatrix::from_rows(ctx, 45, sum));
    if (ann.size() != 1) continue;

    auto sol = try_solve(evaluation_matrix(*a, 8).transpose(), ann.front());
    if (!sol) continue;
    if (std::any_of(sol->x.begin(), sol->x.end(), [](Residue l) { return l == 0; })) continue;

    WitnessData w{std::move(*params), std::move(ib8), std::move(ann.front()), std::move(b)};
    return {Instance(std::move(*a), 8, std::move(sol->x)), GroundTruth::KnownUnidentifiable, std::move(w), seed,
            attempts};
  }
  exhausted(cfg.attempt_budget);
}

std::vector<Point> rational_common_zeros(const PrimeContext& ctx, const std::vector<GradedPoly>& polys,
                                         std::uint64_t scan_limit) {
  const Residue p = static_cast<Residue>(ctx.prime());
  if (ctx.prime() > scan_limit)
    throw Error(ErrorCode::ScanBudgetExceeded,
                "p = " + std::to_string(p) + " exceeds the scan limit " + std::to_string(scan_limit));
  std::vector<Point> out;
  auto test = [&](Point pt) {
    for (const auto& f : polys)
      if (f.evaluate(pt) != 0) return;
    out.push_back(std::move(pt));
  };
  for (Residue y = 0; y < p; ++y)
    for (Residue z = 0; z < p; ++z) test({1, y, z});
  for (Residue z = 0; z < p; ++z) test({0, 1, z});
  test({0, 0, 1});
  return out;
}

RecoveredPoints recover_residual_points(const PointSet& a, const GradedPoly& quartic,
                                        const std::vector<GradedPoly>& quintics, std::size_t expected,
                                        std::uint64_t scan_limit) {
  std::vector<GradedPoly> polys{quartic};
  polys.insert(polys.end(), quintics.begin(), quintics.end());
  RecoveredPoints rec;
  rec.expected = expected;
  for (auto& p : rational_common_zeros(a.context(), polys, scan_limit))
    if (!a.contains(p)) rec.points.push_back(std::move(p));
  return rec;
}

}  // namespace waring::gen
