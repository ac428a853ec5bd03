#include "waring/octic14.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "waring/errors.hpp"
#include "waring/sampling.hpp"

namespace waring::octic14 {

namespace {

constexpr std::size_t kPoints = 14;
constexpr std::size_t kDegree = 8;
constexpr std::size_t kSelectionRetries = 8;

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

GradedPoly linear_from(const PrimeContext& ctx, const Vector& v, std::size_t offset) {
  return GradedPoly(ctx, 2, 1, Vector(v.begin() + static_cast<std::ptrdiff_t>(offset),
                                      v.begin() + static_cast<std::ptrdiff_t>(offset + 3)));
}

// f = c * g for some scalar c; returns c, or nullopt if not proportional.
std::optional<Residue> proportionality(const GradedPoly& f, const GradedPoly& g) {
  const PrimeContext& ctx = g.context();
  auto it = std::find_if(g.coeffs().begin(), g.coeffs().end(), [](Residue c) { return c != 0; });
  if (it == g.coeffs().end()) return std::nullopt;
  const auto k = static_cast<std::size_t>(it - g.coeffs().begin());
  const Residue c = ctx.mul(f.coeff(k), ctx.inv(g.coeff(k)));
  if (!(g.scaled(c) == f)) return std::nullopt;
  return c;
}

std::vector<GradedPoly> variables(const PrimeContext& ctx) {
  return {GradedPoly::variable(ctx, 2, 0), GradedPoly::variable(ctx, 2, 1), GradedPoly::variable(ctx, 2, 2)};
}

std::vector<Vector> multiples(const GradedPoly& f, std::size_t by_degree) {
  const auto basis = monomial_basis(2, by_degree);
  std::vector<Vector> out;
  out.reserve(basis->size());
  for (std::size_t i = 0; i < basis->size(); ++i)
    out.push_back((f * GradedPoly::monomial(f.context(), 2, basis->exponent(i))).coeffs());
  return out;
}

}  // namespace

PreconditionEvidence check_preconditions(const Instance& inst, unsigned jobs, bool require_kruskal) {
  const auto& a = inst.points;
  if (a.n() != 2 || inst.degree != kDegree || a.size() != kPoints) {
    throw Error(ErrorCode::PreconditionFailed, "needs 14 points of P^2 and degree 8 (got " + std::to_string(a.size()) +
                                                   " points of P^" + std::to_string(a.n()) + ", degree " +
                                                   std::to_string(inst.degree) + ")");
  }
  PreconditionEvidence ev;
  ev.veronese_rank = hilbert_function(a, kDegree);
  if (ev.veronese_rank != kPoints)
    throw Error(ErrorCode::PreconditionFailed, "test 1: rank v_8(A) = " + std::to_string(ev.veronese_rank));
  for (std::size_t i = 0; i < inst.lambda.size(); ++i)
    if (inst.lambda[i] == 0)
      throw Error(ErrorCode::PreconditionFailed, "test 1: coefficient " + std::to_string(i + 1) + " is zero (redundant)");
  ev.h4 = hilbert_function(a, 4);
  if (ev.h4 != kPoints) throw Error(ErrorCode::PreconditionFailed, "test 2: h_A(4) = " + std::to_string(ev.h4));
  if (require_kruskal) {
    const KruskalResult kr = kruskal_rank(a, 3, jobs);
    ev.k3 = kr.k;
    ev.k3_subsets = kr.subsets_examined;
    if (ev.k3 != 10) throw Error(ErrorCode::PreconditionFailed, "test 3: k_3(A) = " + std::to_string(ev.k3));
  }
  return ev;
}

GradedPoly unique_quartic(const PointSet& a) {
  auto ker = kernel_basis(evaluation_matrix(a, 4));
  if (ker.size() != 1)
    throw Error(ErrorCode::QuarticNotUnique, "quartics through A form a space of dimension " + std::to_string(ker.size()));
  const PrimeContext& ctx = a.context();
  Vector v = std::move(ker.front());
  auto it = std::find_if(v.begin(), v.end(), [](Residue c) { return c != 0; });
  const Residue s = ctx.inv(*it);
  for (auto& c : v) c = ctx.mul(c, s);
  return GradedPoly(ctx, 2, 4, std::move(v));
}

std::vector<GradedPoly> signed_maximal_minors(const std::vector<std::vector<GradedPoly>>& m) {
  std::vector<GradedPoly> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<std::vector<GradedPoly>> sub;
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != i) sub.push_back(m[r]);
    GradedPoly d = det_poly(sub);
    out.push_back(i % 2 ? -d : d);
  }
  return out;
}

HilbertBurch hilbert_burch(const PointSet& a) {
  const PrimeContext& ctx = a.context();
  GradedPoly q = unique_quartic(a);
  auto quintic_piece = kernel_basis(evaluation_matrix(a, 5));
  if (quintic_piece.size() != 7)
    throw Error(ErrorCode::IdealDimension, "degree-5 ideal piece has dimension " + std::to_string(quintic_piece.size()));

  // pivot columns of [x0 Q, x1 Q, x2 Q | kernel] beyond the first three
  const auto xs = variables(ctx);
  std::vector<Vector> cols;
  for (const auto& x : xs) cols.push_back((x * q).coeffs());
  cols.insert(cols.end(), quintic_piece.begin(), quintic_piece.end());
  RowEchelon e = rref(DenseMatrix::from_columns(ctx, 21, cols));
  std::vector<GradedPoly> quintics;
  for (std::size_t c : e.pivots)
    if (c >= 3) quintics.emplace_back(ctx, 2, 5, cols[c]);
  if (quintics.size() != 4 || e.pivots.size() != 7)
    throw Error(ErrorCode::IdealDimension, "degree-5 ideal piece is not x*Q plus four quintics");

  // Phi(f, g_1..g_4) = f Q + sum g_j Q_j, columns: conic monomials, then 3 per Q_j
  std::vector<Vector> phi_cols = multiples(q, 2);
  for (const auto& qj : quintics) {
    auto m = multiples(qj, 1);
    phi_cols.insert(phi_cols.end(), m.begin(), m.end());
  }
  DenseMatrix phi = DenseMatrix::from_columns(ctx, 28, phi_cols);
  auto syz = kernel_basis(phi);
  if (syz.size() != 4)
    throw Error(ErrorCode::SyzygyDimension, "linear syzygy space has dimension " + std::to_string(syz.size()));

  std::vector<std::vector<GradedPoly>> m(5);
  for (const auto& v : syz) {
    m[0].emplace_back(ctx, 2, 2, Vector(v.begin(), v.begin() + 6));
    for (std::size_t j = 0; j < 4; ++j) m[j + 1].push_back(linear_from(ctx, v, 6 + 3 * j));
  }
  std::vector<std::vector<GradedPoly>> lower(m.begin() + 1, m.end());
  GradedPoly minor = det_poly(lower);
  auto scale = proportionality(minor, q);
  if (minor.is_zero() || !scale || *scale == 0)
    throw Error(ErrorCode::MinorDegenerate, "minor omitting the conic row is not a nonzero multiple of Q");

  HilbertBurch hb{std::move(q), std::move(quintics), std::move(m), std::move(phi), *scale};
  return hb;
}

Normalization normalization_check(const HilbertBurch& hb) {
  const PrimeContext& ctx = hb.quartic.context();
  const auto xs = variables(ctx);
  Normalization out{DenseMatrix(ctx, 12, 12), 0};
  // unknown l_{r,h} (coefficient of x_h in the multiplier of lower row r) is column 3r + h;
  // rows 0..5: conic coefficients of sum_r l_r * M[1][r]; rows 6..11: same with M[3][r]
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t h = 0; h < 3; ++h) {
      GradedPoly top = xs[h] * hb.matrix[1][r];
      GradedPoly bottom = xs[h] * hb.matrix[3][r];
      for (std::size_t i = 0; i < 6; ++i) {
        out.matrix(i, 3 * r + h) = top.coeff(i);
        out.matrix(6 + i, 3 * r + h) = bottom.coeff(i);
      }
    }
  }
  out.rank = rank(out.matrix);
  return out;
}

std::vector<GradedPoly> ResidualFamily::minors_at(std::span<const Residue> a) const {
  std::vector<GradedPoly> out;
  for (const auto& pm : param_minors) out.push_back(pm.specialize(a));
  return out;
}

ResidualFamily residual_family(const HilbertBurch& hb) {
  const PrimeContext& ctx = hb.quartic.context();
  const Normalization norm = normalization_check(hb);
  if (norm.rank != 12)
    throw Error(ErrorCode::NormalizationDegenerate, "normalization matrix has rank " + std::to_string(norm.rank));

  ResidualFamily fam{hb, {}, {}, 0};
  fam.lower.assign(4, {});
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) fam.lower[r].push_back(hb.matrix[c + 1][r]);

  GradedPoly qmin = det_poly(fam.lower);
  auto scale = proportionality(qmin, hb.quartic);
  if (!scale || *scale == 0)
    throw Error(ErrorCode::MinorDegenerate, "quartic minor of the residual matrix is not a nonzero multiple of Q");
  fam.quartic_scale = *scale;

  const auto conics = monomial_basis(2, 2);
  bool any_cofactor = false;
  // first row (0, q2, 0, q4): q2 uses a_1..a_6 (indices 0..5), q4 uses a_7..a_12
  for (std::size_t omit = 0; omit < 4; ++omit) {
    std::vector<GradedPoly> parts(ResidualFamily::kParams, GradedPoly(ctx, 2, 5));
    for (std::size_t c : {std::size_t{1}, std::size_t{3}}) {
      std::vector<std::vector<GradedPoly>> sub;
      for (std::size_t r = 0; r < 4; ++r) {
        if (r == omit) continue;
        std::vector<GradedPoly> row;
        for (std::size_t j = 0; j < 4; ++j)
          if (j != c) row.push_back(fam.lower[r][j]);
        sub.push_back(std::move(row));
      }
      GradedPoly cof = det_poly(sub);
      if (!cof.is_zero()) any_cofactor = true;
      // cofactor sign (-1)^c along the first row, generator sign (-1)^(omit+1)
      const bool negate = ((c + omit + 1) % 2) == 1;
      const std::size_t base = c == 1 ? 0 : 6;
      for (std::size_t t = 0; t < 6; ++t) {
        GradedPoly term = GradedPoly::monomial(ctx, 2, conics->exponent(t)) * cof;
        parts[base + t] = negate ? -term : term;
      }
    }
    fam.param_minors.push_back(ParamPoly::from_parts(parts));
  }
  if (!any_cofactor) throw Error(ErrorCode::DegenerateCofactors, "every cubic cofactor vanishes");
  return fam;
}

DenseMatrix full_system(const Vector& form, const ResidualFamily& fam) {
  const PrimeContext& ctx = fam.base.quartic.context();
  const auto cubics = monomial_basis(2, 3);
  const auto quintics = monomial_basis(2, 5);
  const auto octics = monomial_basis(2, 8);
  if (form.size() != octics->size()) throw Error(ErrorCode::DimensionMismatch, "form is not an octic");
  DenseMatrix sys(ctx, 4 * cubics->size(), ResidualFamily::kParams);
  std::vector<Exponent> e(3);
  for (std::size_t j = 0; j < 4; ++j) {
    const ParamPoly& pm = fam.param_minors[j];
    for (std::size_t u = 0; u < cubics->size(); ++u) {
      const auto mu = cubics->exponent(u);
      const std::size_t row = j * cubics->size() + u;
      for (std::size_t b = 0; b < quintics->size(); ++b) {
        const auto beta = quintics->exponent(b);
        for (std::size_t v = 0; v < 3; ++v) e[v] = static_cast<Exponent>(mu[v] + beta[v]);
        const Residue pv = form[octics->index_of(e)];
        if (pv == 0) continue;
        for (std::size_t t = 0; t < ResidualFamily::kParams; ++t)
          sys(row, t) = ctx.add(sys(row, t), ctx.mul(pv, pm(b, t)));
      }
    }
  }
  return sys;
}

std::vector<Vector> octic_ideal_basis(const PointSet& a) { return kernel_basis(evaluation_matrix(a, kDegree)); }

std::vector<Vector> residual_octic_generators(const ResidualFamily& fam, std::span<const Residue> a) {
  std::vector<Vector> gens = multiples(fam.base.quartic, 4);
  for (const auto& m : fam.minors_at(a)) {
    auto more = multiples(m, 3);
    gens.insert(gens.end(), more.begin(), more.end());
  }
  return gens;
}

Report second_decomposition_system(const Instance& inst, const ResidualFamily& fam, SystemMode mode,
                                   std::uint64_t seed) {
  const PrimeContext& ctx = inst.context();
  const Vector form = inst.form_coefficients();
  DenseMatrix full = full_system(form, fam);
  Report rep{{}, full, 0, {}, 0, std::nullopt};
  if (mode == SystemMode::Full) {
    rep.system_rank = rank(full);
    return rep;
  }

  const auto ia8 = octic_ideal_basis(inst.points);
  const auto cubics = monomial_basis(2, 3);
  for (std::size_t attempt = 0; attempt < kSelectionRetries; ++attempt) {
    rep.selection_attempts = attempt + 1;
    FieldSampler rng(ctx, seed * kSelectionRetries + attempt + 1);
    const Vector a0 = rng.nonzero_vector(ResidualFamily::kParams);
    std::vector<Vector> cols = ia8;
    for (const auto& m : fam.minors_at(a0)) {
      for (std::size_t u = 0; u < cubics->size(); ++u)
        cols.push_back((m * GradedPoly::monomial(ctx, 2, cubics->exponent(u))).coeffs());
    }
    RowEchelon e = rref(DenseMatrix::from_columns(ctx, 45, cols));
    std::vector<std::size_t> chosen;
    std::size_t from_a = 0;
    for (std::size_t c : e.pivots) {
      if (c < ia8.size())
        ++from_a;
      else
        chosen.push_back(c - ia8.size());
    }
    if (from_a != ia8.size() || e.pivots.size() != 44) continue;
    rep.selected_rows = chosen;
    rep.system_matrix = full.select_rows(chosen);
    rep.system_rank = rank(rep.system_matrix);
    return rep;
  }
  throw Error(ErrorCode::SelectionFailed,
              "no specialization extended (I_A)_8 to a hyperplane in " + std::to_string(kSelectionRetries) + " tries");
}

WitnessCheck verify_witness(const Instance& inst, const ResidualFamily& fam, std::span<const Residue> a) {
  if (std::all_of(a.begin(), a.end(), [](Residue c) { return c == 0; }))
    throw Error(ErrorCode::WitnessRejected, "zero parameter vector");
  const PrimeContext& ctx = inst.context();
  WitnessCheck w;
  w.parameters.assign(a.begin(), a.end());

  std::vector<Vector> quintic_gens;
  for (const auto& x : variables(ctx)) quintic_gens.push_back((x * fam.base.quartic).coeffs());
  for (const auto& m : fam.minors_at(a)) quintic_gens.push_back(m.coeffs());
  w.quintic_dim = span_dimension(ctx, 21, quintic_gens);

  const auto gens = residual_octic_generators(fam, a);
  w.octic_dim = span_dimension(ctx, 45, gens);

  auto all = octic_ideal_basis(inst.points);
  all.insert(all.end(), gens.begin(), gens.end());
  w.sum_dim = span_dimension(ctx, 45, all);

  const Vector form = inst.form_coefficients();
  w.orthogonal = std::all_of(gens.begin(), gens.end(), [&](const Vector& g) { return ctx.dot(form, g) == 0; });
  return w;
}

Certificate certify(const Instance& inst, const Options& opt) {
  std::optional<Report> ignored;
  return certify(inst, opt, ignored);
}

Certificate certify(const Instance& inst, const Options& opt, std::optional<Report>& report) {
  Certificate cert;
  cert.criterion = opt.mode == SystemMode::Full ? "octic14" : "octic14/paper13";
  report.reset();
  try {
    PreconditionEvidence pre = check_preconditions(inst, opt.jobs);
    cert.add("rank v_8(A)", as_int(pre.veronese_rank));
    cert.add("h_A(4)", as_int(pre.h4));
    cert.add("k_3(A)", as_int(pre.k3));
    cert.add("k_3(A).subsets", as_int(pre.k3_subsets));

    HilbertBurch hb = hilbert_burch(inst.points);
    cert.add("syzygy_dimension", 4);
    const Normalization norm = normalization_check(hb);
    cert.add("normalization_rank", as_int(norm.rank));
    ResidualFamily fam = residual_family(hb);

    Report rep = second_decomposition_system(inst, fam, opt.mode, opt.seed);
    rep.preconditions = pre;
    cert.add("system_rows", as_int(rep.system_matrix.rows()));
    cert.add("system_rank", as_int(rep.system_rank));
    if (opt.mode == SystemMode::Paper13) cert.add("selection_attempts", as_int(rep.selection_attempts));

    if (rep.system_rank == ResidualFamily::kParams) {
      cert.verdict = VerdictKind::IdentifiableOfRank;
      cert.rank = kPoints;
      report = std::move(rep);
      return cert;
    }

    std::optional<WitnessCheck> last;
    for (const auto& a : kernel_basis(rep.system_matrix)) {
      WitnessCheck w = verify_witness(inst, fam, a);
      last = w;
      if (w.passed()) break;
    }
    rep.witness = last;
    if (last) {
      cert.add("witness_quintic_dim", as_int(last->quintic_dim));
      cert.add("witness_octic_dim", as_int(last->octic_dim));
      cert.add("witness_sum_dim", as_int(last->sum_dim));
      cert.add("witness_orthogonal", last->orthogonal ? 1 : 0);
    }
    cert.witness = last;
    report = std::move(rep);
    if (last && last->passed()) {
      cert.verdict = VerdictKind::NotIdentifiable;
      return cert;
    }
    cert.verdict = VerdictKind::Degenerate;
    cert.reason = "system rank below 12 but no kernel vector passed witness verification";
    return cert;
  } catch (const Error& e) {
    cert.verdict = e.code() == ErrorCode::PreconditionFailed ? VerdictKind::Inconclusive : VerdictKind::Degenerate;
    cert.reason = e.what();
    return cert;
  }
}

}  // namespace waring::octic14
