#include <doctest.h>

#include "properties.hpp"
#include "support.hpp"
#include "waring/errors.hpp"
#include "waring/pointset.hpp"

using namespace waring;
using support::Rng;

namespace {

ErrorCode construction_error(const PrimeContext& ctx, std::size_t n, std::vector<Point> pts) {
  try {
    PointSet(ctx, n, std::move(pts));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;  // sentinel: nothing thrown
}

PointSet coordinate_points(const PrimeContext& ctx) { return PointSet(ctx, 2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

}  // namespace

TEST_CASE("point set validation") {
  PrimeContext ctx;
  CHECK(construction_error(ctx, 2, {{1, 2, 3}, {0, 0, 0}}) == ErrorCode::ZeroPoint);
  CHECK(construction_error(ctx, 2, {{1, 2, 3}, {2, 4, 6}}) == ErrorCode::DuplicatePoint);
  CHECK(construction_error(ctx, 2, {{1, 2, 3}, {ctx.reduce(-1), ctx.reduce(-2), ctx.reduce(-3)}}) ==
        ErrorCode::DuplicatePoint);
  CHECK(construction_error(ctx, 2, {{1, 2}}) == ErrorCode::DimensionMismatch);
  CHECK(projectively_equal(ctx, Vector{0, 3, 6}, Vector{0, 1, 2}));
  CHECK_FALSE(projectively_equal(ctx, Vector{1, 0, 0}, Vector{1, 1, 0}));

  const PointSet a = support::optics_set(ctx);
  CHECK(a.contains(Vector{84, ctx.reduce(-8), 34}));
  CHECK(a.without(0).size() == 13);
  CHECK_FALSE(a.without(0).contains(a[0]));
  const std::vector<std::size_t> idx = {0, 1, 2};
  const PointSet s = a.subset(idx);
  CHECK(s.common_points(a) == 3);
  CHECK(a.united(s).size() == 14);
  CHECK(coordinate_points(ctx).united(s).size() == 6);
}

TEST_CASE("evaluation matrices") {
  PrimeContext ctx;
  CHECK(evaluation_matrix(coordinate_points(ctx), 1) == DenseMatrix::identity(ctx, 3));
  const PointSet a = support::optics_set(ctx);
  const DenseMatrix e3 = evaluation_matrix(a, 3);
  CHECK(e3.rows() == 14);
  CHECK(e3.cols() == 10);
  CHECK(rank(e3) == 10);
  CHECK(hilbert_function(a, 4) == 14);
}

TEST_CASE("hilbert tables of the six-point examples") {
  struct Case {
    const char* file;
    std::vector<std::size_t> h, dh;
  };
  const std::vector<Case> cases = {{"general6.json", {1, 3, 6, 6, 6}, {1, 2, 3, 0, 0}},
                                   {"conic6.json", {1, 3, 5, 6, 6}, {1, 2, 2, 1, 0}},
                                   {"five_aligned6.json", {1, 3, 4, 5, 6, 6}, {1, 2, 1, 1, 1, 0}}};
  for (const auto& c : cases) {
    CAPTURE(c.file);
    const Instance inst = support::load_fixture(c.file);
    const HilbertProfile prof = hilbert_profile(inst.points, c.h.size() - 1);
    CHECK(prof.values == c.h);
    CHECK(prof.differences == c.dh);
    CHECK(prof.length == 6);
  }
}

TEST_CASE("Cayley-Bacharach verdicts of the six-point examples") {
  const PointSet general = support::load_fixture("general6.json").points;
  const PointSet conic = support::load_fixture("conic6.json").points;
  const PointSet aligned = support::load_fixture("five_aligned6.json").points;
  CHECK(cb_check(general, 1));
  CHECK_FALSE(cb_check(general, 2));
  CHECK(cb_check(conic, 1));
  CHECK(cb_check(conic, 2));
  CHECK_FALSE(cb_check(aligned, 1));
}

TEST_CASE("Kruskal rank examples") {
  PrimeContext ctx;
  CHECK(kruskal_rank(coordinate_points(ctx), 1).k == 3);
  const KruskalResult k3 = kruskal_rank(support::optics_set(ctx), 3);
  CHECK(k3.k == 10);
  CHECK(k3.subsets_examined == 1001);
  const PointSet collinear(ctx, 2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  CHECK(kruskal_rank(collinear, 1).k == 2);
  CHECK(support::oracle_kruskal(collinear, 1) == 2);
}

TEST_CASE("Kruskal rank of the fourteen points agrees with exhaustive ten-subset ranks") {
  PrimeContext ctx;
  const PointSet a = support::optics_set(ctx);
  support::IntMatrix rows;
  for (const auto& p : a.points()) rows.push_back(support::oracle_veronese({p.begin(), p.end()}, 3, 31991));
  std::size_t full_rank_subsets = 0;
  for (std::uint32_t mask = 0; mask < (1u << 14); ++mask) {
    if (__builtin_popcount(mask) != 10) continue;
    support::IntMatrix sub;
    for (std::size_t i = 0; i < 14; ++i)
      if (mask >> i & 1) sub.push_back(rows[i]);
    full_rank_subsets += support::oracle_rank(sub, 31991) == 10;
  }
  CHECK(full_rank_subsets == 1001);
}

TEST_CASE("Kruskal rank agrees with brute force and is independent of the job count") {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const PrimeContext ctx(rng.below(2) ? 31991 : 7);
    const std::size_t n = 2, l = 3 + rng.below(7), d = 1 + rng.below(2);
    const PointSet z = support::random_structured_set(ctx, n, l, rng);
    const KruskalResult seq = kruskal_rank(z, d, 1);
    const KruskalResult par = kruskal_rank(z, d, 4);
    CAPTURE(l);
    CAPTURE(d);
    CHECK(seq.k == support::oracle_kruskal(z, d));
    CHECK(par.k == seq.k);
    CHECK(par.subsets_examined == seq.subsets_examined);
  }
}

TEST_CASE("Hilbert function agrees with an independent rank computation") {
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    const PrimeContext ctx(31991);
    const std::size_t n = 2 + rng.below(2);
    const PointSet z = support::random_structured_set(ctx, n, 1 + rng.below(15), rng);
    const std::size_t d = rng.below(6);
    CHECK(hilbert_function(z, d) == support::oracle_hilbert(z, d));
  }
}

TEST_CASE("h1 defect and span intersections") {
  PrimeContext ctx;
  const PointSet conic = support::load_fixture("conic6.json").points;
  CHECK(h1_defect(conic, 2) == 1);
  CHECK(h1_defect(conic, 5) == 0);
  Rng rng(13);
  const PointSet a = support::random_general_set(ctx, 2, 5, rng);
  CHECK(span_intersection_dim(a, a, 3) == std::int64_t(hilbert_function(a, 3)) - 1);
  const PointSet b = support::random_general_set(ctx, 2, 4, rng);
  CHECK(hilbert_function(a.united(b), 3) == 9);
  CHECK(span_intersection_dim(a, b, 3) == -1);
  CHECK(span_intersection_formula(a, b, 3) == -1);
}

TEST_CASE("h1 decreases on proper subsets of Cayley-Bacharach sets") {
  const PointSet conic = support::load_fixture("conic6.json").points;
  Rng rng(14);
  REQUIRE(cb_check(conic, 2));
  for (int t = 0; t < 20; ++t) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < conic.size(); ++i)
      if (rng.below(3)) idx.push_back(i);
    if (idx.size() == conic.size()) idx.pop_back();
    CHECK(h1_defect(conic.subset(idx), 2) < h1_defect(conic, 2));
  }
}

TEST_CASE("Hilbert function properties on random configurations") {
  CHECK(props::hilbert_battery(15, 60) == "");
}

TEST_CASE("span intersection identity on random pairs") {
  std::size_t overlap = 0, defect = 0;
  CHECK(props::cap_battery(16, 40, &overlap, &defect) == "");
  CHECK(overlap > 0);
  CHECK(defect > 0);
}

TEST_CASE("partial-sum inequality for Cayley-Bacharach sets") {
  for (const char* f : {"conic6.json", "general6.json"}) {
    const PointSet z = support::load_fixture(f).points;
    for (std::size_t d = 1; d <= 3; ++d) {
      if (!cb_check(z, d)) continue;
      CHECK(props::cb_partial_sums(hilbert_profile(z, d + 1), d) == "");
    }
  }
}
