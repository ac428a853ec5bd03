#include "waring/pointset.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>
#include <utility>

#include "waring/errors.hpp"
#include "waring/graded_poly.hpp"

namespace waring {

bool projectively_equal(const PrimeContext& ctx, std::span<const Residue> a, std::span<const Residue> b) noexcept {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (ctx.mul(a[i], b[j]) != ctx.mul(a[j], b[i])) return false;
  return true;
}

PointSet::PointSet(const PrimeContext& ctx, std::size_t n, std::vector<Point> points)
    : ctx_(ctx), n_(n), points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto& p = points_[i];
    if (p.size() != n_ + 1) {
      throw Error(ErrorCode::DimensionMismatch,
                  "point " + std::to_string(i) + " has " + std::to_string(p.size()) + " coordinates, expected " +
                      std::to_string(n_ + 1));
    }
    for (auto& c : p) c %= ctx_.prime();
    if (std::all_of(p.begin(), p.end(), [](Residue c) { return c == 0; }))
      throw Error(ErrorCode::ZeroPoint, "point " + std::to_string(i) + " is the zero tuple");
    for (std::size_t j = 0; j < i; ++j)
      if (projectively_equal(ctx_, points_[j], p))
        throw Error(ErrorCode::DuplicatePoint,
                    "points " + std::to_string(j) + " and " + std::to_string(i) + " are projectively equal");
  }
}

PointSet PointSet::from_integers(const PrimeContext& ctx, std::size_t n,
                                 const std::vector<std::vector<std::int64_t>>& coords) {
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (const auto& c : coords) {
    Point p;
    p.reserve(c.size());
    for (auto v : c) p.push_back(ctx.reduce(v));
    pts.push_back(std::move(p));
  }
  return PointSet(ctx, n, std::move(pts));
}

bool PointSet::contains(std::span<const Residue> p) const noexcept {
  return std::any_of(points_.begin(), points_.end(), [&](const Point& q) { return projectively_equal(ctx_, q, p); });
}

PointSet PointSet::subset(std::span<const std::size_t> idx) const {
  std::vector<Point> pts;
  pts.reserve(idx.size());
  for (auto i : idx) pts.push_back(points_.at(i));
  return PointSet(ctx_, n_, std::move(pts));
}

PointSet PointSet::without(std::size_t i) const {
  std::vector<Point> pts = points_;
  pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
  return PointSet(ctx_, n_, std::move(pts));
}

PointSet PointSet::united(const PointSet& other) const {
  if (other.n_ != n_ || !(other.ctx_ == ctx_)) throw Error(ErrorCode::DimensionMismatch, "union of incompatible sets");
  std::vector<Point> pts = points_;
  for (const auto& q : other.points_)
    if (!contains(q)) pts.push_back(q);
  return PointSet(ctx_, n_, std::move(pts));
}

std::size_t PointSet::common_points(const PointSet& other) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(other.points_.begin(), other.points_.end(), [&](const Point& q) { return contains(q); }));
}

// ---------------------------------------------------------------------------

DenseMatrix evaluation_matrix(const PointSet& z, std::size_t d) {
  const auto basis = monomial_basis(z.n(), d);
  DenseMatrix m(z.context(), z.size(), basis->size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    Vector v = veronese_vector(z.context(), z[i], d);
    std::copy(v.begin(), v.end(), m.row(i).begin());
  }
  return m;
}

std::size_t hilbert_function(const PointSet& z, std::size_t d) { return rank(evaluation_matrix(z, d)); }

HilbertProfile hilbert_profile(const PointSet& z, std::size_t j_max) {
  HilbertProfile hp;
  hp.length = z.size();
  std::size_t prev = 0;
  for (std::size_t j = 0; j <= j_max; ++j) {
    // once h reaches l(Z) it stays there
    std::size_t h = prev == z.size() && j > 0 ? prev : hilbert_function(z, j);
    hp.values.push_back(h);
    hp.differences.push_back(h - prev);
    prev = h;
  }
  return hp;
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Returns the number of subsets examined; `all_independent` reports the
// outcome. The count is the sequential one: every subset up to and
// including the first dependent one in lexicographic order.
std::size_t sweep_level(const DenseMatrix& ev, std::size_t k, unsigned jobs, bool& all_independent) {
  const std::size_t n = ev.rows();
  const std::size_t total = static_cast<std::size_t>(binomial(n, k));
  std::atomic<std::size_t> first_bad{std::numeric_limits<std::size_t>::max()};

  auto worker = [&](unsigned tid) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    std::size_t index = 0;
    do {
      if (index >= first_bad.load(std::memory_order_relaxed)) return;
      if (index % jobs == tid && rank(ev.select_rows(c)) < k) {
        std::size_t cur = first_bad.load();
        while (index < cur && !first_bad.compare_exchange_weak(cur, index)) {
        }
        return;
      }
      ++index;
    } while (next_combination(c, n));
  };

  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  const std::size_t bad = first_bad.load();
  all_independent = bad == std::numeric_limits<std::size_t>::max();
  return all_independent ? total : bad + 1;
}

}  // namespace

KruskalResult kruskal_rank(const PointSet& z, std::size_t d, unsigned jobs) {
  KruskalResult res;
  if (z.size() == 0) return res;
  const DenseMatrix ev = evaluation_matrix(z, d);
  const std::size_t top = std::min<std::size_t>(ev.cols(), z.size());
  if (jobs == 0) jobs = 1;
  for (std::size_t k = top; k >= 1; --k) {
    bool ok = false;
    res.subsets_examined += sweep_level(ev, k, jobs, ok);
    if (ok) {
      res.k = k;
      return res;
    }
  }
  return res;
}

bool cb_check(const PointSet& z, std::size_t d) {
  const std::size_t h = hilbert_function(z, d);
  for (std::size_t i = 0; i < z.size(); ++i)
    if (hilbert_function(z.without(i), d) != h) return false;
  return true;
}

std::size_t h1_defect(const PointSet& z, std::size_t d) { return z.size() - hilbert_function(z, d); }

std::int64_t span_intersection_dim(const PointSet& a, const PointSet& b, std::size_t d) {
  const auto ha = static_cast<std::int64_t>(hilbert_function(a, d));
  const auto hb = static_cast<std::int64_t>(hilbert_function(b, d));
  const auto hab = static_cast<std::int64_t>(hilbert_function(a.united(b), d));
  return (ha - 1) + (hb - 1) - (hab - 1);
}

std::int64_t span_intersection_formula(const PointSet& a, const PointSet& b, std::size_t d) {
  return static_cast<std::int64_t>(a.common_points(b)) - 1 + static_cast<std::int64_t>(h1_defect(a.united(b), d));
}

}  // namespace waring
