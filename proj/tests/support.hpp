#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "waring/certificate.hpp"
#include "waring/graded_poly.hpp"
#include "waring/io.hpp"
#include "waring/pointset.hpp"

namespace support {

using namespace waring;

inline std::string fixture(const std::string& name) { return std::string(WARING_FIXTURE_DIR) + "/" + name; }

inline Instance load_fixture(const std::string& name) { return io::load_instance(fixture(name)).to_instance(); }

inline const std::vector<std::vector<std::int64_t>>& optics_points() {
  static const std::vector<std::vector<std::int64_t>> pts = {
      {42, -4, 17},  {-50, -36, -28}, {39, -16, 37},  {9, -6, -22},   {-15, -32, -19}, {-22, 31, 45}, {50, -32, -8},
      {45, -38, -31}, {-29, 31, -9},  {-39, 24, 32}, {30, -42, -4}, {19, -50, 4},    {-38, -41, -2}, {2, 15, 24}};
  return pts;
}

inline const std::vector<std::int64_t>& t2_lambda() {
  static const std::vector<std::int64_t> l = {-6395, -1019, 2227, 13599, -2136, -1329, 5500,
                                              -4082, 7252,  -2038, 13457, 8366,  8750,  -10807};
  return l;
}

inline PointSet optics_set(const PrimeContext& ctx = PrimeContext()) {
  return PointSet::from_integers(ctx, 2, optics_points());
}

inline Instance optics_instance(bool t2) {
  PrimeContext ctx;
  Vector l(14, 1);
  if (t2)
    for (std::size_t i = 0; i < 14; ++i) l[i] = ctx.reduce(t2_lambda()[i]);
  return Instance(optics_set(ctx), 8, l);
}

// ---------------------------------------------------------------------------
// Independent oracles. Written against plain int64 arithmetic rather than the
// library's PrimeContext / DenseMatrix so a shared bug cannot hide.

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline std::int64_t oracle_mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t oracle_inv(std::int64_t a, std::int64_t p) {
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = p, nr = oracle_mod(a, p);
  while (nr) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return oracle_mod(t, p);
}

/// Column-by-column elimination, pivot = last nonzero entry in the column.
inline std::size_t oracle_rank(IntMatrix m, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = rows; r-- > rank;)
      if (oracle_mod(m[r][c], p)) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t inv = oracle_inv(m[rank][c], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::int64_t f = oracle_mod(m[r][c] * inv, p);
      if (!f) continue;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = oracle_mod(m[r][k] - f * oracle_mod(m[rank][k], p), p);
    }
    ++rank;
  }
  return rank;
}

/// Leibniz determinant (permutation sum); for k <= 7.
inline std::int64_t oracle_det(const IntMatrix& m, std::int64_t p) {
  const std::size_t k = m.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    std::int64_t term = 1;
    for (std::size_t i = 0; i < k; ++i) term = oracle_mod(term * oracle_mod(m[i][perm[i]], p), p);
    total = oracle_mod(total + (inversions % 2 ? -term : term), p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline IntMatrix to_int(const DenseMatrix& m) {
  IntMatrix out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

/// Monomial values computed by direct exponentiation, enumerating exponent
/// tuples by nested loops rather than through MonomialBasis.
inline std::vector<std::int64_t> oracle_veronese(const std::vector<std::int64_t>& pt, std::size_t d, std::int64_t p) {
  auto pw = [&](std::int64_t b, std::size_t e) {
    std::int64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r = oracle_mod(r * oracle_mod(b, p), p);
    return r;
  };
  std::vector<std::int64_t> out;
  if (pt.size() == 3) {
    for (std::size_t a = d + 1; a-- > 0;)
      for (std::size_t b = d - a + 1; b-- > 0;) out.push_back(oracle_mod(pw(pt[0], a) * pw(pt[1], b), p) * pw(pt[2], d - a - b) % p);
  } else {
    for (std::size_t a = d + 1; a-- > 0;)
      for (std::size_t b = d - a + 1; b-- > 0;)
        for (std::size_t c = d - a - b + 1; c-- > 0;)
          out.push_back(oracle_mod(oracle_mod(pw(pt[0], a) * pw(pt[1], b), p) * pw(pt[2], c), p) * pw(pt[3], d - a - b - c) % p);
  }
  return out;
}

inline std::size_t oracle_hilbert(const PointSet& z, std::size_t d) {
  const std::int64_t p = z.context().prime();
  IntMatrix m;
  for (const auto& pt : z.points()) m.push_back(oracle_veronese({pt.begin(), pt.end()}, d, p));
  return oracle_rank(m, p);
}

/// Kruskal rank by exhaustive subset enumeration (ascending); for small sets.
inline std::size_t oracle_kruskal(const PointSet& z, std::size_t d) {
  const std::int64_t p = z.context().prime();
  const std::size_t l = z.size();
  IntMatrix rows;
  for (const auto& pt : z.points()) rows.push_back(oracle_veronese({pt.begin(), pt.end()}, d, p));
  std::size_t best = l;
  for (std::uint32_t mask = 1; mask < (1u << l); ++mask) {
    IntMatrix sub;
    for (std::size_t i = 0; i < l; ++i)
      if (mask >> i & 1) sub.push_back(rows[i]);
    if (oracle_rank(sub, p) < sub.size()) best = std::min(best, sub.size() - 1);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Random point configurations.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) { return lo + static_cast<std::int64_t>(below(hi - lo + 1)); }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

inline Point random_point(const PrimeContext& ctx, std::size_t n, Rng& rng) {
  for (;;) {
    Point p(n + 1);
    for (auto& c : p) c = static_cast<Residue>(rng.below(ctx.prime()));
    if (std::any_of(p.begin(), p.end(), [](Residue c) { return c != 0; })) return p;
  }
}

/// Point u + t*v on the line through u and v.
inline Point point_on_line(const PrimeContext& ctx, const Point& u, const Point& v, Residue t) {
  Point out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = ctx.add(u[i], ctx.mul(t, v[i]));
  return out;
}

/// Image of (s^2, s*t, t^2) under a random 3x3 map: a point of a random conic.
struct RandomConic {
  std::vector<Point> rows;  // 3 rows, each of length 3
  Point at(const PrimeContext& ctx, Residue s, Residue t) const {
    const Residue m[3] = {ctx.mul(s, s), ctx.mul(s, t), ctx.mul(t, t)};
    Point out(3, 0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k) out[i] = ctx.add(out[i], ctx.mul(rows[i][k], m[k]));
    return out;
  }
};

inline RandomConic random_conic(const PrimeContext& ctx, Rng& rng) {
  for (;;) {
    RandomConic c{{random_point(ctx, 2, rng), random_point(ctx, 2, rng), random_point(ctx, 2, rng)}};
    DenseMatrix m = DenseMatrix::from_rows(ctx, 3, c.rows);
    if (rank(m) == 3) return c;
  }
}

/// Appends `pt` unless it is projectively equal to a point already present.
inline bool push_distinct(const PrimeContext& ctx, std::vector<Point>& pts, Point pt) {
  if (std::all_of(pt.begin(), pt.end(), [](Residue c) { return c == 0; })) return false;
  for (const auto& q : pts)
    if (projectively_equal(ctx, q, pt)) return false;
  pts.push_back(std::move(pt));
  return true;
}

/// Random configuration of `count` points of P^n mixing general points with
/// clusters on random lines and (for n = 2) conics.
inline PointSet random_structured_set(const PrimeContext& ctx, std::size_t n, std::size_t count, Rng& rng) {
  std::vector<Point> pts;
  while (pts.size() < count) {
    const std::size_t left = count - pts.size();
    const std::uint64_t kind = rng.below(3);
    if (kind == 0 || left < 3) {
      push_distinct(ctx, pts, random_point(ctx, n, rng));
    } else if (kind == 1) {
      const Point u = random_point(ctx, n, rng), v = random_point(ctx, n, rng);
      const std::size_t k = 3 + rng.below(std::min<std::size_t>(left, 6) - 2);
      for (std::size_t i = 0; i < k && pts.size() < count; ++i)
        push_distinct(ctx, pts, point_on_line(ctx, u, v, static_cast<Residue>(rng.below(ctx.prime()))));
    } else if (n == 2) {
      const RandomConic c = random_conic(ctx, rng);
      const std::size_t k = 3 + rng.below(std::min<std::size_t>(left, 8) - 2);
      for (std::size_t i = 0; i < k && pts.size() < count; ++i)
        push_distinct(ctx, pts, c.at(ctx, static_cast<Residue>(rng.below(ctx.prime())), 1));
    } else {
      push_distinct(ctx, pts, random_point(ctx, n, rng));
    }
  }
  return PointSet(ctx, n, std::move(pts));
}

inline PointSet random_general_set(const PrimeContext& ctx, std::size_t n, std::size_t count, Rng& rng) {
  std::vector<Point> pts;
  while (pts.size() < count) push_distinct(ctx, pts, random_point(ctx, n, rng));
  return PointSet(ctx, n, std::move(pts));
}

inline Vector random_nonzero(const PrimeContext& ctx, std::size_t len, Rng& rng) {
  Vector v(len);
  for (auto& x : v) x = static_cast<Residue>(1 + rng.below(ctx.prime() - 1));
  return v;
}

}  // namespace support
