#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "waring/field.hpp"
#include "waring/matrix.hpp"

namespace waring {

using Point = std::vector<Residue>;

/// Two coordinate tuples name the same projective point iff every 2x2 minor
/// of the 2 x (n+1) matrix they form vanishes.
bool projectively_equal(const PrimeContext& ctx, std::span<const Residue> a, std::span<const Residue> b) noexcept;

/// Finite ordered set of distinct points of P^n with fixed representatives.
class PointSet {
 public:
  /// Throws Error(ZeroPoint), Error(DuplicatePoint) or Error(DimensionMismatch).
  PointSet(const PrimeContext& ctx, std::size_t n, std::vector<Point> points);
  /// Signed integer coordinates, reduced modulo p.
  static PointSet from_integers(const PrimeContext& ctx, std::size_t n,
                                const std::vector<std::vector<std::int64_t>>& coords);

  const PrimeContext& context() const noexcept { return ctx_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const noexcept { return points_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }

  bool contains(std::span<const Residue> p) const noexcept;
  PointSet subset(std::span<const std::size_t> idx) const;
  PointSet without(std::size_t i) const;
  /// Set union; points of `other` already present are skipped.
  PointSet united(const PointSet& other) const;
  std::size_t common_points(const PointSet& other) const noexcept;

 private:
  PrimeContext ctx_;
  std::size_t n_;
  std::vector<Point> points_;
};

struct HilbertProfile {
  std::vector<std::size_t> values;       // h_Z(0..j_max)
  std::vector<std::size_t> differences;  // Dh_Z(0..j_max), h_Z(-1) = 0
  std::size_t length = 0;                // number of points
};

/// Rows are veronese_vector(P_i, d); the kernel is the degree-d piece of the
/// ideal of Z.
DenseMatrix evaluation_matrix(const PointSet& z, std::size_t d);

std::size_t hilbert_function(const PointSet& z, std::size_t d);
HilbertProfile hilbert_profile(const PointSet& z, std::size_t j_max);

struct KruskalResult {
  std::size_t k = 0;
  std::size_t subsets_examined = 0;  // summed over every level tried
};

/// d-th Kruskal rank: the largest k such that the Veronese images of every
/// k-subset are independent. Searches k downward from min(dim S^d, size);
/// `jobs` > 1 splits each level's subset sweep across threads.
KruskalResult kruskal_rank(const PointSet& z, std::size_t d, unsigned jobs = 1);

/// CB(d): removing any single point keeps h(d) unchanged.
bool cb_check(const PointSet& z, std::size_t d);

/// l(Z) - h_Z(d).
std::size_t h1_defect(const PointSet& z, std::size_t d);

/// Projective dimension of <v_d(A)> ∩ <v_d(B)> computed from the three
/// Hilbert function values; -1 means the spans meet only in 0.
std::int64_t span_intersection_dim(const PointSet& a, const PointSet& b, std::size_t d);

/// l(A ∩ B) - 1 + h^1_{A∪B}(d). Agrees with span_intersection_dim whenever
/// v_d(A) and v_d(B) are each linearly independent.
std::int64_t span_intersection_formula(const PointSet& a, const PointSet& b, std::size_t d);

}  // namespace waring
