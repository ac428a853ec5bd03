#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "waring/field.hpp"

namespace waring {

using Vector = std::vector<Residue>;

/// Row-major dense matrix over Z_p.
class DenseMatrix {
 public:
  DenseMatrix(const PrimeContext& ctx, std::size_t rows, std::size_t cols);

  static DenseMatrix identity(const PrimeContext& ctx, std::size_t n);
  static DenseMatrix from_rows(const PrimeContext& ctx, std::size_t cols, const std::vector<Vector>& rows);
  static DenseMatrix from_columns(const PrimeContext& ctx, std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeContext& context() const noexcept { return ctx_; }

  Residue operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Residue& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

  std::span<const Residue> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<Residue> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  Vector column(std::size_t j) const;

  DenseMatrix transpose() const;
  Vector operator*(std::span<const Residue> v) const;
  DenseMatrix operator*(const DenseMatrix& rhs) const;

  DenseMatrix select_rows(std::span<const std::size_t> idx) const;
  DenseMatrix select_columns(std::span<const std::size_t> idx) const;
  /// [this | rhs]
  DenseMatrix hconcat(const DenseMatrix& rhs) const;
  /// [this ; rhs]
  DenseMatrix vconcat(const DenseMatrix& rhs) const;

  bool is_zero() const noexcept;
  const std::vector<Residue>& data() const noexcept { return data_; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) noexcept {
    return a.ctx_ == b.ctx_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeContext ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

struct RowEchelon {
  DenseMatrix reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; pivot = first nonzero entry at or below the
/// current row.
RowEchelon rref(const DenseMatrix& m);

std::size_t rank(const DenseMatrix& m);

/// Basis of the right null space. One vector per free column, in increasing
/// free-column order; the free coordinate is 1, the other free coordinates 0.
std::vector<Vector> kernel_basis(const DenseMatrix& m);

struct Solution {
  Vector x;                   // particular solution (free coordinates set to 0)
  std::size_t null_dim = 0;   // dimension of the solution space of m*x = 0
};

/// Solves m*x = b. Throws Error(InconsistentSystem) when b is not in the
/// column space, Error(DimensionMismatch) when b.size() != m.rows().
Solution solve(const DenseMatrix& m, std::span<const Residue> b);

/// Same as solve() but reports inconsistency as nullopt.
std::optional<Solution> try_solve(const DenseMatrix& m, std::span<const Residue> b);

/// Dimension of the span of the given vectors (all of length `len`).
std::size_t span_dimension(const PrimeContext& ctx, std::size_t len, const std::vector<Vector>& vectors);

}  // namespace waring
