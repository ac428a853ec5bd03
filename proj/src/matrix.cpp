#include "waring/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "waring/errors.hpp"

namespace waring {

DenseMatrix::DenseMatrix(const PrimeContext& ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

DenseMatrix DenseMatrix::identity(const PrimeContext& ctx, std::size_t n) {
  DenseMatrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::from_rows(const PrimeContext& ctx, std::size_t cols, const std::vector<Vector>& rows) {
  DenseMatrix m(ctx, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j] % ctx.prime();
  }
  return m;
}

DenseMatrix DenseMatrix::from_columns(const PrimeContext& ctx, std::size_t rows, const std::vector<Vector>& cols) {
  DenseMatrix m(ctx, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i] % ctx.prime();
  }
  return m;
}

Vector DenseMatrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector DenseMatrix::operator*(std::span<const Residue> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  Vector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Residue acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = ctx_.add(acc, ctx_.mul((*this)(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  DenseMatrix out(ctx_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Residue a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = ctx_.add(out(i, j), ctx_.mul(a, rhs(k, j)));
    }
  return out;
}

DenseMatrix DenseMatrix::select_rows(std::span<const std::size_t> idx) const {
  DenseMatrix out(ctx_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
  return out;
}

DenseMatrix DenseMatrix::select_columns(std::span<const std::size_t> idx) const {
  DenseMatrix out(ctx_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
  return out;
}

DenseMatrix DenseMatrix::hconcat(const DenseMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "hconcat row mismatch");
  DenseMatrix out(ctx_, rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

DenseMatrix DenseMatrix::vconcat(const DenseMatrix& rhs) const {
  if (cols_ != rhs.cols_) throw Error(ErrorCode::DimensionMismatch, "vconcat column mismatch");
  DenseMatrix out(ctx_, rows_ + rhs.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(rhs.data_.begin(), rhs.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

bool DenseMatrix::is_zero() const noexcept {
  for (Residue r : data_)
    if (r != 0) return false;
  return true;
}

namespace {

// Forward elimination to row echelon form in place; with `reduce` set the
// pivot rows are normalized and cleared above as well.
std::vector<std::size_t> eliminate(DenseMatrix& m, bool reduce) {
  const PrimeContext& ctx = m.context();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t k = r;
    while (k < m.rows() && m(k, c) == 0) ++k;
    if (k == m.rows()) continue;
    if (k != r) {
      auto a = m.row(k);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(r);
    const Residue inv = ctx.inv(prow[c]);
    for (std::size_t j = c; j < m.cols(); ++j) prow[j] = ctx.mul(prow[j], inv);
    const std::size_t first = reduce ? 0 : r + 1;
    for (std::size_t i = first; i < m.rows(); ++i) {
      if (i == r) continue;
      auto row = m.row(i);
      const Residue f = row[c];
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) row[j] = ctx.sub_mul(row[j], f, prow[j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RowEchelon rref(const DenseMatrix& m) {
  DenseMatrix work = m;
  auto pivots = eliminate(work, true);
  return {std::move(work), std::move(pivots)};
}

std::size_t rank(const DenseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // eliminate the shorter side
  DenseMatrix work = m.rows() > m.cols() ? m.transpose() : m;
  return eliminate(work, false).size();
}

std::vector<Vector> kernel_basis(const DenseMatrix& m) {
  const PrimeContext& ctx = m.context();
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = ctx.neg(e.reduced(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Solution> try_solve(const DenseMatrix& m, std::span<const Residue> b) {
  if (b.size() != m.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "right-hand side has " + std::to_string(b.size()) + " entries, expected " + std::to_string(m.rows()));
  }
  DenseMatrix col(m.context(), m.rows(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) col(i, 0) = b[i] % m.context().prime();
  RowEchelon e = rref(m.hconcat(col));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Solution s;
  s.x.assign(m.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.x[e.pivots[i]] = e.reduced(i, m.cols());
  s.null_dim = m.cols() - e.pivots.size();
  return s;
}

Solution solve(const DenseMatrix& m, std::span<const Residue> b) {
  auto s = try_solve(m, b);
  if (!s) throw Error(ErrorCode::InconsistentSystem, "right-hand side is outside the column space");
  return *std::move(s);
}

std::size_t span_dimension(const PrimeContext& ctx, std::size_t len, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(DenseMatrix::from_rows(ctx, len, vectors));
}

}  // namespace waring
