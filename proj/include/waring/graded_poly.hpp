#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "waring/field.hpp"
#include "waring/matrix.hpp"

namespace waring {

using Exponent = std::uint16_t;

/// Degree-d monomials in x_0..x_n, graded-lex with x_0 > x_1 > ... > x_n:
/// exponent tuples in strictly decreasing lexicographic order.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, std::size_t degree);

  std::size_t n() const noexcept { return n_; }
  std::size_t vars() const noexcept { return n_ + 1; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return size_; }

  std::span<const Exponent> exponent(std::size_t i) const noexcept {
    return {exps_.data() + i * vars(), vars()};
  }
  /// Position of an exponent tuple of total degree degree().
  std::size_t index_of(std::span<const Exponent> e) const;

 private:
  std::size_t n_;
  std::size_t degree_;
  std::size_t size_;
  std::vector<Exponent> exps_;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Shared, immutable basis for (n, d). Thread-safe.
std::shared_ptr<const MonomialBasis> monomial_basis(std::size_t n, std::size_t degree);

/// Homogeneous polynomial as a coefficient vector in the fixed monomial basis.
class GradedPoly {
 public:
  GradedPoly(const PrimeContext& ctx, std::size_t n, std::size_t degree);
  GradedPoly(const PrimeContext& ctx, std::size_t n, std::size_t degree, Vector coeffs);

  static GradedPoly variable(const PrimeContext& ctx, std::size_t n, std::size_t i);
  static GradedPoly monomial(const PrimeContext& ctx, std::size_t n, std::span<const Exponent> e);

  const PrimeContext& context() const noexcept { return ctx_; }
  const MonomialBasis& basis() const noexcept { return *basis_; }
  std::size_t n() const noexcept { return basis_->n(); }
  std::size_t degree() const noexcept { return basis_->degree(); }
  const Vector& coeffs() const noexcept { return coeffs_; }
  Residue coeff(std::size_t i) const noexcept { return coeffs_[i]; }
  bool is_zero() const noexcept;

  Residue evaluate(std::span<const Residue> point) const;

  GradedPoly operator+(const GradedPoly& rhs) const;
  GradedPoly operator-(const GradedPoly& rhs) const;
  GradedPoly operator-() const;
  GradedPoly operator*(const GradedPoly& rhs) const;
  GradedPoly scaled(Residue c) const;

  /// Partial derivative coefficient of a linear form: d/dx_i.
  Residue linear_coefficient(std::size_t i) const;

  friend bool operator==(const GradedPoly& a, const GradedPoly& b) noexcept {
    return a.ctx_ == b.ctx_ && a.n() == b.n() && a.degree() == b.degree() && a.coeffs_ == b.coeffs_;
  }

 private:
  PrimeContext ctx_;
  std::shared_ptr<const MonomialBasis> basis_;
  Vector coeffs_;
};

/// Homogeneous polynomial whose coefficients are linear forms (no constant
/// term) in a fixed number of parameters.
class ParamPoly {
 public:
  ParamPoly(const PrimeContext& ctx, std::size_t n, std::size_t degree, std::size_t params);

  /// Builds sum_t a_t * parts[t].
  static ParamPoly from_parts(const std::vector<GradedPoly>& parts);

  const PrimeContext& context() const noexcept { return ctx_; }
  std::size_t n() const noexcept { return basis_->n(); }
  std::size_t degree() const noexcept { return basis_->degree(); }
  std::size_t params() const noexcept { return params_; }
  const MonomialBasis& basis() const noexcept { return *basis_; }

  /// Coefficient of parameter t at monomial i.
  Residue operator()(std::size_t monomial, std::size_t t) const noexcept { return coeffs_[monomial * params_ + t]; }
  Residue& operator()(std::size_t monomial, std::size_t t) noexcept { return coeffs_[monomial * params_ + t]; }

  /// Polynomial multiplying parameter t.
  GradedPoly part(std::size_t t) const;
  GradedPoly specialize(std::span<const Residue> a) const;
  /// Numeric multiplier: (f * this)(a) = f * this(a).
  ParamPoly multiplied_by(const GradedPoly& f) const;

 private:
  PrimeContext ctx_;
  std::shared_ptr<const MonomialBasis> basis_;
  std::size_t params_;
  Vector coeffs_;
};

/// Values of all degree-d monomials at `point`, in basis order. No
/// multinomial weights: dot(F.coeffs(), veronese_vector(P, deg F)) == F(P).
/// Throws Error(ZeroPoint) for the zero tuple.
Vector veronese_vector(const PrimeContext& ctx, std::span<const Residue> point, std::size_t degree);

/// Matrix of g -> f*g from S^{d-e} to S^d in the fixed bases.
/// Throws Error(DegreeMismatch) when d < deg f.
DenseMatrix mult_map(const GradedPoly& f, std::size_t d);

/// Determinant of a square array of polynomials by cofactor expansion along
/// the first row. Zero entries are degree-agnostic; nonzero terms of
/// different degrees raise Error(InhomogeneousDeterminant).
GradedPoly det_poly(const std::vector<std::vector<GradedPoly>>& entries);

}  // namespace waring
