#include "waring/graded_poly.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "waring/errors.hpp"

namespace waring {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

MonomialBasis::MonomialBasis(std::size_t n, std::size_t degree)
    : n_(n), degree_(degree), size_(static_cast<std::size_t>(binomial(n + degree, n))) {
  exps_.reserve(size_ * vars());
  std::vector<Exponent> e(vars(), 0);
  // Lex-decreasing enumeration: x_0 takes its largest value first.
  auto rec = [&](auto&& self, std::size_t pos, std::size_t rem) -> void {
    if (pos == n_) {
      e[pos] = static_cast<Exponent>(rem);
      exps_.insert(exps_.end(), e.begin(), e.end());
      return;
    }
    for (std::size_t v = rem + 1; v-- > 0;) {
      e[pos] = static_cast<Exponent>(v);
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, degree);
}

std::size_t MonomialBasis::index_of(std::span<const Exponent> e) const {
  if (e.size() != vars()) throw Error(ErrorCode::DimensionMismatch, "exponent tuple has wrong length");
  std::size_t idx = 0;
  std::size_t rem = degree_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (e[i] > rem) throw Error(ErrorCode::DegreeMismatch, "exponent tuple exceeds basis degree");
    const std::size_t tail = n_ - i;  // variables after position i
    // tuples that agree before i and have a larger entry at i
    for (std::size_t v = e[i] + 1; v <= rem; ++v) idx += binomial(rem - v + tail - 1, tail - 1);
    rem -= e[i];
  }
  if (e[n_] != rem) throw Error(ErrorCode::DegreeMismatch, "exponent tuple has wrong total degree");
  return idx;
}

std::shared_ptr<const MonomialBasis> monomial_basis(std::size_t n, std::size_t degree) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, degree}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(n, degree);
  return slot;
}

// ---------------------------------------------------------------------------

GradedPoly::GradedPoly(const PrimeContext& ctx, std::size_t n, std::size_t degree)
    : ctx_(ctx), basis_(monomial_basis(n, degree)), coeffs_(basis_->size(), 0) {}

GradedPoly::GradedPoly(const PrimeContext& ctx, std::size_t n, std::size_t degree, Vector coeffs)
    : ctx_(ctx), basis_(monomial_basis(n, degree)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_->size()) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(basis_->size()) + " coefficients, got " +
                                                  std::to_string(coeffs_.size()));
  }
  for (auto& c : coeffs_) c %= ctx_.prime();
}

GradedPoly GradedPoly::variable(const PrimeContext& ctx, std::size_t n, std::size_t i) {
  std::vector<Exponent> e(n + 1, 0);
  e.at(i) = 1;
  return monomial(ctx, n, e);
}

GradedPoly GradedPoly::monomial(const PrimeContext& ctx, std::size_t n, std::span<const Exponent> e) {
  std::size_t d = 0;
  for (auto x : e) d += x;
  GradedPoly f(ctx, n, d);
  f.coeffs_[f.basis_->index_of(e)] = 1;
  return f;
}

bool GradedPoly::is_zero() const noexcept {
  for (auto c : coeffs_)
    if (c) return false;
  return true;
}

Residue GradedPoly::evaluate(std::span<const Residue> point) const {
  if (point.size() != basis_->vars()) throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
  // power tables per variable
  std::vector<Vector> pw(point.size(), Vector(degree() + 1, 1));
  for (std::size_t v = 0; v < point.size(); ++v)
    for (std::size_t k = 1; k <= degree(); ++k) pw[v][k] = ctx_.mul(pw[v][k - 1], point[v] % ctx_.prime());
  Residue acc = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Residue term = coeffs_[i];
    auto e = basis_->exponent(i);
    for (std::size_t v = 0; v < e.size(); ++v) term = ctx_.mul(term, pw[v][e[v]]);
    acc = ctx_.add(acc, term);
  }
  return acc;
}

GradedPoly GradedPoly::operator+(const GradedPoly& rhs) const {
  if (rhs.n() != n() || rhs.degree() != degree()) throw Error(ErrorCode::DegreeMismatch, "adding forms of different degree");
  GradedPoly out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = ctx_.add(coeffs_[i], rhs.coeffs_[i]);
  return out;
}

GradedPoly GradedPoly::operator-(const GradedPoly& rhs) const { return *this + (-rhs); }

GradedPoly GradedPoly::operator-() const {
  GradedPoly out = *this;
  for (auto& c : out.coeffs_) c = ctx_.neg(c);
  return out;
}

GradedPoly GradedPoly::scaled(Residue c) const {
  GradedPoly out = *this;
  for (auto& x : out.coeffs_) x = ctx_.mul(x, c);
  return out;
}

GradedPoly GradedPoly::operator*(const GradedPoly& rhs) const {
  if (rhs.n() != n()) throw Error(ErrorCode::DimensionMismatch, "multiplying forms in different rings");
  GradedPoly out(ctx_, n(), degree() + rhs.degree());
  std::vector<Exponent> e(basis_->vars());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    auto ei = basis_->exponent(i);
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      auto ej = rhs.basis_->exponent(j);
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<Exponent>(ei[v] + ej[v]);
      auto k = out.basis_->index_of(e);
      out.coeffs_[k] = ctx_.add(out.coeffs_[k], ctx_.mul(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  return out;
}

Residue GradedPoly::linear_coefficient(std::size_t i) const {
  if (degree() != 1) throw Error(ErrorCode::DegreeMismatch, "linear_coefficient needs a linear form");
  // basis of degree 1 is x_0, x_1, ..., x_n in that order
  return coeffs_.at(i);
}

// ---------------------------------------------------------------------------

ParamPoly::ParamPoly(const PrimeContext& ctx, std::size_t n, std::size_t degree, std::size_t params)
    : ctx_(ctx), basis_(monomial_basis(n, degree)), params_(params), coeffs_(basis_->size() * params, 0) {}

ParamPoly ParamPoly::from_parts(const std::vector<GradedPoly>& parts) {
  if (parts.empty()) throw Error(ErrorCode::DimensionMismatch, "no parameter parts");
  const auto& f0 = parts.front();
  ParamPoly out(f0.context(), f0.n(), f0.degree(), parts.size());
  for (std::size_t t = 0; t < parts.size(); ++t) {
    if (parts[t].degree() != f0.degree() || parts[t].n() != f0.n())
      throw Error(ErrorCode::DegreeMismatch, "parameter parts of different degree");
    for (std::size_t i = 0; i < out.basis_->size(); ++i) out(i, t) = parts[t].coeff(i);
  }
  return out;
}

GradedPoly ParamPoly::part(std::size_t t) const {
  Vector c(basis_->size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*this)(i, t);
  return GradedPoly(ctx_, n(), degree(), std::move(c));
}

GradedPoly ParamPoly::specialize(std::span<const Residue> a) const {
  if (a.size() != params_) throw Error(ErrorCode::DimensionMismatch, "wrong number of parameter values");
  Vector c(basis_->size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Residue acc = 0;
    for (std::size_t t = 0; t < params_; ++t) acc = ctx_.add(acc, ctx_.mul((*this)(i, t), a[t] % ctx_.prime()));
    c[i] = acc;
  }
  return GradedPoly(ctx_, n(), degree(), std::move(c));
}

ParamPoly ParamPoly::multiplied_by(const GradedPoly& f) const {
  std::vector<GradedPoly> parts;
  parts.reserve(params_);
  for (std::size_t t = 0; t < params_; ++t) parts.push_back(f * part(t));
  return from_parts(parts);
}

// ---------------------------------------------------------------------------

Vector veronese_vector(const PrimeContext& ctx, std::span<const Residue> point, std::size_t degree) {
  bool zero = true;
  for (auto c : point)
    if (c % ctx.prime()) zero = false;
  if (zero) throw Error(ErrorCode::ZeroPoint, "the zero tuple is not a projective point");
  const auto basis = monomial_basis(point.size() - 1, degree);
  std::vector<Vector> pw(point.size(), Vector(degree + 1, 1));
  for (std::size_t v = 0; v < point.size(); ++v)
    for (std::size_t k = 1; k <= degree; ++k) pw[v][k] = ctx.mul(pw[v][k - 1], point[v] % ctx.prime());
  Vector out(basis->size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto e = basis->exponent(i);
    Residue term = 1;
    for (std::size_t v = 0; v < e.size(); ++v) term = ctx.mul(term, pw[v][e[v]]);
    out[i] = term;
  }
  return out;
}

DenseMatrix mult_map(const GradedPoly& f, std::size_t d) {
  if (d < f.degree()) {
    throw Error(ErrorCode::DegreeMismatch,
                "target degree " + std::to_string(d) + " below factor degree " + std::to_string(f.degree()));
  }
  const auto src = monomial_basis(f.n(), d - f.degree());
  const auto dst = monomial_basis(f.n(), d);
  DenseMatrix m(f.context(), dst->size(), src->size());
  for (std::size_t j = 0; j < src->size(); ++j) {
    GradedPoly col = f * GradedPoly::monomial(f.context(), f.n(), src->exponent(j));
    for (std::size_t i = 0; i < dst->size(); ++i) m(i, j) = col.coeff(i);
  }
  return m;
}

namespace {

struct DetTerm {
  GradedPoly value;
  bool determined;  // false when every expansion term vanished identically
};

DetTerm det_rec(const std::vector<std::vector<const GradedPoly*>>& a) {
  const std::size_t k = a.size();
  if (k == 1) return {*a[0][0], !a[0][0]->is_zero()};
  std::optional<GradedPoly> acc;
  bool determined = false;
  std::size_t fallback_degree = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<const GradedPoly*>> sub;
    sub.reserve(k - 1);
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<const GradedPoly*> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(a[r][j]);
      sub.push_back(std::move(row));
    }
    DetTerm minor = det_rec(sub);
    const GradedPoly& head = *a[0][c];
    if (c == 0) fallback_degree = head.degree() + minor.value.degree();
    if (head.is_zero() || !minor.determined) continue;
    GradedPoly term = head * minor.value;
    if (c % 2 == 1) term = -term;
    if (acc && acc->degree() != term.degree()) {
      throw Error(ErrorCode::InhomogeneousDeterminant, "cofactor terms of degrees " + std::to_string(acc->degree()) +
                                                           " and " + std::to_string(term.degree()));
    }
    acc = acc ? *acc + term : term;
    determined = true;
  }
  if (!acc) return {GradedPoly(a[0][0]->context(), a[0][0]->n(), fallback_degree), false};
  return {*std::move(acc), determined};
}

}  // namespace

GradedPoly det_poly(const std::vector<std::vector<GradedPoly>>& entries) {
  const std::size_t k = entries.size();
  if (k == 0) throw Error(ErrorCode::DimensionMismatch, "empty determinant");
  std::vector<std::vector<const GradedPoly*>> a(k);
  for (std::size_t r = 0; r < k; ++r) {
    if (entries[r].size() != k) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square array");
    for (const auto& e : entries[r]) a[r].push_back(&e);
  }
  return det_rec(a).value;
}

}  // namespace waring
