#include "waring/certificate.hpp"

#include <string>

#include "waring/errors.hpp"
#include "waring/graded_poly.hpp"

namespace waring {

Instance::Instance(PointSet a, std::size_t d, Vector l) : points(std::move(a)), degree(d), lambda(std::move(l)) {
  if (lambda.size() != points.size()) {
    throw Error(ErrorCode::DimensionMismatch, std::to_string(lambda.size()) + " coefficients for " +
                                                  std::to_string(points.size()) + " points");
  }
  for (auto& c : lambda) c %= context().prime();
}

Vector Instance::form_coefficients() const {
  const PrimeContext& ctx = context();
  Vector p(monomial_basis(points.n(), degree)->size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Vector v = veronese_vector(ctx, points[i], degree);
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = ctx.add(p[k], ctx.mul(lambda[i], v[k]));
  }
  return p;
}

std::string to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::IdentifiableOfRank: return "IdentifiableOfRank";
    case VerdictKind::ComputesRank: return "ComputesRank";
    case VerdictKind::NotIdentifiable: return "NotIdentifiable";
    case VerdictKind::Degenerate: return "Degenerate";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

std::optional<std::int64_t> Certificate::find(const std::string& label) const {
  for (const auto& e : evidence)
    if (e.label == label) return e.value;
  return std::nullopt;
}

std::string Certificate::verdict_string() const {
  switch (verdict) {
    case VerdictKind::IdentifiableOfRank:
    case VerdictKind::ComputesRank: return to_string(verdict) + "(" + std::to_string(rank) + ")";
    case VerdictKind::NotIdentifiable: return "NotIdentifiable(witness)";
    default: return to_string(verdict) + "(" + reason + ")";
  }
}

}  // namespace waring
