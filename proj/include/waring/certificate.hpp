#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/field.hpp"
#include "waring/matrix.hpp"
#include "waring/pointset.hpp"

namespace waring {

/// A form T = sum_i lambda_i * v_d(P_i) given by its decomposition.
struct Instance {
  PointSet points;
  std::size_t degree;
  Vector lambda;

  Instance(PointSet a, std::size_t d, Vector l);

  const PrimeContext& context() const noexcept { return points.context(); }
  /// Coefficients of T in the degree-d monomial-evaluation basis:
  /// p = sum_i lambda_i * veronese_vector(P_i, d).
  Vector form_coefficients() const;
};

enum class VerdictKind { IdentifiableOfRank, ComputesRank, NotIdentifiable, Degenerate, Inconclusive };

std::string to_string(VerdictKind v);

struct WitnessCheck {
  Vector parameters;          // a*
  std::size_t quintic_dim = 0;   // expected 7
  std::size_t octic_dim = 0;     // expected 31
  std::size_t sum_dim = 0;       // expected 44
  bool orthogonal = false;       // p annihilates every generator of (I_B)_8
  bool passed() const noexcept { return quintic_dim == 7 && octic_dim == 31 && sum_dim == 44 && orthogonal; }
};

struct Evidence {
  std::string label;
  std::int64_t value;
};

struct Certificate {
  std::string criterion;
  VerdictKind verdict = VerdictKind::Inconclusive;
  std::size_t rank = 0;   // r in IdentifiableOfRank(r) / ComputesRank(r)
  std::string reason;     // Degenerate / Inconclusive explanation
  std::vector<Evidence> evidence;
  std::optional<WitnessCheck> witness;

  void add(std::string label, std::int64_t value) { evidence.push_back({std::move(label), value}); }
  std::optional<std::int64_t> find(const std::string& label) const;
  /// e.g. "IdentifiableOfRank(14)", "Inconclusive(bound fails)"
  std::string verdict_string() const;
};

}  // namespace waring
