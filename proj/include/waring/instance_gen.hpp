#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waring/certificate.hpp"
#include "waring/graded_poly.hpp"
#include "waring/octic14.hpp"

namespace waring::gen {

enum class GroundTruth { ExpectedIdentifiable, KnownUnidentifiable };

std::string to_string(GroundTruth g);
/// Inverse of to_string; nullopt for unknown names.
std::optional<GroundTruth> ground_truth_from_string(const std::string& s);

struct GeneratorConfig {
  std::uint64_t prime = kDefaultPrime;
  std::size_t attempt_budget = 1000;
  /// Gate on k_3(A) = 10. Over very small fields almost no 14-point set
  /// passes, so small-prime runs switch it off.
  bool require_kruskal = true;
  /// Build B through 11 rational points of the quartic and resample until
  /// all 14 points of B are rational. Needs a prime below the scan limit.
  bool rational_residual = false;
  std::uint64_t scan_limit = std::uint64_t{1} << 14;
  unsigned jobs = 1;
};

struct AdmissibleSet {
  PointSet points;
  std::size_t attempts;
};

/// True iff 14 points pass rank v_8 = 14, h(4) = 14 and (optionally) k_3 = 10.
bool is_admissible(const PointSet& a, bool require_kruskal = true, unsigned jobs = 1);

/// Rejection-samples 14 uniformly random points until they are admissible.
/// Throws Error(GenerationExhausted) after cfg.attempt_budget draws.
AdmissibleSet random_admissible_pointset(std::uint64_t seed, const GeneratorConfig& cfg = {});

struct WitnessData {
  Vector parameters;                      // a
  std::vector<Vector> residual_octics;    // basis of (I_B)_8
  Vector annihilator;                     // t, spanning <v_8(A)> ∩ <v_8(B)>
  std::optional<PointSet> residual_points;  // B, when fully recovered
};

struct GeneratedInstance {
  Instance instance;
  GroundTruth ground_truth;
  std::optional<WitnessData> witness;
  std::uint64_t seed;
  std::size_t attempts;
};

GeneratedInstance gen_identifiable(std::uint64_t seed, const GeneratorConfig& cfg = {});

/// Builds an octic with two decompositions A, B of length 14 sharing a
/// quartic. Throws Error(GenerationExhausted).
GeneratedInstance gen_unidentifiable(std::uint64_t seed, const GeneratorConfig& cfg = {});

/// Points of P^2(F_p) where every polynomial vanishes, in the order
/// (1,y,z), (0,1,z), (0,0,1) with y, z ascending. Throws
/// Error(ScanBudgetExceeded) when p > scan_limit.
std::vector<Point> rational_common_zeros(const PrimeContext& ctx, const std::vector<GradedPoly>& polys,
                                         std::uint64_t scan_limit = std::uint64_t{1} << 14);

struct RecoveredPoints {
  std::vector<Point> points;
  std::size_t expected = 14;
  bool complete() const noexcept { return points.size() == expected; }
};

/// Best-effort search for the rational points of the residual set cut out by
/// Q and the quintics, with the points of A removed. Never padded.
RecoveredPoints recover_residual_points(const PointSet& a, const GradedPoly& quartic,
                                        const std::vector<GradedPoly>& quintics, std::size_t expected = 14,
                                        std::uint64_t scan_limit = std::uint64_t{1} << 14);

}  // namespace waring::gen
