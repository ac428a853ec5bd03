#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "waring/certificate.hpp"
#include "waring/graded_poly.hpp"

namespace waring::octic14 {

/// Ranks from the three admissibility tests for 14 points and an octic.
struct PreconditionEvidence {
  std::size_t veronese_rank = 0;   // test 1: rank v_8(A), expected 14
  std::size_t h4 = 0;              // test 2: h_A(4), expected 14
  std::size_t k3 = 0;              // test 3: k_3(A), expected 10
  std::size_t k3_subsets = 0;
};

/// Throws Error(PreconditionFailed) naming the failing test and its value.
/// `require_kruskal` = false skips test 3 (used by small-prime generators).
PreconditionEvidence check_preconditions(const Instance& inst, unsigned jobs = 1, bool require_kruskal = true);

/// Spanning vector of the degree-4 ideal piece, first nonzero coefficient 1.
/// Throws Error(QuarticNotUnique) when that piece is not one-dimensional.
GradedPoly unique_quartic(const PointSet& a);

/// Hilbert-Burch data of 14 points with h_A(4) = 14 and a 7-dimensional
/// degree-5 ideal piece.
struct HilbertBurch {
  GradedPoly quartic;                  // Q
  std::vector<GradedPoly> quintics;    // Q_1..Q_4
  /// 5 x 4: row 0 holds conics, rows 1..4 linear forms. Column c is a
  /// syzygy: Q*M[0][c] + sum_j Q_j*M[j][c] = 0.
  std::vector<std::vector<GradedPoly>> matrix;
  DenseMatrix syzygy_map;              // Phi: S^2 + (S^1)^4 -> S^6, 28 x 18
  Residue minor_scale = 0;             // det(lower 4x4 block) = minor_scale * Q
};

/// Throws Error(IdealDimension), Error(SyzygyDimension) or
/// Error(MinorDegenerate).
HilbertBurch hilbert_burch(const PointSet& a);

/// Signed maximal minors of a 5x4 polynomial matrix: entry i is
/// (-1)^i times the minor omitting row i.
std::vector<GradedPoly> signed_maximal_minors(const std::vector<std::vector<GradedPoly>>& m);

struct Normalization {
  DenseMatrix matrix;  // 12 x 12
  std::size_t rank = 0;
};

/// Matrix of the linear system that clears the first and third conic of the
/// residual matrix by row operations; full rank means the choice of those
/// conics as zero loses no generality.
Normalization normalization_check(const HilbertBurch& hb);

/// The 12-parameter family of residual sets B(a) sharing the quartic of A.
struct ResidualFamily {
  HilbertBurch base;
  /// 4 x 4 linear block: transpose of rows 1..4 of base.matrix.
  std::vector<std::vector<GradedPoly>> lower;
  /// Signed quintic minors omitting rows 1..4 of the residual matrix whose
  /// first row is (0, q2(a_1..a_6), 0, q4(a_7..a_12)).
  std::vector<ParamPoly> param_minors;
  Residue quartic_scale = 0;  // minor omitting the first row = scale * Q

  static constexpr std::size_t kParams = 12;

  /// Residual quintics at a fixed parameter vector.
  std::vector<GradedPoly> minors_at(std::span<const Residue> a) const;
};

/// Throws Error(NormalizationDegenerate) if the normalization matrix is
/// singular, Error(DegenerateCofactors) if every cubic cofactor vanishes.
ResidualFamily residual_family(const HilbertBurch& hb);

enum class SystemMode { Full, Paper13 };

struct Report {
  PreconditionEvidence preconditions;
  DenseMatrix system_matrix;   // 40 x 12 (Full) or 13 x 12 (Paper13)
  std::size_t system_rank = 0;
  std::vector<std::size_t> selected_rows;  // Paper13: rows of the full system kept
  std::size_t selection_attempts = 0;
  std::optional<WitnessCheck> witness;
};

/// Coefficient matrix of a -> (dot(p, mu * m_j(a)))_{j, mu}, rows ordered by
/// residual minor then cubic monomial.
DenseMatrix full_system(const Vector& form, const ResidualFamily& fam);

/// Builds the parameter system in the requested mode. Paper13 selects the
/// 13 products mu*m_j whose specializations at a random a extend (I_A)_8 to
/// a hyperplane; it retries up to 8 random specializations before raising
/// Error(SelectionFailed).
Report second_decomposition_system(const Instance& inst, const ResidualFamily& fam, SystemMode mode,
                                   std::uint64_t seed = 0);

/// Generators of (I_B)_8 = Q*S^4 + minors(a)*S^3 as coefficient vectors.
std::vector<Vector> residual_octic_generators(const ResidualFamily& fam, std::span<const Residue> a);

/// Basis of (I_A)_8 as coefficient vectors.
std::vector<Vector> octic_ideal_basis(const PointSet& a);

/// The four dimension/orthogonality checks. Throws Error(WitnessRejected)
/// for a = 0; failed checks are reported in the returned record.
WitnessCheck verify_witness(const Instance& inst, const ResidualFamily& fam, std::span<const Residue> a);

struct Options {
  SystemMode mode = SystemMode::Full;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
};

/// Full certification pipeline for d = 8, l(A) = 14, n = 2. Never returns
/// IdentifiableOfRank unless every stage passed.
Certificate certify(const Instance& inst, const Options& opt = {});

/// As certify(), also returning the intermediate report when the pipeline
/// reached the parameter system.
Certificate certify(const Instance& inst, const Options& opt, std::optional<Report>& report);

}  // namespace waring::octic14
