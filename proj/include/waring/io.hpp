#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "waring/certificate.hpp"
#include "waring/check.hpp"
#include "waring/graded_poly.hpp"
#include "waring/instance_gen.hpp"

namespace waring::io {

inline constexpr std::string_view kToolName = "waring";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// On-disk instance. Coordinates and coefficients are signed integers; the
/// canonical writer emits the centered residues (-p/2, p/2].
struct InstanceFile {
  std::uint64_t prime = kDefaultPrime;
  std::size_t n = 2;
  std::size_t degree = 0;
  std::vector<std::vector<std::int64_t>> points;
  std::vector<std::int64_t> lambda;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> ground_truth;

  /// Throws Error(NotPrime), Error(DimensionMismatch), Error(ZeroPoint) or
  /// Error(DuplicatePoint).
  Instance to_instance() const;
  static InstanceFile from_instance(const Instance& inst);
  static InstanceFile from_generated(const gen::GeneratedInstance& g);
};

/// Prime named by the WARING_PRIME environment variable, else 31991.
/// Throws Error(NotPrime) for an unusable value.
std::uint64_t default_prime();

/// Throws Error(ParseError) naming the line and column of a syntax error or
/// the offending field. A missing "prime" falls back to default_prime().
InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& f);

InstanceFile load_instance(const std::string& path);
void save_instance(const std::string& path, const InstanceFile& f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

struct ReportFile {
  std::uint64_t prime = kDefaultPrime;
  std::string input_digest;
  std::string mode;
  std::string criteria;
  CheckResult result;
};

/// JSON report. `report_digest` covers everything except the timings, so
/// two runs on the same input and flags share it.
std::string render_report(const ReportFile& r, bool include_timings = true);

/// Signed residues, graded-lex order, e.g. "x0^2*x1 - 3*x2^3".
std::string format_poly(const GradedPoly& f);

/// Rows "j", "h", "Dh" of a Hilbert profile.
std::string format_hilbert_table(const HilbertProfile& prof);

std::string format_matrix(const DenseMatrix& m);

}  // namespace waring::io
