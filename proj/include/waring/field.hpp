#pragma once

#include <cstdint>
#include <vector>

namespace waring {

using Residue = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 31991;

/// Deterministic primality test, exact for every 32-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic modulo a prime 2 < p < 2^31. Residues are always kept in [0, p).
class PrimeContext {
 public:
  /// Throws Error(NotPrime) unless p is a prime in (2, 2^31).
  explicit PrimeContext(std::uint64_t p = kDefaultPrime);

  std::uint32_t prime() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// a - b*c
  Residue sub_mul(Residue a, Residue b, Residue c) const noexcept { return sub(a, mul(b, c)); }
  Residue pow(Residue base, std::uint64_t e) const noexcept;
  /// Inverse of a nonzero residue (Fermat).
  Residue inv(Residue a) const noexcept { return pow(a, p_ - 2); }

  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t centered(Residue a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  Residue dot(const std::vector<Residue>& a, const std::vector<Residue>& b) const;

  friend bool operator==(const PrimeContext& a, const PrimeContext& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace waring
