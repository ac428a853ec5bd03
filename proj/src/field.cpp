#include "waring/field.hpp"

#include <string>

#include "waring/errors.hpp"

namespace waring {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeContext::PrimeContext(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
  if (p <= 2 || p >= (1ull << 31) || !is_prime(p)) {
    throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
}

Residue PrimeContext::pow(Residue base, std::uint64_t e) const noexcept {
  return static_cast<Residue>(powmod(base, e, p_));
}

Residue PrimeContext::dot(const std::vector<Residue>& a, const std::vector<Residue>& b) const {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product of unequal lengths");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += static_cast<std::uint64_t>(a[i]) * b[i];
    // three products of residues below 2^31 still fit in 64 bits
    if (i % 3 == 2) acc %= p_;
  }
  return static_cast<Residue>(acc % p_);
}

}  // namespace waring
