#pragma once

#include <cstdint>
#include <random>

#include "waring/field.hpp"
#include "waring/matrix.hpp"

namespace waring {

/// Seeded source of field elements. std::mt19937_64 output is fixed by the
/// standard, and residues are taken by plain reduction, so the stream is
/// identical across platforms for a given seed.
class FieldSampler {
 public:
  FieldSampler(const PrimeContext& ctx, std::uint64_t seed) : ctx_(ctx), eng_(seed) {}

  Residue uniform() { return static_cast<Residue>(eng_() % ctx_.prime()); }
  Residue nonzero() { return static_cast<Residue>(1 + eng_() % (ctx_.prime() - 1)); }
  std::uint64_t raw() { return eng_(); }

  Vector uniform_vector(std::size_t len) {
    Vector v(len);
    for (auto& x : v) x = uniform();
    return v;
  }
  /// Uniform vector conditioned on not being identically zero.
  Vector nonzero_vector(std::size_t len) {
    for (;;) {
      Vector v = uniform_vector(len);
      for (auto x : v)
        if (x) return v;
    }
  }

 private:
  PrimeContext ctx_;
  std::mt19937_64 eng_;
};

}  // namespace waring
