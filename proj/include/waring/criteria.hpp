#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "waring/certificate.hpp"

namespace waring {

/// Evidence shared by every criterion: rank of v_d(A) equals l(A) and no
/// coefficient vanishes. Throws Error(RedundancyDetected) otherwise.
void require_non_redundant(const Instance& inst, Certificate& cert);

using DegreeSplit = std::array<std::size_t, 3>;

/// Reshaped Kruskal criterion for one split d = d1 + d2 + d3,
/// d1 >= d2 >= d3 >= 1. Throws Error(BadSplit) or Error(RedundancyDetected).
Certificate reshaped_kruskal_certify(const Instance& inst, const DegreeSplit& split, unsigned jobs = 1);
/// Tries every split, returning the first success (or the last failure).
Certificate reshaped_kruskal_certify(const Instance& inst, unsigned jobs = 1);

/// Plane criterion for uniqueness (n = 2).
Certificate range_certify(const Instance& inst, unsigned jobs = 1);
/// Plane criterion for A computing the rank of T (n = 2).
Certificate ranger_certify(const Instance& inst, unsigned jobs = 1);
/// Any n >= 2; bounds with min{(n-1)/2, (m-1)/2} are compared over Q.
Certificate mo_certify(const Instance& inst, unsigned jobs = 1);

namespace bounds {
/// Largest r allowed by the uniqueness criterion for n = 2 in degree d.
std::size_t range_max_rank(std::size_t d);
/// Largest r allowed by the rank criterion for n = 2 in degree d.
std::size_t ranger_max_rank(std::size_t d);
}  // namespace bounds

}  // namespace waring
