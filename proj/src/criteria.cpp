#include "waring/criteria.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "waring/errors.hpp"
#include "waring/graded_poly.hpp"

namespace waring {

namespace {

std::string hlabel(std::size_t j) { return "h_A(" + std::to_string(j) + ")"; }
std::string klabel(std::size_t j) { return "k_" + std::to_string(j) + "(A)"; }

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

void require_plane(const Instance& inst, const char* name) {
  if (inst.points.n() != 2)
    throw Error(ErrorCode::PreconditionFailed, std::string(name) + " applies to ternary forms only (n = 2)");
  if (inst.degree < 3) throw Error(ErrorCode::PreconditionFailed, std::string(name) + " needs degree >= 3");
}

std::size_t record_h(const Instance& inst, std::size_t j, Certificate& cert) {
  const std::size_t h = hilbert_function(inst.points, j);
  cert.add(hlabel(j), as_int(h));
  return h;
}

std::size_t record_k(const Instance& inst, std::size_t j, unsigned jobs, Certificate& cert) {
  const KruskalResult kr = kruskal_rank(inst.points, j, jobs);
  cert.add(klabel(j), as_int(kr.k));
  cert.add(klabel(j) + ".subsets", as_int(kr.subsets_examined));
  return kr.k;
}

Certificate conclude(Certificate cert, bool ok, VerdictKind success, std::size_t r, std::string why_not) {
  if (ok) {
    cert.verdict = success;
    cert.rank = r;
  } else {
    cert.verdict = VerdictKind::Inconclusive;
    cert.reason = std::move(why_not);
  }
  return cert;
}

}  // namespace

void require_non_redundant(const Instance& inst, Certificate& cert) {
  const std::size_t r = inst.points.size();
  const std::size_t rk = rank(evaluation_matrix(inst.points, inst.degree));
  cert.add("rank v_" + std::to_string(inst.degree) + "(A)", as_int(rk));
  std::size_t zeros = static_cast<std::size_t>(std::count(inst.lambda.begin(), inst.lambda.end(), Residue{0}));
  cert.add("zero coefficients", as_int(zeros));
  if (rk != r)
    throw Error(ErrorCode::RedundancyDetected, "Veronese images span dimension " + std::to_string(rk) + " < " +
                                                   std::to_string(r));
  if (zeros)
    throw Error(ErrorCode::RedundancyDetected, std::to_string(zeros) + " coefficient(s) of T vanish");
}

namespace bounds {

std::size_t range_max_rank(std::size_t d) {
  const std::size_t m = d / 2;
  if (d % 2 == 0) return static_cast<std::size_t>(binomial(m + 2, 2)) - 2;
  return static_cast<std::size_t>(binomial(m + 2, 2)) + m / 2;
}

std::size_t ranger_max_rank(std::size_t d) {
  const std::size_t m = d / 2;
  if (d % 2 == 0) return static_cast<std::size_t>(binomial(m + 2, 2));
  return static_cast<std::size_t>(binomial(m + 2, 2)) + (m + 1) / 2;
}

}  // namespace bounds

// ---------------------------------------------------------------------------

Certificate reshaped_kruskal_certify(const Instance& inst, const DegreeSplit& split, unsigned jobs) {
  const auto [d1, d2, d3] = split;
  if (inst.degree < 3 || d1 + d2 + d3 != inst.degree || !(d1 >= d2 && d2 >= d3 && d3 >= 1)) {
    throw Error(ErrorCode::BadSplit, "split (" + std::to_string(d1) + "," + std::to_string(d2) + "," +
                                         std::to_string(d3) + ") of degree " + std::to_string(inst.degree));
  }
  Certificate cert;
  cert.criterion = "reshaped_kruskal";
  require_non_redundant(inst, cert);
  std::map<std::size_t, std::size_t> k;
  for (std::size_t j : {d1, d2, d3})
    if (!k.count(j)) k[j] = record_k(inst, j, jobs, cert);
  const std::size_t r = inst.points.size();
  const std::size_t sum = k[d1] + k[d2] + k[d3];
  // l(A) <= (k1 + k2 + k3 - 2) / 2, compared as 2 l(A) + 2 <= k1 + k2 + k3
  cert.add("2*l(A)", as_int(2 * r));
  cert.add("k1+k2+k3-2", as_int(sum) - 2);
  return conclude(std::move(cert), 2 * r + 2 <= sum, VerdictKind::IdentifiableOfRank, r,
                  "Kruskal bound fails for split (" + std::to_string(d1) + "," + std::to_string(d2) + "," +
                      std::to_string(d3) + ")");
}

Certificate reshaped_kruskal_certify(const Instance& inst, unsigned jobs) {
  const std::size_t d = inst.degree;
  if (d < 3) throw Error(ErrorCode::BadSplit, "degree below 3 has no split");
  Certificate best;
  best.criterion = "reshaped_kruskal";
  require_non_redundant(inst, best);
  std::map<std::size_t, std::size_t> k;
  auto kr = [&](std::size_t j) {
    if (!k.count(j)) k[j] = record_k(inst, j, jobs, best);
    return k[j];
  };
  const std::size_t r = inst.points.size();
  std::int64_t best_sum = -1;
  DegreeSplit best_split{};
  for (std::size_t d1 = d - 2; d1 * 3 >= d; --d1) {
    for (std::size_t d2 = std::min(d1, d - d1 - 1); d2 * 2 >= d - d1 && d2 >= 1; --d2) {
      const std::size_t d3 = d - d1 - d2;
      if (d3 > d2 || d3 < 1) continue;
      const std::int64_t sum = as_int(kr(d1) + kr(d2) + kr(d3));
      if (sum > best_sum) {
        best_sum = sum;
        best_split = {d1, d2, d3};
      }
    }
  }
  best.add("best split d1", as_int(best_split[0]));
  best.add("best split d2", as_int(best_split[1]));
  best.add("best split d3", as_int(best_split[2]));
  best.add("2*l(A)", as_int(2 * r));
  best.add("k1+k2+k3-2", best_sum - 2);
  return conclude(std::move(best), as_int(2 * r) + 2 <= best_sum, VerdictKind::IdentifiableOfRank, r,
                  "Kruskal bound fails for every split");
}

Certificate range_certify(const Instance& inst, unsigned jobs) {
  require_plane(inst, "range criterion");
  Certificate cert;
  cert.criterion = "range";
  require_non_redundant(inst, cert);
  const std::size_t d = inst.degree;
  const std::size_t m = d / 2;
  const std::size_t r = inst.points.size();
  const std::size_t bound = bounds::range_max_rank(d);
  cert.add("r", as_int(r));
  cert.add("rank bound", as_int(bound));
  // Kruskal degree and Hilbert degree depend on the parity of d
  const std::size_t kdeg = d % 2 == 0 ? m - 1 : m;
  const std::size_t hdeg = d % 2 == 0 ? m : m + 1;
  const std::size_t kcap = static_cast<std::size_t>(binomial(kdeg + 2, 2));
  if (r > bound) return conclude(std::move(cert), false, {}, r, "r exceeds " + std::to_string(bound));
  const std::size_t h = record_h(inst, hdeg, cert);
  const std::size_t k = record_k(inst, kdeg, jobs, cert);
  const bool ok = k == std::min(kcap, r) && h == r;
  return conclude(std::move(cert), ok, VerdictKind::IdentifiableOfRank, r,
                  "need " + klabel(kdeg) + " = " + std::to_string(std::min(kcap, r)) + " and " + hlabel(hdeg) +
                      " = " + std::to_string(r));
}

Certificate ranger_certify(const Instance& inst, unsigned jobs) {
  require_plane(inst, "rank criterion");
  Certificate cert;
  cert.criterion = "ranger";
  require_non_redundant(inst, cert);
  const std::size_t d = inst.degree;
  const std::size_t m = d / 2;
  const std::size_t r = inst.points.size();
  const std::size_t bound = bounds::ranger_max_rank(d);
  cert.add("r", as_int(r));
  cert.add("rank bound", as_int(bound));
  if (r > bound) return conclude(std::move(cert), false, {}, r, "r exceeds " + std::to_string(bound));
  if (d % 2 == 0) {
    const std::size_t h = record_h(inst, m, cert);
    return conclude(std::move(cert), h == r, VerdictKind::ComputesRank, r, "need " + hlabel(m) + " = r");
  }
  const std::size_t kcap = static_cast<std::size_t>(binomial(m + 2, 2));
  const std::size_t h = record_h(inst, m + 1, cert);
  const std::size_t k = record_k(inst, m, jobs, cert);
  return conclude(std::move(cert), k == std::min(kcap, r) && h == r, VerdictKind::ComputesRank, r,
                  "need " + klabel(m) + " = " + std::to_string(std::min(kcap, r)) + " and " + hlabel(m + 1) + " = r");
}

Certificate mo_certify(const Instance& inst, unsigned jobs) {
  const std::size_t n = inst.points.n();
  const std::size_t d = inst.degree;
  if (n < 2 || d < 3) throw Error(ErrorCode::PreconditionFailed, "needs n >= 2 and degree >= 3");
  Certificate cert;
  cert.criterion = "mo";
  require_non_redundant(inst, cert);
  const std::size_t r = inst.points.size();
  const std::size_t m = d / 2;
  const std::size_t h1 = record_h(inst, 1, cert);
  if (h1 != std::min(n + 1, r))
    throw Error(ErrorCode::NotConcise, "h_A(1) = " + std::to_string(h1) + " < " + std::to_string(std::min(n + 1, r)));
  // h_A(m-1) >= r - min{(n-1)/2, (m-1)/2}, doubled to stay in integers
  const std::size_t slack2 = std::min(n - 1, m - 1);
  const std::size_t h = record_h(inst, m - 1, cert);
  cert.add("2*" + hlabel(m - 1), as_int(2 * h));
  cert.add("2r-min(n-1,m-1)", as_int(2 * r) - as_int(slack2));
  cert.add("half-integral bound", slack2 % 2);
  bool ok = as_int(2 * h) >= as_int(2 * r) - as_int(slack2);
  if (d % 2 == 1) {
    const std::size_t k = record_k(inst, m, jobs, cert);
    ok = ok && k == r;
  }
  return conclude(std::move(cert), ok, VerdictKind::IdentifiableOfRank, r, "Hilbert function bound fails");
}

}  // namespace waring
