#pragma once

// Exhaustive search for every length-k decomposition of a form over F_p.
// An empty result only says that no F_p-rational decomposition exists.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tercert/combinatorics.hpp"
#include "tercert/errors.hpp"
#include "tercert/geometry.hpp"
#include "tercert/linalg.hpp"
#include "tercert/parallel.hpp"

namespace tercert {

/// The p^2 + p + 1 points of P^2(F_p) in canonical lexicographic order:
/// (0:0:1), (0:1:*), (1:*:*).
inline PointList<PrimeField> plane_points(std::uint64_t p) {
  const PrimeField field(p);
  PointList<PrimeField> out;
  out.reserve(p * p + p + 1);
  out.emplace_back(field, 0, 0, 1);
  for (std::uint64_t b = 0; b < p; ++b) out.emplace_back(field, 0, 1, static_cast<long long>(b));
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      out.emplace_back(field, 1, static_cast<long long>(a), static_cast<long long>(b));
  return out;
}

struct FoundDecomposition {
  PointList<PrimeField> points;  // canonical order
  Vec<PrimeField> lambdas;       // first lambda is 1
};

struct SearchResult {
  std::uint32_t p = 0;
  std::size_t k = 0;
  std::uint64_t total_subsets = 0;
  std::uint64_t candidates_scanned = 0;
  std::vector<FoundDecomposition> decompositions;
  bool truncated = false;
};

struct OracleOptions {
  std::uint64_t cap = 10'000'000;
  unsigned workers = 1;
};

/// Scans k-subsets S of plane_points(p) in lexicographic order and keeps S when f
/// lies in the span of the d-th powers over S with every coefficient nonzero.
/// Each kept decomposition is scaled so its first lambda is 1; it reproduces f
/// up to that global factor. At most `cap` subsets are scanned.
inline SearchResult all_decompositions(const TernaryForm<PrimeField>& f, std::size_t k,
                                       const OracleOptions& opts = {}) {
  if (k < 1) throw InputError("decomposition length must be at least 1");
  const PrimeField& field = f.field();
  const auto pts = plane_points(field.prime());
  const unsigned d = f.degree();

  std::vector<Vec<PrimeField>> powers;
  powers.reserve(pts.size());
  for (const auto& x : pts) powers.push_back(power_coeffs(field, x, d));

  SearchResult out;
  out.p = field.prime();
  out.k = k;
  out.total_subsets = binomial(pts.size(), k);
  out.candidates_scanned = std::min(out.total_subsets, opts.cap);
  out.truncated = out.total_subsets > opts.cap;

  const unsigned workers = std::max(1u, opts.workers);
  std::vector<std::vector<std::pair<std::uint64_t, FoundDecomposition>>> found(workers);
  const std::uint64_t limit = out.candidates_scanned;
  const std::size_t rows = monomial_count(d);

  for_each_combination(pts.size(), k, workers, [&](std::uint64_t idx, const std::vector<std::size_t>& sub, unsigned wid) {
    if (idx >= limit) return false;
    std::vector<Vec<PrimeField>> cols;
    cols.reserve(k);
    for (auto i : sub) cols.push_back(powers[i]);
    const auto c = coords_in_span(f.coeffs(), Matrix<PrimeField>::from_columns(field, cols, rows));
    if (!c || std::any_of(c->begin(), c->end(), [](const ModP& x) { return x.is_zero(); })) return true;
    FoundDecomposition fd;
    const auto inv = c->front().inverse();
    for (std::size_t j = 0; j < k; ++j) {
      fd.points.push_back(pts[sub[j]]);
      fd.lambdas.push_back((*c)[j] * inv);
    }
    found[wid].emplace_back(idx, std::move(fd));
    return true;
  });

  std::vector<std::pair<std::uint64_t, FoundDecomposition>> all;
  for (auto& v : found)
    for (auto& e : v) all.push_back(std::move(e));
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& e : all) out.decompositions.push_back(std::move(e.second));
  return out;
}

}  // namespace tercert
