#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tercert/combinatorics.hpp"
#include "tercert/errors.hpp"
#include "tercert/geometry.hpp"
#include "tercert/linalg.hpp"
#include "tercert/parallel.hpp"

namespace tercert {

/// Smallest subset size constrained by general uniform position in degree u.
constexpr std::size_t gup_threshold(unsigned u) { return monomial_count(u); }

template <ExactField F>
struct GupWitness {
  unsigned u = 0;
  PointList<F> subset;
  Vec<F> curve;  // degree-u form vanishing on every point of subset
};

template <ExactField F>
struct GupReport {
  bool holds = true;
  std::vector<unsigned> checked_degrees;
  std::optional<GupWitness<F>> witness;
};

struct GupOptions {
  EliminationOptions elim;
  /// Refuse when the number of subset determinants would exceed this.
  std::uint64_t cap = 10'000'000;
  unsigned workers = 1;
};

/// Number of square minors gup_check evaluates for n points (saturating).
inline std::uint64_t gup_subset_work(std::size_t n) {
  std::uint64_t total = 0;
  for (unsigned u = 1; gup_threshold(u) <= n; ++u) total = saturating_add(total, binomial(n, gup_threshold(u)));
  return total;
}

/// General uniform position: for every u >= 1, no subset of size m >= binom(u+2,2)
/// lies on a degree-u curve.
///
/// Only subsets of size exactly t = binom(u+2,2) are tested. A larger subset on a
/// degree-u curve contains t points on that same curve, and t points lie on a
/// degree-u curve iff their t x t evaluation matrix is singular. So testing the
/// square minors is equivalent to the definition.
///
/// Points are sorted canonically; the witness is the first singular subset in
/// (u, lexicographic subset) order, with the first kernel vector as its curve.
template <ExactField F>
GupReport<F> gup_check(const F& field, const PointList<F>& points, const GupOptions& opts = {}) {
  if (points.empty()) throw InputError("general uniform position needs at least one point");
  require_distinct(points);
  const auto pts = sorted_points(points);
  const std::size_t n = pts.size();
  const std::uint64_t work = gup_subset_work(n);
  if (work > opts.cap)
    throw ComplexityGuardError("GUP check on " + std::to_string(n) + " points needs " + std::to_string(work) +
                               " subset determinants, above cap " + std::to_string(opts.cap));

  GupReport<F> report;
  const unsigned workers = std::max(1u, opts.workers);
  for (unsigned u = 1; gup_threshold(u) <= n; ++u) {
    report.checked_degrees.push_back(u);
    const std::size_t t = gup_threshold(u);
    std::vector<Vec<F>> rows;
    rows.reserve(n);
    for (const auto& p : pts) rows.push_back(eval_monomials(field, p, u));

    std::atomic<std::uint64_t> first_bad{UINT64_MAX};
    std::vector<std::vector<std::size_t>> bad_subset(workers);
    for_each_combination(n, t, workers, [&](std::uint64_t idx, const std::vector<std::size_t>& sub, unsigned wid) {
      if (idx > first_bad.load(std::memory_order_relaxed)) return false;
      std::vector<Vec<F>> sub_rows;
      sub_rows.reserve(t);
      for (auto i : sub) sub_rows.push_back(rows[i]);
      if (is_nonsingular(Matrix<F>::from_rows(field, sub_rows, t), opts.elim)) return true;
      std::uint64_t cur = first_bad.load();
      while (idx < cur && !first_bad.compare_exchange_weak(cur, idx)) {
      }
      bad_subset[wid] = sub;
      return false;
    });

    const std::uint64_t bad = first_bad.load();
    if (bad == UINT64_MAX) continue;
    const auto& sub = bad_subset[bad % workers];
    GupWitness<F> wit;
    wit.u = u;
    std::vector<Vec<F>> sub_rows;
    for (auto i : sub) {
      wit.subset.push_back(pts[i]);
      sub_rows.push_back(rows[i]);
    }
    wit.curve = kernel_basis(Matrix<F>::from_rows(field, sub_rows, t)).front();
    report.holds = false;
    report.witness = std::move(wit);
    return report;
  }
  return report;
}

}  // namespace tercert
