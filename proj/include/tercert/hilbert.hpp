#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tercert/combinatorics.hpp"
#include "tercert/errors.hpp"
#include "tercert/geometry.hpp"
#include "tercert/linalg.hpp"
#include "tercert/parallel.hpp"

namespace tercert {

/// Hilbert function h(0..T) of a finite point set, T its regularity, and the
/// first difference Dh(t) = h(t) - h(t-1). Dh(T+1) and beyond are zero and not stored.
struct HilbertProfile {
  std::size_t w = 0;
  std::vector<std::size_t> h;
  std::vector<std::size_t> dh;

  std::size_t regularity() const { return h.empty() ? 0 : h.size() - 1; }

  /// h(t), with h(t) = w past the regularity and h(-1) = 0.
  std::size_t h_at(long long t) const {
    if (t < 0 || h.empty()) return 0;
    return static_cast<std::size_t>(t) < h.size() ? h[static_cast<std::size_t>(t)] : w;
  }

  std::size_t dh_at(long long t) const {
    if (t < 0 || static_cast<std::size_t>(t) >= dh.size()) return 0;
    return dh[static_cast<std::size_t>(t)];
  }

  /// Throws std::logic_error if any structural invariant fails.
  void check_invariants() const {
    auto fail = [](const char* what) { throw std::logic_error(std::string("HilbertProfile: ") + what); };
    if (w == 0) {
      if (!h.empty() || !dh.empty()) fail("empty set must have an empty profile");
      return;
    }
    if (h.empty() || h.front() != 1) fail("h(0) != 1");
    if (h.back() != w) fail("h(T) != w");
    if (dh.size() != h.size()) fail("Dh length mismatch");
    std::size_t sum = 0;
    for (std::size_t t = 0; t < h.size(); ++t) {
      if (t > 0 && h[t] < h[t - 1]) fail("h decreasing");
      if (dh[t] != h[t] - (t ? h[t - 1] : 0)) fail("Dh != h(t) - h(t-1)");
      if (dh[t] > t + 1) fail("Dh(t) > t+1");
      sum += dh[t];
    }
    if (sum != w) fail("sum of Dh != w");
  }

  friend bool operator==(const HilbertProfile&, const HilbertProfile&) = default;
};

/// h_Z(t): the rank of the degree-t evaluation matrix.
template <ExactField F>
std::size_t hilbert_value(const F& field, const PointList<F>& pts, unsigned t,
                          const EliminationOptions& opts = {}) {
  if (pts.empty()) return 0;
  return rank(evaluation_matrix(field, pts, t), opts);
}

/// h(t) for t = 0, 1, ... stopping at the first t with h(t) = |Z|.
template <ExactField F>
HilbertProfile profile(const F& field, const PointList<F>& pts, const EliminationOptions& opts = {}) {
  require_distinct(pts);
  HilbertProfile out;
  out.w = pts.size();
  if (out.w == 0) return out;
  for (unsigned t = 0; out.h.empty() || out.h.back() < out.w; ++t) {
    const std::size_t v = hilbert_value(field, pts, t, opts);
    out.dh.push_back(v - (out.h.empty() ? 0 : out.h.back()));
    out.h.push_back(v);
  }
  out.check_invariants();
  return out;
}

/// Z u Z2 with duplicates removed, in canonical order.
template <ExactField F>
PointList<F> union_points(const PointList<F>& z, const PointList<F>& z2) {
  PointList<F> w = z;
  w.insert(w.end(), z2.begin(), z2.end());
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

template <ExactField F>
std::pair<PointList<F>, HilbertProfile> union_profile(const F& field, const PointList<F>& z,
                                                      const PointList<F>& z2,
                                                      const EliminationOptions& opts = {}) {
  require_distinct(z);
  require_distinct(z2);
  auto w = union_points(z, z2);
  auto prof = profile(field, w, opts);
  return {std::move(w), std::move(prof)};
}

struct Plateau {
  std::size_t j;
  std::size_t value;
  friend bool operator==(const Plateau&, const Plateau&) = default;
};

/// All j <= d with Dh(j) = Dh(j+1) > 0; Dh is zero past the given range.
inline std::vector<Plateau> plateau_scan(std::span<const std::size_t> dh, unsigned d) {
  auto at = [&](std::size_t t) { return t < dh.size() ? dh[t] : std::size_t{0}; };
  std::vector<Plateau> out;
  for (std::size_t j = 0; j <= d; ++j)
    if (at(j) > 0 && at(j) == at(j + 1)) out.push_back({j, at(j)});
  return out;
}

inline std::optional<std::size_t> min_plateau(std::span<const std::size_t> dh, unsigned d) {
  const auto ps = plateau_scan(dh, d);
  if (ps.empty()) return std::nullopt;
  return std::min_element(ps.begin(), ps.end(), [](auto& x, auto& y) { return x.value < y.value; })->value;
}

/// A degree-m curve and the partition of W into A = W on the curve, B = the rest.
template <ExactField F>
struct CurveSplit {
  Vec<F> curve;  // coefficients in monomial_order(m)
  unsigned m = 0;
  PointList<F> a_points;
  PointList<F> b_points;
  /// Dh_A = min{m, Dh_W} termwise.
  bool profile_matches = false;
  std::size_t a() const { return a_points.size(); }
};

struct CurveSearchOptions {
  EliminationOptions elim;
  std::uint64_t cap = 10'000'000;
  unsigned workers = 1;
};

template <ExactField F>
scalar_t<F> dot(const Vec<F>& x, const Vec<F>& y) {
  auto acc = x.at(0) - x.at(0);
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

namespace detail {

inline bool profile_is_truncation(const HilbertProfile& a, const HilbertProfile& w, std::size_t m) {
  const std::size_t len = std::max(a.dh.size(), w.dh.size());
  for (std::size_t t = 0; t < len; ++t)
    if (a.dh_at(static_cast<long long>(t)) != std::min(m, w.dh_at(static_cast<long long>(t)))) return false;
  return true;
}

}  // namespace detail

/// Searches for the degree-m curve meeting W in the most points. Every subset S
/// of binom(m+2,2)-1 points lies on some degree-m curve; each kernel vector of
/// the evaluation matrix of S is a candidate. Only curves holding at least
/// binom(m+2,2) points of W count (more than interpolation alone forces). Ties
/// go to the lexicographically first S, then to the first kernel vector.
template <ExactField F>
std::optional<CurveSplit<F>> find_plateau_curve(const F& field, const PointList<F>& w_in, unsigned m,
                                                const CurveSearchOptions& opts = {}) {
  if (m < 1) throw InputError("curve degree must be at least 1");
  require_distinct(w_in);
  const auto w = sorted_points(w_in);
  const std::size_t s = monomial_count(m) - 1;
  if (w.size() < s + 1) return std::nullopt;
  if (binomial(w.size(), s) > opts.cap)
    throw ComplexityGuardError("curve search over C(" + std::to_string(w.size()) + "," + std::to_string(s) +
                               ") subsets exceeds cap " + std::to_string(opts.cap));

  std::vector<Vec<F>> rows;
  rows.reserve(w.size());
  for (const auto& p : w) rows.push_back(eval_monomials(field, p, m));

  struct Best {
    std::size_t count = 0;
    std::uint64_t index = UINT64_MAX;
    Vec<F> curve;
    std::vector<bool> on_curve;
  };
  const unsigned workers = std::max(1u, opts.workers);
  std::vector<Best> best(workers);

  for_each_combination(w.size(), s, workers, [&](std::uint64_t idx, const std::vector<std::size_t>& sub, unsigned wid) {
    std::vector<Vec<F>> sub_rows;
    sub_rows.reserve(sub.size());
    for (auto i : sub) sub_rows.push_back(rows[i]);
    const auto kernel = kernel_basis(Matrix<F>::from_rows(field, sub_rows, monomial_count(m)));
    for (const auto& curve : kernel) {
      std::vector<bool> on(w.size());
      std::size_t count = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        on[i] = dot<F>(curve, rows[i]).is_zero();
        count += on[i];
      }
      auto& b = best[wid];
      // Within one worker indices increase, so strict > keeps the earliest.
      if (count >= s + 1 && count > b.count) b = Best{count, idx, curve, std::move(on)};
    }
    return true;
  });

  const Best* pick = nullptr;
  for (const auto& b : best) {
    if (b.count == 0) continue;
    if (!pick || b.count > pick->count || (b.count == pick->count && b.index < pick->index)) pick = &b;
  }
  if (!pick) return std::nullopt;

  CurveSplit<F> split;
  split.curve = pick->curve;
  split.m = m;
  for (std::size_t i = 0; i < w.size(); ++i) (pick->on_curve[i] ? split.a_points : split.b_points).push_back(w[i]);
  const auto w_prof = profile(field, w, opts.elim);
  const auto a_prof = profile(field, split.a_points, opts.elim);
  split.profile_matches = detail::profile_is_truncation(a_prof, w_prof, m);
  return split;
}

/// Checks Dh_A(i) + Dh_B(i - m) = Dh_W(i) for every i. Throws InputError when the
/// split is not a partition of W by vanishing on the curve.
template <ExactField F>
bool residual_identity_check(const F& field, const PointList<F>& w, const CurveSplit<F>& split,
                             const EliminationOptions& opts = {}) {
  require_distinct(w);
  if (split.curve.size() != monomial_count(split.m)) throw InputError("curve coefficient count does not match m");
  for (const auto& p : split.a_points)
    if (!dot<F>(split.curve, eval_monomials(field, p, split.m)).is_zero())
      throw InputError("point " + p.str() + " of A is not on the curve");
  for (const auto& p : split.b_points)
    if (dot<F>(split.curve, eval_monomials(field, p, split.m)).is_zero())
      throw InputError("point " + p.str() + " of B lies on the curve");
  if (union_points(split.a_points, split.b_points) != sorted_points(w) ||
      split.a_points.size() + split.b_points.size() != w.size())
    throw InputError("A and B do not partition W");

  const auto pw = profile(field, w, opts);
  const auto pa = profile(field, split.a_points, opts);
  const auto pb = profile(field, split.b_points, opts);
  const std::size_t len = std::max({pw.dh.size(), pa.dh.size(), pb.dh.size() + split.m});
  for (std::size_t i = 0; i < len; ++i) {
    const auto t = static_cast<long long>(i);
    if (pa.dh_at(t) + pb.dh_at(t - split.m) != pw.dh_at(t)) return false;
  }
  return true;
}

}  // namespace tercert
