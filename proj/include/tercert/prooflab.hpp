#pragma once

// Instruments the uniqueness argument on a concrete pair of decompositions
// Z, Z' of one form: the union W, its Hilbert profile, and each observable the
// argument relies on. Nothing here concludes a contradiction; callers compare
// the observables with what the criterion predicts.

#include <optional>
#include <string>
#include <vector>

#include "tercert/certifier.hpp"
#include "tercert/errors.hpp"
#include "tercert/geometry.hpp"
#include "tercert/hilbert.hpp"

namespace tercert {

struct Claim1 {
  std::size_t h_w_d = 0;
  std::size_t w = 0;
  bool holds = false;
};

/// (m+1)d - m^2 + m + 2 against m^2 + 3m + 2, and whether d <= 2m.
struct FinalInequality {
  long long lhs = 0;
  long long rhs = 0;
  bool d_le_2m = false;
};

/// |A| against the bounds a <= (m+1)d - m^2 + m + 2 and a >= m(d+3-m).
struct SplitBounds {
  std::size_t a = 0;
  long long upper = 0;
  long long lower = 0;
  bool a_le_upper = false;
  bool a_ge_lower = false;
};

template <ExactField F>
struct PairAnalysis {
  unsigned d = 0;
  std::size_t k = 0;
  PointList<F> w_points;
  std::size_t w = 0;
  HilbertProfile profile;
  Claim1 claim1;
  unsigned u = 0;
  /// Dh_W(i) = i + 1 for i = 0..u.
  bool initial_segment_ok = false;
  std::vector<Plateau> plateaus;
  std::optional<std::size_t> m;
  std::optional<CurveSplit<F>> split;
  std::optional<bool> residual_ok;
  std::optional<SplitBounds> split_bounds;
  std::optional<FinalInequality> final_inequality;
  /// Why optional fields are absent, in pipeline order.
  std::vector<std::string> notes;
};

/// h_W(d) < w, reading h_W(d) = w past the regularity.
inline bool claim1_check(const HilbertProfile& p, unsigned d) { return p.h_at(d) < p.w; }

inline FinalInequality final_inequality(long long m, long long d) {
  return {(m + 1) * d - m * m + m + 2, m * m + 3 * m + 2, d <= 2 * m};
}

template <ExactField F>
PairAnalysis<F> analyze_pair(const TernaryForm<F>& f, const Decomposition<F>& dec1, const Decomposition<F>& dec2,
                             const CurveSearchOptions& opts = {}) {
  const F& field = f.field();
  if (!verify_decomposition(f, dec1)) throw InputError("first decomposition does not verify against the form");
  if (!verify_decomposition(f, dec2)) throw InputError("second decomposition does not verify against the form");
  if (sorted_points(dec1.points()) == sorted_points(dec2.points()))
    throw InputError("the two decompositions use the same point set");

  PairAnalysis<F> out;
  out.d = f.degree();
  out.k = dec1.size();
  auto [w_points, prof] = union_profile(field, dec1.points(), dec2.points(), opts.elim);
  out.w_points = std::move(w_points);
  out.w = out.w_points.size();
  out.profile = std::move(prof);

  out.claim1 = {out.profile.h_at(out.d), out.w, claim1_check(out.profile, out.d)};
  out.u = compute_u(out.k);
  out.initial_segment_ok = true;
  for (unsigned i = 0; i <= out.u; ++i)
    if (out.profile.dh_at(i) != i + 1) out.initial_segment_ok = false;

  out.plateaus = plateau_scan(out.profile.dh, out.d);
  out.m = min_plateau(out.profile.dh, out.d);
  if (!out.m) {
    out.notes.push_back("no plateau Dh_W(j) = Dh_W(j+1) > 0 with j <= d");
    return out;
  }
  const auto m = static_cast<long long>(*out.m);
  out.final_inequality = final_inequality(m, out.d);
  out.split = find_plateau_curve(field, out.w_points, static_cast<unsigned>(*out.m), opts);
  if (!out.split) {
    out.notes.push_back("no degree-" + std::to_string(*out.m) + " curve holds more points than interpolation forces");
    return out;
  }
  out.residual_ok = residual_identity_check(field, out.w_points, *out.split, opts.elim);
  SplitBounds b;
  b.a = out.split->a();
  b.upper = (m + 1) * out.d - m * m + m + 2;
  b.lower = m * (static_cast<long long>(out.d) + 3 - m);
  b.a_le_upper = static_cast<long long>(b.a) <= b.upper;
  b.a_ge_lower = static_cast<long long>(b.a) >= b.lower;
  out.split_bounds = b;
  return out;
}

}  // namespace tercert
