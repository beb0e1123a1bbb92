#pragma once

// Identifiability certificates for ternary forms. Given a form of degree d and
// one decomposition into k powers of linear forms over points Z, the form is
// identifiable when
//   * its rank is k,
//   * Z is in general uniform position, and
//   * 8k < d^2 + 2d.
// The pipeline checks every hypothesis on the concrete input and records each
// intermediate value. A refusal never claims non-identifiability.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tercert/combinatorics.hpp"
#include "tercert/errors.hpp"
#include "tercert/geometry.hpp"
#include "tercert/gup.hpp"
#include "tercert/hilbert.hpp"
#include "tercert/linalg.hpp"

namespace tercert {

/// 8k < d^2 + 2d.
constexpr bool bound_check(std::uint64_t k, std::uint64_t d) { return 8 * k < d * d + 2 * d; }

/// Largest k with 8k < d^2 + 2d (0 when none).
constexpr std::uint64_t bound_k_max(std::uint64_t d) { return (d * d + 2 * d - 1) / 8; }

/// The u >= 0 with binom(u+2,2) <= k < binom(u+3,2).
constexpr unsigned compute_u(std::uint64_t k) {
  unsigned u = 0;
  while (monomial_count(u + 1) <= k) ++u;
  return u;
}

/// u + 2 <= d/2, as 2(u+2) <= d.
constexpr bool u_consistency_check(unsigned u, std::uint64_t d) { return 2 * (std::uint64_t{u} + 2) <= d; }

/// 2k <= (u+1)d - u^2 + u + 2.
constexpr bool inequality1_check(std::uint64_t k, std::uint64_t d, unsigned u) {
  const long long lhs = 2 * static_cast<long long>(k);
  const long long uu = u;
  const long long rhs = (uu + 1) * static_cast<long long>(d) - uu * uu + uu + 2;
  return lhs <= rhs;
}

/// Informational: 3k < N + 1 with N = d(d+3)/2, the range where a general
/// rank-k ternary form is known to be identifiable.
constexpr bool generic_range_check(std::uint64_t k, std::uint64_t d) { return 3 * k < d * (d + 3) / 2 + 1; }

/// Largest k for which the bound, u-consistency and 2k <= (u+1)d - u^2 + u + 2 all pass.
constexpr std::uint64_t arithmetic_k_max(std::uint64_t d) {
  std::uint64_t best = 0;
  for (std::uint64_t k = 1; k <= bound_k_max(d); ++k) {
    const unsigned u = compute_u(k);
    if (u_consistency_check(u, d) && inequality1_check(k, d, u)) best = k;
  }
  return best;
}

enum class Reason {
  DecompositionMismatch,
  BoundFail,
  UConsistencyFail,
  Inequality1Fail,
  VeroneseRankDeficient,
  RankUncertified,
  GupFail,
};

inline const char* to_string(Reason r) {
  switch (r) {
    case Reason::DecompositionMismatch: return "DecompositionMismatch";
    case Reason::BoundFail: return "BoundFail";
    case Reason::UConsistencyFail: return "UConsistencyFail";
    case Reason::Inequality1Fail: return "Inequality1Fail";
    case Reason::VeroneseRankDeficient: return "VeroneseRankDeficient";
    case Reason::RankUncertified: return "RankUncertified";
    case Reason::GupFail: return "GupFail";
  }
  return "?";
}

enum class Verdict { Certified, CertifiedRankOne, NotCertified };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::CertifiedRankOne: return "CertifiedRankOne";
    case Verdict::NotCertified: return "NotCertified";
  }
  return "?";
}

template <ExactField F>
struct Certificate {
  unsigned d = 0;
  std::size_t k = 0;
  std::string field;
  bool bound_ok = false;
  unsigned u = 0;
  bool u_consistency = false;
  bool inequality1_ok = false;
  bool generic_range_ok = false;
  std::optional<scalar_t<F>> decomposition_sigma;
  bool distinct_points = false;
  bool lambdas_nonzero = false;
  std::size_t veronese_rank = 0;
  /// (h_Z(floor(d/2)), h_Z(ceil(d/2))).
  std::pair<std::size_t, std::size_t> independence{0, 0};
  unsigned catalecticant_degree = 0;
  /// Absent when d < 2 or the field characteristic does not exceed d.
  std::optional<std::size_t> catalecticant_rank;
  bool rank_certified = false;
  GupReport<F> gup;
  Verdict verdict = Verdict::NotCertified;
  std::vector<Reason> reasons;

  bool certified() const { return verdict != Verdict::NotCertified; }
};

struct CertifyOptions {
  GupOptions gup;
};

/// Throws std::logic_error if the certificate contradicts its own fields.
template <ExactField F>
void check_certificate_invariants(const Certificate<F>& c) {
  auto fail = [](const char* what) { throw std::logic_error(std::string("Certificate: ") + what); };
  if (c.verdict == Verdict::Certified) {
    if (!(c.bound_ok && c.u_consistency && c.inequality1_ok && c.decomposition_sigma && c.distinct_points &&
          c.lambdas_nonzero && c.rank_certified && c.gup.holds))
      fail("Certified with a failing hypothesis");
    if (c.veronese_rank != c.k || c.catalecticant_rank != c.k) fail("Certified without rank k");
  }
  if (c.verdict == Verdict::CertifiedRankOne && (c.k != 1 || !c.decomposition_sigma)) fail("rank-one verdict misuse");
  if (c.verdict == Verdict::NotCertified && c.reasons.empty()) fail("refusal without reason");
  // Consequences of the bound: the 2k inequality for all d, u-consistency for even d.
  if (c.bound_ok && !c.inequality1_ok) fail("bound holds but 2k <= (u+1)d - u^2 + u + 2 fails");
  if (c.bound_ok && c.d % 2 == 0 && !c.u_consistency) fail("bound holds for even d but u + 2 > d/2");
  if (c.catalecticant_rank && c.decomposition_sigma && *c.catalecticant_rank > c.k)
    fail("catalecticant rank exceeds decomposition length");
}

/// Runs the full certification pipeline. When `form` is absent it is taken to
/// be synthesize(dec).
template <ExactField F>
Certificate<F> certify(const std::optional<TernaryForm<F>>& form, const Decomposition<F>& dec,
                       const CertifyOptions& opts = {}) {
  const F& field = dec.field();
  const unsigned d = dec.degree();
  const TernaryForm<F> f = form ? *form : synthesize(dec);
  const auto pts = dec.points();

  Certificate<F> c;
  c.d = d;
  c.k = dec.size();
  c.field = field.name();
  c.decomposition_sigma = verify_decomposition(f, dec);
  // Enforced by Decomposition's constructor.
  c.distinct_points = true;
  c.lambdas_nonzero = true;

  c.bound_ok = bound_check(c.k, d);
  c.u = compute_u(c.k);
  c.u_consistency = u_consistency_check(c.u, d);
  c.inequality1_ok = inequality1_check(c.k, d, c.u);
  c.generic_range_ok = generic_range_check(c.k, d);

  const auto& elim = opts.gup.elim;
  c.veronese_rank = rank(veronese_matrix(field, pts, d), elim);
  c.catalecticant_degree = d / 2;
  c.independence = {hilbert_value(field, pts, d / 2, elim), hilbert_value(field, pts, (d + 1) / 2, elim)};
  if (d >= 2) {
    try {
      c.catalecticant_rank = rank(catalecticant(f, d / 2), elim);
    } catch (const InputError&) {
      c.catalecticant_rank.reset();
    }
  }
  c.rank_certified = c.independence.first == c.k && c.independence.second == c.k && c.catalecticant_rank == c.k;
  c.gup = gup_check(field, pts, opts.gup);

  if (!c.decomposition_sigma) c.reasons.push_back(Reason::DecompositionMismatch);
  if (c.k == 1 && c.decomposition_sigma) {
    c.verdict = Verdict::CertifiedRankOne;
  } else {
    if (!c.bound_ok) c.reasons.push_back(Reason::BoundFail);
    if (!c.u_consistency) c.reasons.push_back(Reason::UConsistencyFail);
    if (!c.inequality1_ok) c.reasons.push_back(Reason::Inequality1Fail);
    if (c.veronese_rank != c.k) c.reasons.push_back(Reason::VeroneseRankDeficient);
    if (!c.rank_certified) c.reasons.push_back(Reason::RankUncertified);
    if (!c.gup.holds) c.reasons.push_back(Reason::GupFail);
    c.verdict = c.reasons.empty() ? Verdict::Certified : Verdict::NotCertified;
  }
  check_certificate_invariants(c);
  return c;
}

}  // namespace tercert
