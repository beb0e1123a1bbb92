#pragma once

// Exact dense linear algebra over Q (fraction-free Bareiss on integer rows)
// and over F_p (plain Gaussian elimination). Pivots are always the first
// nonzero entry found scanning rows top-down, so every result is deterministic.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <type_traits>
#include <vector>

#include "tercert/errors.hpp"
#include "tercert/field.hpp"
#include "tercert/matrix.hpp"

namespace tercert {

struct EliminationOptions {
  /// Decide full rank / nonsingularity modulo one 31-bit prime first; only
  /// deficient answers are recomputed exactly. Never changes results.
  bool modular_prefilter = false;
  /// 0 selects the default prefilter prime.
  std::uint32_t prefilter_prime = 0;
};

/// A prime in [2^30, 2^31) drawn from a seeded generator.
inline std::uint32_t random_prime_31(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint32_t> dist(1u << 30, (1u << 31) - 1);
  for (;;) {
    const std::uint32_t c = dist(gen) | 1u;
    if (is_prime_u32(c)) return c;
  }
}

inline std::uint32_t default_prefilter_prime() {
  static const std::uint32_t p = random_prime_31(0x7e7ace27ull);
  return p;
}

/// Row echelon form: `rows` holds the rank nonzero rows, `pivot_cols` their pivot columns.
template <ExactField F>
struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  std::vector<Vec<F>> rows;
  /// det(echelon block) / det(input) for square full-rank input; see determinant().
  scalar_t<F> det_factor;
  bool odd_swaps = false;
};

namespace detail {

struct IntegerEchelon {
  std::vector<std::vector<mpz_class>> a;  // all rows, eliminated in place
  std::vector<std::size_t> pivot_cols;
  bool odd_swaps = false;
};

/// Fraction-free elimination. After s pivots every live entry is an
/// (s+1)-minor of the input, so each division by the previous pivot is exact.
inline IntegerEchelon bareiss(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  IntegerEchelon out;
  const std::size_t rows = a.size();
  mpz_class prev = 1;
  mpz_class t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      out.odd_swaps = !out.odd_swaps;
    }
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = piv * a[i][j];
        t -= a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.a = std::move(a);
  return out;
}

/// Rows of a rational matrix scaled to integers by the lcm of their denominators.
/// Returns the integer rows and the product of the scale factors.
inline std::pair<std::vector<std::vector<mpz_class>>, mpz_class> integer_rows(
    const Matrix<RationalField>& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  mpz_class scale_product = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (const auto& e : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& q = m(r, c).value();
      out[r][c] = q.get_num() * (l / q.get_den());
    }
    scale_product *= l;
  }
  return {std::move(out), std::move(scale_product)};
}

/// Rank of an integer matrix reduced modulo p.
inline std::size_t rank_mod_p(const std::vector<std::vector<mpz_class>>& a, std::size_t cols,
                              std::uint32_t p) {
  std::vector<std::vector<std::uint64_t>> m(a.size(), std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_class v = a[r][c] % p;
      if (v < 0) v += p;
      m[r][c] = v.get_ui();
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = ModP(p, m[rank][c]).inverse().residue();
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t factor = m[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + (p - factor) * m[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

template <ExactField F>
Echelon<F> echelon(const Matrix<F>& m) {
  const F& field = m.field();
  Echelon<F> out{.rank = 0, .pivot_cols = {}, .rows = {}, .det_factor = field.one()};
  if constexpr (std::is_same_v<F, RationalField>) {
    auto [ints, scale] = detail::integer_rows(m);
    auto ie = detail::bareiss(std::move(ints), m.cols());
    out.rank = ie.pivot_cols.size();
    out.pivot_cols = ie.pivot_cols;
    out.odd_swaps = ie.odd_swaps;
    out.rows.reserve(out.rank);
    for (std::size_t r = 0; r < out.rank; ++r) {
      Vec<F> row;
      row.reserve(m.cols());
      for (const auto& e : ie.a[r]) row.push_back(field.from_mpz(e));
      out.rows.push_back(std::move(row));
    }
    // Square full rank: last Bareiss pivot = det of the integer-scaled input.
    out.det_factor = field.from_mpz(scale);
  } else {
    std::vector<Vec<F>> a;
    a.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) a.emplace_back(m.row(r).begin(), m.row(r).end());
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
      std::size_t p = r;
      while (p < a.size() && a[p][c].is_zero()) ++p;
      if (p == a.size()) continue;
      if (p != r) {
        std::swap(a[p], a[r]);
        out.odd_swaps = !out.odd_swaps;
      }
      const auto inv = a[r][c].inverse();
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c].is_zero()) continue;
        const auto factor = a[i][c] * inv;
        for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= factor * a[r][j];
      }
      out.pivot_cols.push_back(c);
      ++r;
    }
    out.rank = r;
    a.resize(r);
    out.rows = std::move(a);
  }
  return out;
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m, const EliminationOptions& opts = {}) {
  if constexpr (std::is_same_v<F, RationalField>) {
    if (opts.modular_prefilter) {
      const std::size_t full = std::min(m.rows(), m.cols());
      const std::uint32_t p = opts.prefilter_prime ? opts.prefilter_prime : default_prefilter_prime();
      auto ints = detail::integer_rows(m).first;
      // rank mod p never exceeds the rank over Q.
      if (detail::rank_mod_p(ints, m.cols(), p) == full) return full;
    }
  }
  return echelon(m).rank;
}

template <ExactField F>
scalar_t<F> determinant(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  const F& field = m.field();
  if (m.rows() == 0) return field.one();
  const auto e = echelon(m);
  if (e.rank < m.rows()) return field.zero();
  scalar_t<F> det = field.one();
  if constexpr (std::is_same_v<F, RationalField>) {
    det = e.rows.back().back() / e.det_factor;
  } else {
    for (std::size_t i = 0; i < e.rank; ++i) det *= e.rows[i][e.pivot_cols[i]];
  }
  return e.odd_swaps ? -det : det;
}

/// Square-matrix nonsingularity; honors the modular prefilter.
template <ExactField F>
bool is_nonsingular(const Matrix<F>& m, const EliminationOptions& opts = {}) {
  if (m.rows() != m.cols()) throw ShapeError("nonsingularity test on a non-square matrix");
  return rank(m, opts) == m.rows();
}

namespace detail {

/// Back substitution on an echelon form, with free variables preset in x.
template <ExactField F>
void back_substitute(const Echelon<F>& e, Vec<F>& x, std::size_t n,
                     const Vec<F>* rhs_column = nullptr) {
  for (std::size_t i = e.rank; i-- > 0;) {
    const auto& row = e.rows[i];
    const std::size_t pc = e.pivot_cols[i];
    auto acc = rhs_column ? (*rhs_column)[i] : x[pc];  // pivot slots start at zero
    for (std::size_t j = pc + 1; j < n; ++j)
      if (!row[j].is_zero() && !x[j].is_zero()) acc -= row[j] * x[j];
    x[pc] = acc / row[pc];
  }
}

}  // namespace detail

/// Basis of the right null space, one vector per free column in ascending
/// order, each scaled so its first nonzero entry is 1.
template <ExactField F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  const F& field = m.field();
  const auto e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<F> x(m.cols(), field.zero());
    x[f] = field.one();
    detail::back_substitute(e, x, m.cols());
    for (const auto& v : x) {
      if (!v.is_zero()) {
        const auto inv = v.inverse();
        for (auto& y : x) y *= inv;
        break;
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Solves cols * c = v. Non-unique systems get their free variables set to 0.
template <ExactField F>
std::optional<Vec<F>> coords_in_span(const Vec<F>& v, const Matrix<F>& cols) {
  const F& field = cols.field();
  if (v.size() != cols.rows())
    throw ShapeError("vector of length " + std::to_string(v.size()) + " against " +
                     std::to_string(cols.rows()) + " matrix rows");
  for (const auto& x : v) field.check(x);
  const std::size_t n = cols.cols();
  Matrix<F> aug(field, cols.rows(), n + 1);
  for (std::size_t r = 0; r < cols.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = cols(r, c);
    aug(r, n) = v[r];
  }
  const auto e = echelon(aug);
  if (e.rank > 0 && e.pivot_cols.back() == n) return std::nullopt;
  Vec<F> rhs;
  rhs.reserve(e.rank);
  for (const auto& row : e.rows) rhs.push_back(row[n]);
  Vec<F> x(n, field.zero());
  detail::back_substitute(e, x, n, &rhs);
  return x;
}

}  // namespace tercert
