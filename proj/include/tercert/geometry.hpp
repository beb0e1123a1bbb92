#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tercert/combinatorics.hpp"
#include "tercert/errors.hpp"
#include "tercert/field.hpp"
#include "tercert/linalg.hpp"
#include "tercert/matrix.hpp"

namespace tercert {

/// Exponent triple (a, b, c) of X^a Y^b Z^c.
struct Monomial {
  unsigned a = 0, b = 0, c = 0;
  unsigned degree() const { return a + b + c; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Degree-t monomials sorted lexicographically descending by (a, b, c):
/// X^t, X^{t-1}Y, X^{t-1}Z, X^{t-2}Y^2, ... This order indexes every
/// coefficient vector and every matrix column in the library.
inline std::vector<Monomial> monomial_order(unsigned t) {
  std::vector<Monomial> out;
  out.reserve(monomial_count(t));
  for (unsigned a = t + 1; a-- > 0;)
    for (unsigned b = t - a + 1; b-- > 0;) out.push_back({a, b, t - a - b});
  return out;
}

/// Position of a monomial in monomial_order(its degree).
inline std::size_t monomial_index(const Monomial& m) {
  const unsigned t = m.degree();
  // Monomials with a larger X-exponent come first: sum_{a' > a} (t - a' + 1).
  const unsigned rest = t - m.a;
  return monomial_count(rest) - (rest + 1) + (rest - m.b);
}

/// d! / (a! b! c!).
inline std::uint64_t multinomial(const Monomial& m) {
  return binomial(m.degree(), m.a) * binomial(m.b + m.c, m.b);
}

/// Point of P^2 in canonical form: the first nonzero coordinate is 1.
template <ExactField F>
class ProjectivePoint {
 public:
  using scalar = scalar_t<F>;

  ProjectivePoint(const F& field, std::array<scalar, 3> coords) : coords_(std::move(coords)) {
    for (const auto& c : coords_) field.check(c);
    auto lead = std::find_if(coords_.begin(), coords_.end(), [](const scalar& x) { return !x.is_zero(); });
    if (lead == coords_.end()) throw InputError("projective point with all coordinates zero");
    const auto inv = lead->inverse();
    for (auto& c : coords_) c *= inv;
  }

  ProjectivePoint(const F& field, long long x, long long y, long long z)
      : ProjectivePoint(field, {field.from_int(x), field.from_int(y), field.from_int(z)}) {}

  const std::array<scalar, 3>& coords() const { return coords_; }
  const scalar& operator[](std::size_t i) const { return coords_[i]; }

  std::string str() const {
    return "(" + coords_[0].str() + ":" + coords_[1].str() + ":" + coords_[2].str() + ")";
  }

  friend bool operator==(const ProjectivePoint& p, const ProjectivePoint& q) { return p.coords_ == q.coords_; }
  friend auto operator<=>(const ProjectivePoint& p, const ProjectivePoint& q) { return p.coords_ <=> q.coords_; }

 private:
  std::array<scalar, 3> coords_;
};

template <ExactField F>
using PointList = std::vector<ProjectivePoint<F>>;

/// Throws InputError when two points coincide.
template <ExactField F>
void require_distinct(const PointList<F>& pts) {
  auto sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw InputError("duplicate point " + dup->str());
}

template <ExactField F>
PointList<F> sorted_points(PointList<F> pts) {
  std::sort(pts.begin(), pts.end());
  return pts;
}

/// Ternary form of degree d; coefficients follow monomial_order(d).
template <ExactField F>
class TernaryForm {
 public:
  TernaryForm(F field, unsigned degree, Vec<F> coeffs)
      : field_(std::move(field)), degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 1) throw InputError("form degree must be at least 1");
    if (coeffs_.size() != monomial_count(degree_))
      throw InputError("degree " + std::to_string(degree_) + " form needs " +
                       std::to_string(monomial_count(degree_)) + " coefficients, got " +
                       std::to_string(coeffs_.size()));
    for (const auto& c : coeffs_) field_.check(c);
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); }))
      throw InputError("the zero form is not a valid tensor");
  }

  const F& field() const { return field_; }
  unsigned degree() const { return degree_; }
  const Vec<F>& coeffs() const { return coeffs_; }

  TernaryForm scaled(const scalar_t<F>& s) const {
    Vec<F> c = coeffs_;
    for (auto& x : c) x *= s;
    return TernaryForm(field_, degree_, std::move(c));
  }

  friend bool operator==(const TernaryForm& a, const TernaryForm& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  F field_;
  unsigned degree_;
  Vec<F> coeffs_;
};

template <ExactField F>
struct Term {
  ProjectivePoint<F> point;
  scalar_t<F> lambda;
};

/// f = sum lambda_i * (x_i0 X + x_i1 Y + x_i2 Z)^d over distinct points, nonzero lambdas.
template <ExactField F>
class Decomposition {
 public:
  Decomposition(F field, unsigned degree, std::vector<Term<F>> terms)
      : field_(std::move(field)), degree_(degree), terms_(std::move(terms)) {
    if (degree_ < 1) throw InputError("decomposition degree must be at least 1");
    if (terms_.empty()) throw InputError("decomposition needs at least one term");
    for (const auto& t : terms_) {
      field_.check(t.lambda);
      if (t.lambda.is_zero()) throw InputError("zero lambda for point " + t.point.str());
    }
    require_distinct(points());
  }

  const F& field() const { return field_; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term<F>>& terms() const { return terms_; }

  PointList<F> points() const {
    PointList<F> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(t.point);
    return out;
  }

 private:
  F field_;
  unsigned degree_;
  std::vector<Term<F>> terms_;
};

/// Row of all degree-t monomials evaluated at the canonical coordinates of x.
template <ExactField F>
Vec<F> eval_monomials(const F& field, const ProjectivePoint<F>& x, unsigned t) {
  std::array<Vec<F>, 3> pw;
  for (std::size_t i = 0; i < 3; ++i) {
    pw[i].reserve(t + 1);
    pw[i].push_back(field.one());
    for (unsigned e = 1; e <= t; ++e) pw[i].push_back(pw[i].back() * x[i]);
  }
  Vec<F> out;
  out.reserve(monomial_count(t));
  for (const auto& m : monomial_order(t)) out.push_back(pw[0][m.a] * pw[1][m.b] * pw[2][m.c]);
  return out;
}

/// Coefficients of (x0 X + x1 Y + x2 Z)^d: eval_monomials scaled by multinomials.
template <ExactField F>
Vec<F> power_coeffs(const F& field, const ProjectivePoint<F>& x, unsigned d) {
  auto v = eval_monomials(field, x, d);
  const auto order = monomial_order(d);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] *= field.from_int(static_cast<long long>(multinomial(order[i])));
  return v;
}

template <ExactField F>
Matrix<F> evaluation_matrix(const F& field, const PointList<F>& pts, unsigned t) {
  require_distinct(pts);
  std::vector<Vec<F>> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) rows.push_back(eval_monomials(field, p, t));
  return Matrix<F>::from_rows(field, rows, monomial_count(t));
}

/// k x binom(d+2,2) matrix whose rows are the d-th powers of the points' linear forms.
template <ExactField F>
Matrix<F> veronese_matrix(const F& field, const PointList<F>& pts, unsigned d) {
  std::vector<Vec<F>> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) rows.push_back(power_coeffs(field, p, d));
  return Matrix<F>::from_rows(field, rows, monomial_count(d));
}

template <ExactField F>
TernaryForm<F> synthesize(const Decomposition<F>& dec) {
  const F& field = dec.field();
  Vec<F> sum(monomial_count(dec.degree()), field.zero());
  for (const auto& t : dec.terms()) {
    const auto v = power_coeffs(field, t.point, dec.degree());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += t.lambda * v[i];
  }
  if (std::all_of(sum.begin(), sum.end(), [](const auto& c) { return c.is_zero(); }))
    throw DegenerateDecompositionError("decomposition terms cancel to the zero form");
  return TernaryForm<F>(field, dec.degree(), std::move(sum));
}

/// The nonzero sigma with synthesize(dec) = sigma * f, if any.
template <ExactField F>
std::optional<scalar_t<F>> verify_decomposition(const TernaryForm<F>& f, const Decomposition<F>& dec) {
  if (f.degree() != dec.degree())
    throw InputError("form has degree " + std::to_string(f.degree()) + " but decomposition has degree " +
                     std::to_string(dec.degree()));
  if (!(f.field() == dec.field())) throw FieldContextError("form and decomposition over different fields");
  std::optional<TernaryForm<F>> s;
  try {
    s = synthesize(dec);
  } catch (const DegenerateDecompositionError&) {
    return std::nullopt;
  }
  const auto& fc = f.coeffs();
  const auto& sc = s->coeffs();
  std::size_t lead = 0;
  while (fc[lead].is_zero()) ++lead;
  const auto sigma = sc[lead] / fc[lead];
  if (sigma.is_zero()) return std::nullopt;
  for (std::size_t i = 0; i < fc.size(); ++i)
    if (!(sc[i] == sigma * fc[i])) return std::nullopt;
  return sigma;
}

/// Catalecticant of f in degrees (a, d - a). With f = sum_alpha c_alpha x^alpha and
/// symmetric-tensor entries t_alpha = c_alpha / multinomial(alpha), the entry at
/// (row monomial beta of degree a, column monomial gamma of degree d - a) is
/// t_{beta+gamma}. For f = l^d this is the outer product of eval_monomials(l, a)
/// and eval_monomials(l, d - a). Over F_p the multinomials must be units, so p > d.
template <ExactField F>
Matrix<F> catalecticant(const TernaryForm<F>& f, unsigned a) {
  const unsigned d = f.degree();
  if (a < 1 || a + 1 > d)
    throw InputError("catalecticant split " + std::to_string(a) + " outside 1.." + std::to_string(d) + "-1");
  const F& field = f.field();
  const auto rows = monomial_order(a);
  const auto cols = monomial_order(d - a);
  Matrix<F> m(field, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Monomial s{rows[i].a + cols[j].a, rows[i].b + cols[j].b, rows[i].c + cols[j].c};
      const auto mult = field.from_int(static_cast<long long>(multinomial(s)));
      if (mult.is_zero())
        throw InputError("catalecticant over " + field.name() + " needs the characteristic to exceed the degree");
      m(i, j) = f.coeffs()[monomial_index(s)] / mult;
    }
  }
  return m;
}

}  // namespace tercert
