#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "tercert/errors.hpp"

namespace tercert {

class RationalField;

/// Arbitrary-precision rational, always reduced with a positive denominator.
class Rational {
 public:
  using field_type = RationalField;

  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses "p", "-p" or "p/q" in decimal.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& x) {
      const auto b = x.find_first_not_of(" \t");
      const auto e = x.find_last_not_of(" \t");
      x = b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw InputError("empty rational literal");
    const auto slash = s.find('/');
    mpz_class num, den = 1;
    auto parse_int = [&](const std::string& part, mpz_class& out) {
      std::string body = part;
      if (!body.empty() && body[0] == '+') body.erase(0, 1);
      const std::size_t start = (!body.empty() && body[0] == '-') ? 1 : 0;
      if (body.size() == start) throw InputError("malformed rational literal '" + s + "'");
      for (std::size_t i = start; i < body.size(); ++i)
        if (body[i] < '0' || body[i] > '9') throw InputError("malformed rational literal '" + s + "'");
      out.set_str(body, 10);
    };
    if (slash == std::string::npos) {
      parse_int(s, num);
    } else {
      parse_int(s.substr(0, slash), num);
      parse_int(s.substr(slash + 1), den);
    }
    return Rational(num, den);
  }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const { return Rational(1) / *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  RationalField field() const;

 private:
  mpq_class v_;
};

/// The field of rationals; stateless.
class RationalField {
 public:
  using scalar = Rational;

  Rational from_int(long long n) const { return Rational(mpq_class(mpz_class(std::to_string(n)))); }
  Rational from_mpz(const mpz_class& n) const { return Rational(mpq_class(n)); }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational parse(std::string_view s) const { return Rational::parse(s); }
  void check(const Rational&) const {}
  std::string name() const { return "rational"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

inline RationalField Rational::field() const { return {}; }

}  // namespace tercert
