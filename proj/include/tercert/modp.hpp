#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "tercert/errors.hpp"
#include "tercert/rational.hpp"

namespace tercert {

/// Deterministic Miller-Rabin for 32-bit inputs (bases 2, 7, 61).
constexpr bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % q == 0) return n == q;
  }
  auto powmod = [](std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e) {
      if (e & 1) r = r * b % m;
      b = b * b % m;
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 7u, 61u}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

class PrimeField;

/// Residue in F_p. Carries its modulus; combining residues of different moduli throws.
class ModP {
 public:
  using field_type = PrimeField;

  ModP() = default;
  ModP(std::uint32_t p, std::uint64_t v) : p_(p), v_(static_cast<std::uint32_t>(v % p)) {}

  std::uint32_t prime() const { return p_; }
  std::uint32_t residue() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::string str() const { return std::to_string(v_); }

  ModP operator-() const { return ModP(p_, v_ == 0 ? 0 : p_ - v_); }
  ModP& operator+=(const ModP& o) {
    same(o);
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + o.v_) % p_);
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    same(o);
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + p_ - o.v_) % p_);
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    same(o);
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_);
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }

  ModP inverse() const {
    if (v_ == 0) throw InputError("division by zero in F_" + std::to_string(p_));
    // Fermat: v^(p-2).
    std::uint64_t r = 1, b = v_, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return ModP(p_, r);
  }

  friend bool operator==(const ModP& a, const ModP& b) {
    a.same(b);
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const ModP& a, const ModP& b) {
    a.same(b);
    return a.v_ <=> b.v_;
  }

  PrimeField field() const;

 private:
  void same(const ModP& o) const {
    if (p_ != o.p_)
      throw FieldContextError("mixed field contexts F_" + std::to_string(p_) + " and F_" +
                              std::to_string(o.p_));
  }

  std::uint32_t p_ = 0;
  std::uint32_t v_ = 0;
};

/// The prime field F_p for a prime 2 <= p < 2^31.
class PrimeField {
 public:
  using scalar = ModP;

  explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime_u32(p))
      throw InputError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t prime() const { return p_; }

  ModP from_int(long long n) const {
    const long long r = n % static_cast<long long>(p_);
    return ModP(p_, static_cast<std::uint64_t>(r < 0 ? r + p_ : r));
  }
  ModP from_mpz(const mpz_class& n) const {
    mpz_class r = n % p_;
    if (r < 0) r += p_;
    return ModP(p_, r.get_ui());
  }
  ModP zero() const { return ModP(p_, 0); }
  ModP one() const { return ModP(p_, 1); }

  /// Accepts integers (reduced mod p) and "a/b" (a * b^-1).
  ModP parse(std::string_view s) const {
    const Rational q = Rational::parse(s);
    const ModP den = from_mpz(q.denominator());
    if (den.is_zero()) throw InputError("denominator vanishes mod " + std::to_string(p_));
    return from_mpz(q.numerator()) / den;
  }

  void check(const ModP& x) const {
    if (x.prime() != p_)
      throw FieldContextError("scalar from F_" + std::to_string(x.prime()) + " used in F_" +
                              std::to_string(p_));
  }
  std::string name() const { return "F_" + std::to_string(p_); }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

inline PrimeField ModP::field() const { return PrimeField(p_); }

}  // namespace tercert
