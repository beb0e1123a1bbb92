#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace tercert {

/// binom(n, r), saturating at UINT64_MAX.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

/// Number of monomials of degree t in three variables.
constexpr std::size_t monomial_count(std::size_t t) { return (t + 1) * (t + 2) / 2; }

constexpr std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

/// Lexicographic walk over the r-subsets of {0..n-1}.
class Combinations {
 public:
  Combinations(std::size_t n, std::size_t r) : n_(n), idx_(r) {
    for (std::size_t i = 0; i < r; ++i) idx_[i] = i;
    done_ = r > n;
  }

  bool done() const { return done_; }
  const std::vector<std::size_t>& current() const { return idx_; }

  void next() {
    const std::size_t r = idx_.size();
    std::size_t i = r;
    while (i > 0 && idx_[i - 1] == n_ - r + i - 1) --i;
    if (i == 0) {
      done_ = true;
      return;
    }
    ++idx_[i - 1];
    for (std::size_t j = i; j < r; ++j) idx_[j] = idx_[j - 1] + 1;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> idx_;
  bool done_ = false;
};

}  // namespace tercert
