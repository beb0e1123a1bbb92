#pragma once

#include <concepts>
#include <string>
#include <vector>

#include "tercert/modp.hpp"
#include "tercert/rational.hpp"

namespace tercert {

/// An exact field the algorithms can be instantiated over.
template <class F>
concept ExactField = requires(const F f, const typename F::scalar& x, long long n) {
  { f.from_int(n) } -> std::same_as<typename F::scalar>;
  { f.zero() } -> std::same_as<typename F::scalar>;
  { f.one() } -> std::same_as<typename F::scalar>;
  { f.name() } -> std::convertible_to<std::string>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x.str() } -> std::convertible_to<std::string>;
  f.check(x);
};

template <class F>
using scalar_t = typename F::scalar;

template <class F>
using Vec = std::vector<scalar_t<F>>;

static_assert(ExactField<RationalField>);
static_assert(ExactField<PrimeField>);

}  // namespace tercert
