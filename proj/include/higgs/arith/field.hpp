#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "higgs/arith/fp.hpp"
#include "higgs/arith/rational.hpp"

namespace higgs::arith {

/// A coefficient field. Elements know their field (`context()`), and the
/// context manufactures constants. Two models ship: Fp and Rational; they
/// never mix, so "mixed-field arithmetic" between them does not compile and
/// mixing two prime moduli throws FieldMismatch.
template <class F>
concept Field = std::copyable<F> && std::equality_comparable<F> &&
    requires(const F a, const F b, const typename F::Context ctx, std::int64_t n,
             std::string_view text) {
      { a + b } -> std::same_as<F>;
      { a - b } -> std::same_as<F>;
      { a * b } -> std::same_as<F>;
      { -a } -> std::same_as<F>;
      { a.inverse() } -> std::same_as<F>;
      { a.is_zero() } -> std::convertible_to<bool>;
      { a.to_string() } -> std::convertible_to<std::string>;
      { a.context() } -> std::same_as<typename F::Context>;
      { ctx.zero() } -> std::same_as<F>;
      { ctx.one() } -> std::same_as<F>;
      { ctx.from_int(n) } -> std::same_as<F>;
      { ctx.parse(text) } -> std::same_as<F>;
      { ctx.characteristic() } -> std::convertible_to<std::uint64_t>;
      { ctx.describe() } -> std::convertible_to<std::string>;
    };

/// Fields whose elements can be enumerated (brute-force searches).
template <class F>
concept FiniteField = Field<F> && requires(const typename F::Context ctx, std::uint64_t i) {
  { ctx.size() } -> std::convertible_to<std::uint64_t>;
  { ctx.element(i) } -> std::same_as<F>;
};

static_assert(Field<Fp>);
static_assert(FiniteField<Fp>);
static_assert(Field<Rational>);

/// Throws PreconditionError unless char(ctx) is 0 or exceeds `bound`.
template <class Context>
void require_characteristic_above(const Context& ctx, std::uint64_t bound, const char* what) {
  const std::uint64_t c = ctx.characteristic();
  if (c != 0 && c <= bound)
    throw PreconditionError(std::string(what) + ": characteristic " + std::to_string(c) +
                            " must exceed " + std::to_string(bound));
}

}  // namespace higgs::arith
