#pragma once

#include <cstdint>
#include <random>

#include "higgs/arith/field.hpp"

namespace higgs::arith {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent per-sample seeds from a
/// master seed so that results do not depend on evaluation order.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

/// Uniform integer in [0, bound) by rejection; portable across standard
/// libraries, unlike std::uniform_int_distribution.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

inline Fp random_element(const PrimeField& field, Rng& rng) {
  return field.element(uniform_below(rng, field.modulus()));
}

inline Fp random_nonzero(const PrimeField& field, Rng& rng) {
  return field.element(1 + uniform_below(rng, field.modulus() - 1));
}

/// Small random rationals (numerator in [-bound, bound], denominator in
/// [1, bound]) for exactness tests over Q.
inline Rational random_element(const RationalField&, Rng& rng, std::int64_t bound = 9) {
  const auto num = static_cast<std::int64_t>(uniform_below(rng, 2 * bound + 1)) - bound;
  const auto den = static_cast<std::int64_t>(uniform_below(rng, bound)) + 1;
  return Rational(num, den);
}

}  // namespace higgs::arith
