#pragma once

#include <cstdint>
#include <utility>

#include "higgs/arith/matrix.hpp"
#include "higgs/arith/random.hpp"
#include "higgs/spectral/twisted_endo.hpp"

namespace higgs::hitchin {

using arith::Fp;
using arith::PrimeField;
using arith::Rng;
using spectral::SplittingType;
using spectral::TwistedEndo;

/// Uniform independent coefficients in every admissible monomial slot.
inline TwistedEndo<Fp> random_endo(const SplittingType& st, int k, const PrimeField& field, Rng& rng) {
  TwistedEndo<Fp> phi(field, st, k);
  for (std::size_t r = 0; r < phi.n(); ++r)
    for (std::size_t c = 0; c < phi.n(); ++c) {
      arith::BinaryForm<Fp> f(field, phi.twist_at(r, c));
      for (int a = 0; a <= f.twist(); ++a) f.coeff(a) = arith::random_element(field, rng);
      phi.set(r, c, std::move(f));
    }
  return phi;
}

inline TwistedEndo<Fp> random_endo(const SplittingType& st, int k, const PrimeField& field,
                                   std::uint64_t seed) {
  Rng rng(seed);
  return random_endo(st, k, field, rng);
}

/// Random g in Aut(E) together with its inverse: g = D (1 + M) with D
/// block-diagonal constant and invertible, M strictly block lower triangular.
inline std::pair<TwistedEndo<Fp>, TwistedEndo<Fp>> random_automorphism(const SplittingType& st,
                                                                       const PrimeField& field,
                                                                       Rng& rng) {
  const std::size_t n = static_cast<std::size_t>(st.n());
  TwistedEndo<Fp> d(field, st, 0), d_inv(field, st, 0), m(field, st, 0);
  std::size_t start = 0;
  for (int mult : st.m()) {
    const auto size = static_cast<std::size_t>(mult);
    while (true) {
      arith::Matrix<Fp> block(field, size, size);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) block(i, j) = arith::random_element(field, rng);
      const auto inv = block.inverse();
      if (!inv) continue;
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
          d.set(start + i, start + j, arith::BinaryForm<Fp>::constant(block(i, j)));
          d_inv.set(start + i, start + j, arith::BinaryForm<Fp>::constant((*inv)(i, j)));
        }
      break;
    }
    start += size;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (st.block_of(static_cast<int>(r)) <= st.block_of(static_cast<int>(c))) continue;
      arith::BinaryForm<Fp> f(field, m.twist_at(r, c));
      for (int a = 0; a <= f.twist(); ++a) f.coeff(a) = arith::random_element(field, rng);
      m.set(r, c, std::move(f));
    }
  const auto id = TwistedEndo<Fp>::identity(field, st);
  // (1 + M)^-1 = sum_j (-M)^j, M nilpotent of order at most the number of blocks
  TwistedEndo<Fp> unipotent_inv = id;
  TwistedEndo<Fp> power = id;
  for (int j = 1; j < st.blocks(); ++j) {
    power = power * m;
    unipotent_inv = j % 2 ? unipotent_inv - power : unipotent_inv + power;
  }
  return {d * (id + m), unipotent_inv * d_inv};
}

}  // namespace higgs::hitchin
