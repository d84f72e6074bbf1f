#pragma once

#include "higgs/spectral/spectral_data.hpp"
#include "higgs/spectral/twisted_endo.hpp"

namespace higgs::spectral {

/// e = (a - (n-1)k, ..., a - k, a), all multiplicities one.
inline SplittingType companion_type(int n, int k, int a) {
  std::vector<int> e;
  for (int i = n - 1; i >= 0; --i) e.push_back(a - i * k);
  return SplittingType::distinct(std::move(e));
}

/// Companion normal form on companion_type(n, k, a): 1's on the
/// superdiagonal (twist 0) and first column (-s_1, ..., -s_n)^T, entry (i,0)
/// having twist (i+1)k. With increasing e this is the matrix
/// [[0, -s_2], [1, -s_1]] of the rank-2 normal form with rows and columns
/// read in reverse order.
template <Field F>
TwistedEndo<F> companion(const SpectralData<F>& s, int a) {
  const auto& ctx = s.context();
  const int n = s.n();
  TwistedEndo<F> phi(ctx, companion_type(n, s.k(), a), s.k());
  for (int i = 0; i < n; ++i) {
    phi.set(static_cast<std::size_t>(i), 0, -s.s(i + 1));
    if (i + 1 < n)
      phi.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1),
              BinaryForm<F>::constant(ctx.one()));
  }
  return phi;
}

}  // namespace higgs::spectral
