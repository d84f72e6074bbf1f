#pragma once

#include <cstddef>
#include <vector>

#include "higgs/arith/determinant.hpp"
#include "higgs/arith/dual.hpp"
#include "higgs/spectral/spectral_data.hpp"
#include "higgs/spectral/twisted_endo.hpp"

namespace higgs::spectral {

/// (s_1, ..., s_n) with det(T - A) = T^n + s_1 T^(n-1) + ... + s_n for a
/// row-major n x n matrix over any commutative ring with exact arithmetic.
/// Sums of principal minors (memoized Laplace) up to n = 4, Berkowitz beyond.
template <class R>
std::vector<R> char_coefficients(const std::vector<R>& a, std::size_t n) {
  std::vector<R> s;
  if (n <= 4) {
    arith::LaplaceExpander<R> lap(a, n);
    auto sums = lap.principal_minor_sums();
    for (std::size_t i = 0; i < n; ++i) s.push_back(i % 2 == 0 ? -sums[i] : sums[i]);
  } else {
    auto p = arith::berkowitz(a, n);
    s.assign(p.begin() + 1, p.end());
  }
  return s;
}

template <Field F>
SpectralData<F> char_poly(const TwistedEndo<F>& phi) {
  if (phi.k() <= 0) throw PreconditionError("char_poly: needs k > 0");
  auto s = char_coefficients(phi.entries(), phi.n());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].twist() != static_cast<int>(i + 1) * phi.k())
      throw TwistMismatch("char_poly: coefficient s_" + std::to_string(i + 1) + " came out with twist " +
                          std::to_string(s[i].twist()));
  return SpectralData<F>(phi.k(), std::move(s));
}

/// Coefficients of char_poly(phi + eps * delta) as dual forms.
template <Field F>
std::vector<arith::DualForm<F>> char_poly_dual(const TwistedEndo<F>& phi, const TwistedEndo<F>& delta) {
  std::vector<arith::DualForm<F>> a;
  a.reserve(phi.entries().size());
  for (std::size_t i = 0; i < phi.entries().size(); ++i)
    a.emplace_back(phi.entries()[i], delta.entries()[i]);
  return char_coefficients(a, phi.n());
}

}  // namespace higgs::spectral
