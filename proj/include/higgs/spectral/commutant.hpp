#pragma once

#include <cstddef>
#include <vector>

#include "higgs/arith/matrix.hpp"
#include "higgs/spectral/twisted_endo.hpp"

namespace higgs::spectral {

/// Basis of End(E) (or of any twisted Hom space): one monomial x^a in each
/// entry (r, c) with 0 <= a <= twist(r, c).
struct MonomialSlot {
  std::size_t row;
  std::size_t col;
  int power;
};

template <Field F>
std::vector<MonomialSlot> monomial_basis(const TwistedEndo<F>& shape) {
  std::vector<MonomialSlot> out;
  for (std::size_t r = 0; r < shape.n(); ++r)
    for (std::size_t c = 0; c < shape.n(); ++c)
      for (int a = 0; a <= shape.twist_at(r, c); ++a) out.push_back({r, c, a});
  return out;
}

/// Offsets of each entry's coefficient block in the flattened coordinates
/// of a twisted Hom space; the last element is the total dimension.
template <Field F>
std::vector<std::size_t> coordinate_offsets(const TwistedEndo<F>& shape) {
  std::vector<std::size_t> off{0};
  for (std::size_t r = 0; r < shape.n(); ++r)
    for (std::size_t c = 0; c < shape.n(); ++c)
      off.push_back(off.back() + static_cast<std::size_t>(arith::h0(shape.twist_at(r, c))));
  return off;
}

/// Matrix of rho -> (rho (x) id) phi - phi rho from End(E) to the twisted
/// Hom space, columns indexed by monomial_basis of End(E).
template <Field F>
arith::Matrix<F> commutator_matrix(const TwistedEndo<F>& phi) {
  const auto& ctx = phi.context();
  const std::size_t n = phi.n();
  const TwistedEndo<F> end_shape(ctx, phi.splitting_type(), 0);
  const auto basis = monomial_basis(end_shape);
  const auto off = coordinate_offsets(phi);
  arith::Matrix<F> m(ctx, off.back(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto [r, c, a] = basis[col];
    // rho = x^a E_{rc}: (rho phi)_{r j} = x^a phi_{c j}; (phi rho)_{i c} = phi_{i r} x^a
    for (std::size_t j = 0; j < n; ++j) {
      const auto& f = phi(c, j);
      const std::size_t base = off[r * n + j];
      for (std::size_t b = 0; b < f.coeffs().size(); ++b) m(base + b + a, col) += f[static_cast<int>(b)];
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto& f = phi(i, r);
      const std::size_t base = off[i * n + c];
      for (std::size_t b = 0; b < f.coeffs().size(); ++b) m(base + b + a, col) -= f[static_cast<int>(b)];
    }
  }
  return m;
}

/// Dimension of End(E) as a vector space.
template <Field F>
std::size_t end_dim(const TwistedEndo<F>& phi) {
  return TwistedEndo<F>(phi.context(), phi.splitting_type(), 0).coordinate_dim();
}

/// dim { rho in End(E) : (rho (x) id) phi = phi rho }; at least 1 (scalars).
template <Field F>
std::size_t commutant_dim(const TwistedEndo<F>& phi) {
  const auto m = commutator_matrix(phi);
  return m.cols() - m.rank();
}

}  // namespace higgs::spectral
