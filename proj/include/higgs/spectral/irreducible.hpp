#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "higgs/arith/factor.hpp"
#include "higgs/spectral/branching.hpp"

namespace higgs::spectral {

namespace detail {

template <class F>
using Poly = arith::Poly<F>;

/// Polynomial in T with coefficients in F[y]; index i holds the T^i coefficient.
template <class F>
using BiPoly = std::vector<Poly<F>>;

/// Coefficient of y^j in each T-coefficient, as a polynomial in T.
template <arith::FiniteField F>
Poly<F> y_slice(const BiPoly<F>& f, int j) {
  const auto& ctx = f.front().context();
  std::vector<F> v;
  for (const auto& c : f) v.push_back(c[j]);
  return Poly<F>(ctx, std::move(v));
}

/// Exact division of a monic-in-T bivariate polynomial by a monic one;
/// nullopt if the remainder is nonzero.
template <arith::FiniteField F>
std::optional<BiPoly<F>> divide_monic(BiPoly<F> a, const BiPoly<F>& b) {
  const auto& ctx = a.front().context();
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  BiPoly<F> q(static_cast<std::size_t>(da - db + 1), Poly<F>(ctx));
  for (int i = da; i >= db; --i) {
    const Poly<F> lead = a[i];
    if (lead.is_zero()) continue;
    q[i - db] = lead;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= lead * b[j];
  }
  for (int i = 0; i < db; ++i)
    if (!a[i].is_zero()) return std::nullopt;
  return q;
}

/// Lifts chi = G0 H0 (mod y) to chi = G H (mod y^precision), G monic of
/// degree deg G0, by linear Hensel steps. G0 and H0 must be coprime.
template <arith::FiniteField F>
BiPoly<F> hensel_lift(const BiPoly<F>& chi, const Poly<F>& g0, const Poly<F>& h0, int precision) {
  const auto& ctx = g0.context();
  const auto [g, s, t] = arith::ext_gcd(g0, h0);  // s g0 + t h0 = 1
  std::vector<Poly<F>> gs{g0}, hs{h0};             // coefficients of y^j
  for (int j = 1; j < precision; ++j) {
    Poly<F> e = y_slice(chi, j);
    for (int i = 1; i < j; ++i) e -= gs[i] * hs[j - i];
    const Poly<F> gj = (e * t) % g0;
    const Poly<F> hj = arith::exact_quotient(e - gj * h0, g0);
    gs.push_back(gj);
    hs.push_back(hj);
  }
  // repackage as coefficients of T^i in F[y]
  const int d = g0.degree();
  BiPoly<F> out(static_cast<std::size_t>(d) + 1, Poly<F>(ctx));
  for (int i = 0; i <= d; ++i) {
    std::vector<F> v;
    for (int j = 0; j < precision; ++j) v.push_back(gs[j][i]);
    out[i] = Poly<F>(ctx, std::move(v));
  }
  return out;
}

}  // namespace detail

/// Affine point at which chi(x0, T) is squarefree, if the scan finds one.
/// Scans at most deg(disc) + 1 points, since disc has no more roots.
template <arith::FiniteField F>
std::optional<F> squarefree_specialization(const SpectralData<F>& s) {
  const BinaryForm<F> disc = discriminant(s);
  if (disc.is_zero()) return std::nullopt;
  const auto& ctx = s.context();
  const std::uint64_t limit = std::min<std::uint64_t>(ctx.size(), static_cast<std::uint64_t>(disc.twist()) + 1);
  for (std::uint64_t i = 0; i < limit; ++i) {
    const F x0 = ctx.element(i);
    if (!disc.eval(x0).is_zero()) return x0;
  }
  return std::nullopt;
}

/// Whether chi = T^n + s_1 T^(n-1) + ... + s_n is irreducible over F(x).
/// Exact: specializes at a point with squarefree fiber, factors the fiber,
/// Hensel-lifts every two-part split modulo y^(2nk+1) and trial-divides the
/// candidates whose coefficients respect deg(coefficient of T^(d-i)) <= ik.
/// Throws PreconditionError if no squarefree fiber exists over the base field.
template <arith::FiniteField F>
bool is_irreducible(const SpectralData<F>& s) {
  const int n = s.n();
  const int k = s.k();
  arith::require_characteristic_above(s.context(), static_cast<std::uint64_t>(n), "is_irreducible");
  if (n == 1) return true;
  const auto x0 = squarefree_specialization(s);
  if (!x0) throw PreconditionError("is_irreducible: no squarefree fiber over the base field");

  const auto& ctx = s.context();
  detail::BiPoly<F> chi(static_cast<std::size_t>(n) + 1, detail::Poly<F>(ctx));
  chi[n] = detail::Poly<F>(ctx, {ctx.one()});
  for (int i = 1; i <= n; ++i) chi[n - i] = s.s(i).affine().shift(*x0);

  const detail::Poly<F> fiber = detail::y_slice(chi, 0);
  std::vector<detail::Poly<F>> parts;
  for (const auto& f : arith::factor(fiber)) parts.push_back(f.factor);
  const std::size_t r = parts.size();
  if (r == 1) return true;

  const int precision = 2 * n * k + 1;
  const std::uint32_t full = (1u << r) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (2 * size > r) continue;
    detail::Poly<F> g0(ctx, {ctx.one()});
    detail::Poly<F> h0(ctx, {ctx.one()});
    for (std::size_t i = 0; i < r; ++i) ((mask >> i) & 1u ? g0 : h0) *= parts[i];
    const auto g = detail::hensel_lift(chi, g0, h0, precision);
    const int d = g0.degree();
    bool fits = true;
    for (int i = 1; i <= d && fits; ++i) fits = g[d - i].degree() <= i * k;
    if (fits && detail::divide_monic(chi, g)) return false;
  }
  return true;
}

}  // namespace higgs::spectral
