#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "higgs/arith/matrix.hpp"
#include "higgs/hitchin/dimensions.hpp"
#include "higgs/spectral/char_poly.hpp"
#include "higgs/spectral/commutant.hpp"
#include "higgs/spectral/twisted_endo.hpp"

namespace higgs::hitchin {

using arith::Fp;
using arith::Matrix;
using spectral::TwistedEndo;

/// Row offsets of s_1, ..., s_n in the flattened Hitchin base; the last
/// element is base_dim.
inline std::vector<std::size_t> base_offsets(int n, int k) {
  std::vector<std::size_t> off{0};
  for (int i = 1; i <= n; ++i) off.push_back(off.back() + static_cast<std::size_t>(i * k + 1));
  return off;
}

/// Differential of phi -> char_poly(phi) at phi, as a base_dim x
/// end_twist_dim matrix; column order follows spectral::monomial_basis.
/// One dual-number characteristic polynomial per entry, in the direction of
/// the constant 1 there; the direction x^a is the same column shifted down
/// by a, since the derivative is linear in the direction.
template <arith::Field F>
Matrix<F> hitchin_differential(const TwistedEndo<F>& phi) {
  const auto& ctx = phi.context();
  const std::size_t n = phi.n();
  const int k = phi.k();
  const auto rows = base_offsets(static_cast<int>(n), k);
  const auto basis = spectral::monomial_basis(phi);
  Matrix<F> out(ctx, rows.back(), basis.size());
  TwistedEndo<F> delta(ctx, phi.splitting_type(), k);
  std::size_t col = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const int t = phi.twist_at(r, c);
      if (t < 0) continue;
      delta.set(r, c, arith::BinaryForm<F>::monomial(ctx.one(), t, 0));
      const auto s = spectral::char_poly_dual(phi, delta);
      delta.set(r, c, arith::BinaryForm<F>(ctx, t));
      for (int a = 0; a <= t; ++a, ++col) {
        for (std::size_t i = 0; i < n; ++i) {
          const auto& d = s[i].derivative();
          for (int b = 0; b <= d.twist(); ++b) {
            if (d[b].is_zero()) continue;
            if (b + a > d.twist()) throw std::logic_error("hitchin_differential: degree bound violated");
            out(rows[i] + static_cast<std::size_t>(b + a), col) = d[b];
          }
        }
      }
    }
  return out;
}

/// Reference version: one dual-number characteristic polynomial per basis
/// direction x^a E_rc, no shifting.
template <arith::Field F>
Matrix<F> hitchin_differential_direct(const TwistedEndo<F>& phi) {
  const auto& ctx = phi.context();
  const std::size_t n = phi.n();
  const auto rows = base_offsets(static_cast<int>(n), phi.k());
  const auto basis = spectral::monomial_basis(phi);
  Matrix<F> out(ctx, rows.back(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto [r, c, a] = basis[col];
    TwistedEndo<F> delta(ctx, phi.splitting_type(), phi.k());
    delta.set(r, c, arith::BinaryForm<F>::monomial(ctx.one(), phi.twist_at(r, c), a));
    const auto s = spectral::char_poly_dual(phi, delta);
    for (std::size_t i = 0; i < n; ++i)
      for (int b = 0; b <= s[i].derivative().twist(); ++b)
        out(rows[i] + static_cast<std::size_t>(b), col) = s[i].derivative()[b];
  }
  return out;
}

/// Flattened coordinates of a twisted endomorphism in monomial_basis order.
template <arith::Field F>
std::vector<F> flatten(const TwistedEndo<F>& phi) {
  std::vector<F> v;
  for (const auto& f : phi.entries())
    for (const auto& c : f.coeffs()) v.push_back(c);
  return v;
}

struct SampleResult {
  std::uint64_t seed = 0;
  std::size_t rank = 0;
  std::size_t orbit_dim = 0;
  /// Empty when no squarefree fiber exists over the base field.
  std::optional<bool> irreducible;
};

struct RankExperiment {
  DimensionReport dims;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<SampleResult> samples{};
  std::size_t max_rank = 0;
  bool dominant = false;
  std::int64_t empirical_fiber_dim = 0;
};

/// Analyses one phi: exact rank of the differential, orbit dimension
/// dim End(E) - commutant_dim, and irreducibility of its characteristic
/// polynomial.
SampleResult analyse_sample(const TwistedEndo<Fp>& phi);

/// Samples are drawn with seeds derive_seed(seed, i), so the outcome does not
/// depend on `threads`. Empirical fiber dimension is
/// end_twist_dim - (aut_dim - 1) - max rank.
RankExperiment run_rank_experiment(const SplittingType& st, int k, std::uint32_t p, std::uint64_t seed,
                                   int samples, int threads = 1);

}  // namespace higgs::hitchin
