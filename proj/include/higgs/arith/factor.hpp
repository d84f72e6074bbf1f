#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "higgs/arith/poly.hpp"
#include "higgs/arith/random.hpp"

namespace higgs::arith {

// Factorization of univariate polynomials over a finite field of odd order q
// (Cantor-Zassenhaus). Squarefree decomposition assumes char > degree, which
// every caller guarantees.

template <FiniteField F>
struct Factor {
  Poly<F> factor;  // monic irreducible
  int multiplicity;
};

namespace detail {

template <FiniteField F>
Poly<F> x_poly(const typename F::Context& ctx) {
  return Poly<F>(ctx, {ctx.zero(), ctx.one()});
}

/// Splits a squarefree product of irreducibles of degree d into them.
template <FiniteField F>
void equal_degree_split(const Poly<F>& f, int d, Rng& rng, std::vector<Poly<F>>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const auto& ctx = f.context();
  const std::uint64_t q = ctx.size();
  const Poly<F> one(ctx, {ctx.one()});
  while (true) {
    std::vector<F> coeffs;
    for (int i = 0; i < f.degree(); ++i) coeffs.push_back(ctx.element(uniform_below(rng, q)));
    Poly<F> a(ctx, std::move(coeffs));
    if (a.degree() < 1) continue;
    // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
    Poly<F> conj = a % f;
    Poly<F> prod = conj;
    for (int i = 1; i < d; ++i) {
      conj = powmod(conj, q, f);
      prod = (prod * conj) % f;
    }
    Poly<F> b = powmod(prod, (q - 1) / 2, f) - one;
    Poly<F> g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(exact_quotient(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Yun's squarefree decomposition: f = lc * prod_i a_i^i with a_i squarefree
/// and pairwise coprime. Returns (a_i, i) for nonconstant a_i.
template <Field F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const Poly<F>& f) {
  std::vector<std::pair<Poly<F>, int>> out;
  if (f.degree() < 1) return out;
  Poly<F> a = f.monic();
  Poly<F> b = a.derivative();
  Poly<F> c = gcd(a, b);
  Poly<F> w = exact_quotient(a, c);
  Poly<F> y = exact_quotient(b, c);
  Poly<F> z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    Poly<F> g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients). Deterministic for a given input.
template <FiniteField F>
std::vector<Factor<F>> factor(const Poly<F>& f) {
  if (f.is_zero()) throw PreconditionError("factor: zero polynomial");
  const auto& ctx = f.context();
  if (ctx.size() % 2 == 0) throw PreconditionError("factor: even field order unsupported");
  Rng rng(0x5eed + static_cast<std::uint64_t>(f.degree()));
  std::vector<Factor<F>> result;
  for (auto& [part, mult] : squarefree_decomposition(f)) {
    // distinct-degree factorization
    Poly<F> rest = part;
    Poly<F> h = detail::x_poly<F>(ctx);
    const Poly<F> x = h;
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
      h = powmod(h, ctx.size(), rest);
      Poly<F> g = gcd(rest, h - x);
      if (g.degree() > 0) {
        std::vector<Poly<F>> pieces;
        detail::equal_degree_split(g, d, rng, pieces);
        for (auto& piece : pieces) result.push_back({std::move(piece), mult});
        rest = exact_quotient(rest, g);
        h = h % rest;
      }
    }
    if (rest.degree() > 0) result.push_back({rest.monic(), mult});
  }
  std::sort(result.begin(), result.end(), [](const Factor<F>& a, const Factor<F>& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.coeffs() < b.factor.coeffs();
  });
  return result;
}

/// Roots in the base field with multiplicities, ascending by enumeration order.
template <FiniteField F>
std::vector<std::pair<F, int>> roots(const Poly<F>& f) {
  std::vector<std::pair<F, int>> out;
  for (const auto& fac : factor(f))
    if (fac.factor.degree() == 1) out.emplace_back(-fac.factor[0], fac.multiplicity);
  return out;
}

}  // namespace higgs::arith
