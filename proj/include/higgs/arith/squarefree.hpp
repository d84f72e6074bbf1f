#pragma once

#include "higgs/arith/binary_form.hpp"

namespace higgs::arith {

template <Field F>
struct SquarefreeResult {
  BinaryForm<F> squarefree;
  bool repeated_roots_detected;
};

/// Order of vanishing at the point at infinity, read off in the swapped chart.
template <Field F>
int order_at_infinity(const BinaryForm<F>& f) {
  const BinaryForm<F> swapped = f.chart_swap();
  int order = 0;
  while (order <= f.twist() && swapped[order].is_zero()) ++order;
  return order;
}

/// Squarefree part of a nonzero binary form over P^1, monic in the affine
/// chart, together with whether any root (affine or at infinity) is repeated.
/// The squarefree part vanishes simply at infinity iff f vanishes there.
/// Requires char = 0 or char > twist, so that gcd(f, f') detects repetition.
template <Field F>
SquarefreeResult<F> squarefree_part(const BinaryForm<F>& f) {
  if (f.is_zero()) throw PreconditionError("squarefree_part: zero form");
  require_characteristic_above(f.context(), static_cast<std::uint64_t>(f.twist()),
                               "squarefree_part");
  const Poly<F> p = f.affine();
  const Poly<F> g = gcd(p, p.derivative());
  const Poly<F> core = exact_quotient(p, g).monic();
  const int at_infinity = order_at_infinity(f);
  const bool repeated = g.degree() > 0 || at_infinity >= 2;
  const int twist = core.degree() + (at_infinity > 0 ? 1 : 0);
  return {BinaryForm<F>::from_affine(core, twist), repeated};
}

}  // namespace higgs::arith
