#pragma once

#include <optional>
#include <string>
#include <vector>

#include "higgs/arith/factor.hpp"
#include "higgs/arith/resultant.hpp"
#include "higgs/arith/squarefree.hpp"
#include "higgs/spectral/spectral_data.hpp"

namespace higgs::spectral {

/// disc(chi) = (-1)^(n(n-1)/2) Res_T(chi, d chi/dT), a form of twist n(n-1)k.
/// For n = 2 this is s_1^2 - 4 s_2.
template <Field F>
BinaryForm<F> discriminant(const SpectralData<F>& s) {
  const int n = s.n();
  arith::require_characteristic_above(s.context(), static_cast<std::uint64_t>(n), "discriminant");
  if (n == 1) return BinaryForm<F>::constant(s.context().one());
  const auto chi = s.chi();
  BinaryForm<F> res = arith::form_resultant(chi, chi.derivative());
  return (n * (n - 1) / 2) % 2 == 0 ? res : -res;
}

enum class BranchTag { flex, bitangent, singular_candidate, unresolved_over_extension };

inline const char* to_string(BranchTag t) {
  switch (t) {
    case BranchTag::flex: return "flex";
    case BranchTag::bitangent: return "bitangent";
    case BranchTag::singular_candidate: return "singular-candidate";
    case BranchTag::unresolved_over_extension: return "unresolved-over-extension";
  }
  return "?";
}

/// A multiple root of the discriminant. `location` is "x=a", "inf", or
/// "root of <irreducible factor>" when the root is not in the base field.
template <Field F>
struct BranchPoint {
  std::string location;
  std::optional<F> x;
  bool at_infinity = false;
  int multiplicity = 0;
  BranchTag tag = BranchTag::unresolved_over_extension;
};

template <Field F>
struct BranchReport {
  BinaryForm<F> discriminant;
  bool squarefree = false;
  std::vector<BranchPoint<F>> points;
};

namespace detail {

/// Tags the fiber of chi over an affine point x0 of the data s.
template <arith::FiniteField F>
BranchTag classify_fiber(const SpectralData<F>& s, const F& x0) {
  const auto& ctx = s.context();
  const int n = s.n();
  // chi(x0, T) and d chi/dx (x0, T), coefficient of T^i at index i
  std::vector<F> fib(static_cast<std::size_t>(n) + 1, ctx.zero());
  std::vector<F> dx(static_cast<std::size_t>(n) + 1, ctx.zero());
  fib[n] = ctx.one();
  for (int i = 1; i <= n; ++i) {
    fib[n - i] = s.s(i).eval(x0);
    dx[n - i] = s.s(i).affine().derivative().eval(x0);
  }
  const arith::Poly<F> fiber(ctx, fib);
  const arith::Poly<F> partial(ctx, dx);

  std::vector<int> rational_mults;
  bool singular = false;
  bool nonrational_repeat = false;
  for (const auto& f : arith::factor(fiber)) {
    if (f.multiplicity < 2) continue;
    if (f.factor.degree() == 1) {
      rational_mults.push_back(f.multiplicity);
      if (partial.eval(-f.factor[0]).is_zero()) singular = true;
    } else {
      nonrational_repeat = true;
    }
  }
  if (!nonrational_repeat && rational_mults == std::vector<int>{3}) return BranchTag::flex;
  if (!nonrational_repeat && rational_mults == std::vector<int>{2, 2}) return BranchTag::bitangent;
  if (singular) return BranchTag::singular_candidate;
  return BranchTag::unresolved_over_extension;
}

}  // namespace detail

/// Squarefreeness of the discriminant (both charts) and a tag for every
/// multiple root. Fibers are factored over the base field only: patterns
/// other than {3} and {2,2} without a singular witness are "unresolved".
template <arith::FiniteField F>
BranchReport<F> classify_branching(const SpectralData<F>& s) {
  BranchReport<F> report{discriminant(s), false, {}};
  const auto& disc = report.discriminant;
  if (disc.is_zero()) throw PreconditionError("classify_branching: discriminant vanishes identically");
  report.squarefree = !arith::squarefree_part(disc).repeated_roots_detected;
  if (report.squarefree) return report;

  for (const auto& f : arith::factor(disc.affine())) {
    if (f.multiplicity < 2) continue;
    BranchPoint<F> pt;
    pt.multiplicity = f.multiplicity;
    if (f.factor.degree() == 1) {
      const F x0 = -f.factor[0];
      pt.location = "x=" + x0.to_string();
      pt.x = x0;
      pt.tag = detail::classify_fiber(s, x0);
    } else {
      pt.location = "root of " + f.factor.to_string();
    }
    report.points.push_back(std::move(pt));
  }
  if (const int ord = arith::order_at_infinity(disc); ord >= 2) {
    BranchPoint<F> pt;
    pt.location = "inf";
    pt.at_infinity = true;
    pt.multiplicity = ord;
    pt.tag = detail::classify_fiber(s.chart_swap(), s.context().zero());
    report.points.push_back(std::move(pt));
  }
  return report;
}

}  // namespace higgs::spectral
