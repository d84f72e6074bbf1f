#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "higgs/arith/binary_form.hpp"
#include "higgs/arith/determinant.hpp"

namespace higgs::arith {

/// A polynomial in T whose coefficients are binary forms, sum_i c_i T^i.
/// T carries a weight w (the twist of the line bundle it lives in), and the
/// coefficients are weighted-homogeneous: twist(c_i) = a + (deg - i) * w.
/// The leading coefficient is part of the data and must be a nonzero form.
template <Field F>
class TPoly {
 public:
  /// coeffs[i] is the coefficient of T^i.
  explicit TPoly(std::vector<BinaryForm<F>> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw PreconditionError("T-polynomial without coefficients");
    if (c_.back().is_zero()) throw PreconditionError("T-polynomial with vanishing leading coefficient");
    for (std::size_t i = 1; i + 1 < c_.size(); ++i)
      if (c_[i - 1].twist() - c_[i].twist() != c_[i].twist() - c_[i + 1].twist())
        throw TwistMismatch("T-polynomial coefficients are not weighted-homogeneous");
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BinaryForm<F>& operator[](int i) const { return c_[i]; }
  const std::vector<BinaryForm<F>>& coeffs() const { return c_; }
  /// Twist of the leading coefficient.
  int lead_twist() const { return c_.back().twist(); }
  /// Weight of T, if determined (degree >= 1).
  std::optional<int> weight() const {
    if (c_.size() < 2) return std::nullopt;
    return c_[c_.size() - 2].twist() - c_.back().twist();
  }

  /// d/dT, keeping coefficient twists.
  TPoly derivative() const {
    if (c_.size() < 2) throw PreconditionError("derivative of a constant T-polynomial");
    std::vector<BinaryForm<F>> d;
    const auto ctx = c_.front().context();
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(c_[i] * ctx.from_int(static_cast<std::int64_t>(i)));
    return TPoly(std::move(d));
  }

  /// Coefficientwise evaluation at an affine point x0, giving a polynomial in T.
  Poly<F> fiber(const F& x0) const {
    std::vector<F> v;
    for (const auto& c : c_) v.push_back(c.eval(x0));
    return Poly<F>(x0.context(), std::move(v));
  }

 private:
  std::vector<BinaryForm<F>> c_;
};

/// Res_T(f, g) as a single binary form: the determinant of the Sylvester
/// matrix (deg g rows of f-coefficients, then deg f rows of g-coefficients,
/// highest power first), evaluated by Bareiss elimination over k[x].
/// Convention: Res(T - a, T - b) = a - b, and in general
/// Res(f, g) = lc(f)^deg g * prod_{f(t)=0} g(t).
/// The result has twist deg(g)*a_f + deg(f)*a_g + deg(f)*deg(g)*w.
template <Field F>
BinaryForm<F> form_resultant(const TPoly<F>& f, const TPoly<F>& g) {
  const int n = f.degree();
  const int m = g.degree();
  const auto ctx = f[0].context();
  int weight = 0;
  if (auto wf = f.weight(), wg = g.weight(); wf && wg && *wf != *wg)
    throw TwistMismatch("resultant: T carries weight " + std::to_string(*wf) + " in f and " +
                        std::to_string(*wg) + " in g");
  else if (wf)
    weight = *wf;
  else if (wg)
    weight = *wg;
  const int twist = m * f.lead_twist() + n * g.lead_twist() + n * m * weight;

  const std::size_t size = static_cast<std::size_t>(n + m);
  if (size == 0) return BinaryForm<F>::constant(ctx.one());
  std::vector<Poly<F>> syl(size * size, Poly<F>(ctx));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) syl[r * size + r + (n - i)] = f[i].affine();
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) syl[(m + r) * size + r + (m - j)] = g[j].affine();
  Poly<F> det = bareiss_determinant(std::move(syl), size);
  return BinaryForm<F>::from_affine(det, twist);
}

}  // namespace higgs::arith
