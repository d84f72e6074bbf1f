#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "higgs/arith/error.hpp"
#include "higgs/arith/field.hpp"

namespace higgs::detquartic {

using arith::Field;

/// Exponents of X0, X1, X2.
using Exponent = std::array<int, 3>;

/// Sparse polynomial in X0, X1, X2. Terms are ordered lexicographically on
/// exponents (X0 > X1 > X2), zero coefficients are never stored. Not
/// necessarily homogeneous: the division routines need the general case.
template <Field F>
class TernaryForm {
 public:
  using Context = typename F::Context;
  using Terms = std::map<Exponent, F>;

  explicit TernaryForm(Context ctx) : ctx_(std::move(ctx)) {}
  TernaryForm(Context ctx, Terms terms) : ctx_(std::move(ctx)) {
    for (auto& [e, c] : terms)
      if (!c.is_zero()) t_.emplace(e, std::move(c));
  }

  static TernaryForm constant(const F& c) { return monomial(c, {0, 0, 0}); }
  static TernaryForm monomial(const F& c, const Exponent& e) {
    TernaryForm f(c.context());
    if (!c.is_zero()) f.t_.emplace(e, c);
    return f;
  }
  static TernaryForm variable(const Context& ctx, int i) {
    Exponent e{};
    e[i] = 1;
    return monomial(ctx.one(), e);
  }
  /// c0 X0 + c1 X1 + c2 X2
  static TernaryForm linear(const Context& ctx, const std::array<F, 3>& c) {
    TernaryForm f(ctx);
    for (int i = 0; i < 3; ++i)
      if (!c[i].is_zero()) f.t_.emplace(Exponent{i == 0, i == 1, i == 2}, c[i]);
    return f;
  }

  const Context& context() const { return ctx_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  F coefficient(const Exponent& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? ctx_.zero() : it->second;
  }

  /// Total degree; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
  }
  /// Degree in X_i; -1 for zero.
  int degree_in(int i) const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e[i]);
    return d;
  }
  bool is_homogeneous() const {
    const int d = degree();
    for (const auto& [e, c] : t_)
      if (e[0] + e[1] + e[2] != d) return false;
    return true;
  }

  F eval(const std::array<F, 3>& x) const {
    F acc = ctx_.zero();
    for (const auto& [e, c] : t_) {
      F term = c;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < e[i]; ++j) term *= x[i];
      acc += term;
    }
    return acc;
  }

  TernaryForm partial(int i) const {
    TernaryForm out(ctx_);
    for (const auto& [e, c] : t_) {
      if (e[i] == 0) continue;
      Exponent d = e;
      --d[i];
      out.add_term(d, c * ctx_.from_int(e[i]));
    }
    return out;
  }

  friend TernaryForm operator+(TernaryForm a, const TernaryForm& b) { return a += b; }
  friend TernaryForm operator-(TernaryForm a, const TernaryForm& b) { return a -= b; }
  TernaryForm operator-() const {
    TernaryForm out = *this;
    for (auto& [e, c] : out.t_) c = -c;
    return out;
  }
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
    TernaryForm out(a.ctx_);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
  }
  friend TernaryForm operator*(const TernaryForm& a, const F& s) {
    TernaryForm out(a.ctx_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : a.t_) out.t_.emplace(e, c * s);
    return out;
  }
  TernaryForm& operator+=(const TernaryForm& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  TernaryForm& operator-=(const TernaryForm& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  TernaryForm& operator*=(const TernaryForm& o) { return *this = *this * o; }

  friend bool operator==(const TernaryForm& a, const TernaryForm& b) { return a.t_ == b.t_; }

  /// E.g. "-2*X0^3*X1 + 3*X0^2*X1^2"; terms in descending lex order.
  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string coef = c.to_string();
      bool negative = !coef.empty() && coef.front() == '-';
      if (negative) coef.erase(0, 1);
      if (out.empty()) out += negative ? "-" : "";
      else out += negative ? " - " : " + ";
      std::string vars;
      for (int i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        if (!vars.empty()) vars += '*';
        vars += "X" + std::to_string(i);
        if (e[i] > 1) vars += "^" + std::to_string(e[i]);
      }
      if (vars.empty()) out += coef;
      else if (coef == "1") out += vars;
      else out += coef + "*" + vars;
    }
    return out;
  }

  void add_term(const Exponent& e, const F& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }

 private:
  Context ctx_;
  Terms t_;
};

template <Field F>
TernaryForm<F> one_like(const TernaryForm<F>& f) {
  return TernaryForm<F>::constant(f.context().one());
}
template <Field F>
TernaryForm<F> zero_like(const TernaryForm<F>& f) {
  return TernaryForm<F>(f.context());
}

/// Exact division by a single polynomial: repeatedly cancel the lex-leading
/// term of the dividend. Since {d} is a Groebner basis of the ideal (d), the
/// dividend lies in (d) iff no leading term ever fails to be divisible.
/// Returns the quotient, or nothing if d does not divide a.
template <Field F>
std::optional<TernaryForm<F>> divide_exact(TernaryForm<F> a, const TernaryForm<F>& d) {
  if (d.is_zero()) throw PreconditionError("divide_exact: division by zero");
  const auto& [ed, cd] = *d.terms().rbegin();
  const F inv = cd.inverse();
  TernaryForm<F> q(d.context());
  while (!a.is_zero()) {
    const auto [ea, ca] = *a.terms().rbegin();
    Exponent shift;
    for (int i = 0; i < 3; ++i) {
      shift[i] = ea[i] - ed[i];
      if (shift[i] < 0) return std::nullopt;
    }
    const auto term = TernaryForm<F>::monomial(ca * inv, shift);
    q += term;
    a -= term * d;
  }
  return q;
}

/// Pseudo-remainder of a by d with X_var as principal variable:
/// lc(d)^s a = Q d + R with deg_var R < deg_var d. Used as an independent
/// check of divide_exact when d is irreducible.
template <Field F>
TernaryForm<F> pseudo_remainder(TernaryForm<F> a, const TernaryForm<F>& d, int var) {
  const int dd = d.degree_in(var);
  if (dd < 0) throw PreconditionError("pseudo_remainder: division by zero");
  auto leading = [var](const TernaryForm<F>& f, int deg) {
    TernaryForm<F> lc(f.context());
    for (const auto& [e, c] : f.terms())
      if (e[var] == deg) {
        Exponent r = e;
        r[var] = 0;
        lc.add_term(r, c);
      }
    return lc;
  };
  const TernaryForm<F> lcd = leading(d, dd);
  while (a.degree_in(var) >= dd) {
    const int da = a.degree_in(var);
    Exponent shift{};
    shift[var] = da - dd;
    a = lcd * a - leading(a, da) * TernaryForm<F>::monomial(a.context().one(), shift) * d;
  }
  return a;
}

}  // namespace higgs::detquartic
