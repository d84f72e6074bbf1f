#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "higgs/arith/field.hpp"

namespace higgs::arith {

/// Dense univariate polynomial over a field, coefficient of x^i at index i,
/// kept normalized (no trailing zeros). The zero polynomial has degree -1.
template <Field F>
class Poly {
 public:
  using Context = typename F::Context;
  using Scalar = F;

  explicit Poly(Context ctx) : ctx_(std::move(ctx)) {}
  Poly(Context ctx, std::vector<F> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    normalize();
  }

  static Poly constant(const F& c) { return Poly(c.context(), {c}); }
  static Poly monomial(const F& c, int degree) {
    std::vector<F> v(static_cast<std::size_t>(degree) + 1, c.context().zero());
    v.back() = c;
    return Poly(c.context(), std::move(v));
  }
  /// x - root
  static Poly linear_root(const F& root) {
    return Poly(root.context(), {-root, root.context().one()});
  }

  const Context& context() const { return ctx_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }

  F operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : ctx_.zero();
  }
  F leading() const { return c_.empty() ? ctx_.zero() : c_.back(); }

  F eval(const F& x) const {
    F acc = ctx_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(ctx_.from_int(static_cast<std::int64_t>(i)) * c_[i]);
    return Poly(ctx_, std::move(d));
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    return *this * c_.back().inverse();
  }

  /// p(x) -> p(x + a)
  Poly shift(const F& a) const {
    Poly result(ctx_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      result = result * Poly(ctx_, {a, ctx_.one()}) + constant(*it);
    return result;
  }

  /// Multiplication by x^k.
  Poly shift_degree(int k) const {
    if (c_.empty()) return *this;
    std::vector<F> v(static_cast<std::size_t>(k), ctx_.zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(ctx_, std::move(v));
  }

  /// Terms of degree < n.
  Poly truncate(int n) const {
    if (static_cast<int>(c_.size()) <= n) return *this;
    return Poly(ctx_, std::vector<F>(c_.begin(), c_.begin() + std::max(n, 0)));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const Poly& big = a.c_.size() >= b.c_.size() ? a : b;
    const Poly& small = a.c_.size() >= b.c_.size() ? b : a;
    std::vector<F> v = big.c_;
    for (std::size_t i = 0; i < small.c_.size(); ++i) v[i] = v[i] + small.c_[i];
    return Poly(a.ctx_, std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    std::vector<F> v;
    v.reserve(c_.size());
    for (const F& c : c_) v.push_back(-c);
    return Poly(ctx_, std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly(a.ctx_);
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, a.ctx_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.ctx_, std::move(v));
  }
  friend Poly operator*(const Poly& a, const F& s) {
    if (s.is_zero()) return Poly(a.ctx_);
    std::vector<F> v = a.c_;
    for (F& c : v) c = c * s;
    return Poly(a.ctx_, std::move(v));
  }
  friend Poly operator*(const F& s, const Poly& a) { return a * s; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string(const char* var = "x") const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Context ctx_;
  std::vector<F> c_;
};

/// Quotient and remainder; throws PreconditionError on division by zero.
template <Field F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const auto& ctx = a.context();
  if (a.degree() < b.degree()) return {Poly<F>(ctx), a};
  std::vector<F> r = a.coeffs();
  std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, ctx.zero());
  const F lead_inv = b.leading().inverse();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    F coef = r[i] * lead_inv;
    q[i - db] = coef;
    if (coef.is_zero()) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= coef * b.coeffs()[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<F>(ctx, std::move(q)), Poly<F>(ctx, std::move(r))};
}

/// a / b, asserting the division is exact.
template <Field F>
Poly<F> exact_quotient(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
  return q;
}

template <Field F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

/// Monic gcd (zero when both inputs vanish).
template <Field F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g monic.
template <Field F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  const auto& ctx = a.context();
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0(ctx, {ctx.one()}), s1(ctx), t0(ctx), t1(ctx, {ctx.one()});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    Poly<F> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// (base^exponent) mod m by repeated squaring.
template <Field F>
Poly<F> powmod(Poly<F> base, std::uint64_t exponent, const Poly<F>& m) {
  Poly<F> result(m.context(), {m.context().one()});
  base = base % m;
  while (exponent) {
    if (exponent & 1) result = (result * base) % m;
    base = (base * base) % m;
    exponent >>= 1;
  }
  return result % m;
}

template <Field F>
std::string Poly<F>::to_string(const char* var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    std::string coef = c_[i].to_string();
    bool negative = !coef.empty() && coef.front() == '-';
    if (negative) coef.erase(0, 1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = coef == "1";
    if (i == 0) {
      out += coef;
    } else {
      if (!unit) out += coef + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

// Ring-generic helpers used by the determinant templates.
template <Field F>
Poly<F> zero_like(const Poly<F>& p) {
  return Poly<F>(p.context());
}
template <Field F>
Poly<F> one_like(const Poly<F>& p) {
  return Poly<F>(p.context(), {p.context().one()});
}

}  // namespace higgs::arith
