#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "higgs/arith/field.hpp"
#include "higgs/arith/poly.hpp"

namespace higgs::arith {

/// Dimension of H^0(P^1, O(m)).
constexpr int h0(int m) { return m < 0 ? 0 : m + 1; }

/// A global section of O_{P^1}(m): a binary form of degree m, stored in the
/// affine chart x = X/Y as the coefficient list of 1, x, ..., x^m. The twist
/// is part of the value, so x^2 as a section of O(2) and of O(3) differ (the
/// second vanishes at infinity). Forms of negative twist are identically zero.
template <Field F>
class BinaryForm {
 public:
  using Context = typename F::Context;
  using Scalar = F;

  /// The zero section of O(twist).
  BinaryForm(Context ctx, int twist)
      : ctx_(std::move(ctx)), twist_(twist),
        c_(static_cast<std::size_t>(h0(twist)), ctx_.zero()) {}

  /// Throws TwistMismatch when more than h0(twist) coefficients are given;
  /// shorter lists are padded with zeros.
  BinaryForm(Context ctx, int twist, std::vector<F> coeffs)
      : ctx_(std::move(ctx)), twist_(twist), c_(std::move(coeffs)) {
    const auto slots = static_cast<std::size_t>(h0(twist));
    if (c_.size() > slots) {
      for (std::size_t i = slots; i < c_.size(); ++i)
        if (!c_[i].is_zero())
          throw TwistMismatch("form of twist " + std::to_string(twist) + " has a term of degree " +
                              std::to_string(i));
    }
    c_.resize(slots, ctx_.zero());
  }

  /// Throws TwistMismatch if deg p > twist.
  static BinaryForm from_affine(const Poly<F>& p, int twist) {
    if (p.degree() > twist)
      throw TwistMismatch("polynomial of degree " + std::to_string(p.degree()) +
                          " does not fit twist " + std::to_string(twist));
    return BinaryForm(p.context(), twist, p.coeffs());
  }
  /// c * x^a as a section of O(twist).
  static BinaryForm monomial(const F& c, int twist, int a) {
    BinaryForm f(c.context(), twist);
    if (a < 0 || a > twist)
      throw TwistMismatch("monomial x^" + std::to_string(a) + " outside twist " +
                          std::to_string(twist));
    f.c_[a] = c;
    return f;
  }
  static BinaryForm constant(const F& c) { return BinaryForm(c.context(), 0, {c}); }

  const Context& context() const { return ctx_; }
  int twist() const { return twist_; }
  const std::vector<F>& coeffs() const { return c_; }
  /// Coefficient of x^a (X^a Y^(m-a)).
  const F& operator[](int a) const { return c_[a]; }
  F& coeff(int a) { return c_[a]; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const F& c) { return c.is_zero(); });
  }
  /// Degree of the affine polynomial, -1 for zero.
  int affine_degree() const {
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
      if (!c_[i].is_zero()) return i;
    return -1;
  }
  Poly<F> affine() const { return Poly<F>(ctx_, c_); }

  F eval(const F& x) const {
    F acc = ctx_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  /// Value at the point at infinity (coefficient of X^m).
  F eval_at_infinity() const { return c_.empty() ? ctx_.zero() : c_.back(); }

  /// Change of chart X <-> Y: reverses the coefficient list. Self-inverse.
  BinaryForm chart_swap() const {
    BinaryForm r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    return r;
  }

  /// The same polynomial viewed in O(twist + extra), i.e. multiplied by Y^extra.
  BinaryForm raise_twist(int extra) const {
    return BinaryForm(ctx_, twist_ + extra, c_);
  }

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    a.check_twist(b, "+");
    BinaryForm r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    a.check_twist(b, "-");
    BinaryForm r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  BinaryForm operator-() const {
    BinaryForm r = *this;
    for (F& c : r.c_) c = -c;
    return r;
  }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm r(a.ctx_, a.twist_ + b.twist_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend BinaryForm operator*(const BinaryForm& a, const F& s) {
    BinaryForm r = a;
    for (F& c : r.c_) c = c * s;
    return r;
  }
  friend BinaryForm operator*(const F& s, const BinaryForm& a) { return a * s; }

  BinaryForm& operator+=(const BinaryForm& o) { return *this = *this + o; }
  BinaryForm& operator-=(const BinaryForm& o) { return *this = *this - o; }
  BinaryForm& operator*=(const BinaryForm& o) { return *this = *this * o; }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.twist_ == b.twist_ && a.c_ == b.c_;
  }

 private:
  void check_twist(const BinaryForm& o, const char* op) const {
    if (twist_ != o.twist_)
      throw TwistMismatch(std::string("form ") + op + ": twists " + std::to_string(twist_) +
                          " and " + std::to_string(o.twist_));
  }

  Context ctx_;
  int twist_;
  std::vector<F> c_;
};

/// Exact quotient a / b of forms; throws if b does not divide a.
template <Field F>
BinaryForm<F> exact_quotient(const BinaryForm<F>& a, const BinaryForm<F>& b) {
  if (b.is_zero()) throw PreconditionError("form division by zero");
  return BinaryForm<F>::from_affine(exact_quotient(a.affine(), b.affine()), a.twist() - b.twist());
}

template <Field F>
BinaryForm<F> zero_like(const BinaryForm<F>& f) {
  return BinaryForm<F>(f.context(), f.twist());
}
template <Field F>
BinaryForm<F> one_like(const BinaryForm<F>& f) {
  return BinaryForm<F>::constant(f.context().one());
}

}  // namespace higgs::arith
