#pragma once

#include <utility>

#include "higgs/arith/binary_form.hpp"

namespace higgs::arith {

/// Dual number a + eps*b with eps^2 = 0 over a commutative ring R. The
/// eps-part of any polynomial expression is its exact directional derivative.
template <class R>
class Dual {
 public:
  Dual(R value, R derivative) : value_(std::move(value)), derivative_(std::move(derivative)) {
    check();
  }
  /// value + eps*0
  static Dual constant(R value) {
    R d = zero_like(value);
    return Dual(std::move(value), std::move(d));
  }

  const R& value() const { return value_; }
  const R& derivative() const { return derivative_; }
  bool is_zero() const { return value_.is_zero() && derivative_.is_zero(); }

  friend Dual operator+(const Dual& a, const Dual& b) {
    return Dual(a.value_ + b.value_, a.derivative_ + b.derivative_);
  }
  friend Dual operator-(const Dual& a, const Dual& b) {
    return Dual(a.value_ - b.value_, a.derivative_ - b.derivative_);
  }
  Dual operator-() const { return Dual(-value_, -derivative_); }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return Dual(a.value_ * b.value_, a.value_ * b.derivative_ + a.derivative_ * b.value_);
  }
  Dual& operator+=(const Dual& o) { return *this = *this + o; }
  Dual& operator-=(const Dual& o) { return *this = *this - o; }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }

  friend bool operator==(const Dual&, const Dual&) = default;

 private:
  void check() const {
    if constexpr (requires { value_.twist(); }) {
      if (value_.twist() != derivative_.twist())
        throw TwistMismatch("dual form: value twist " + std::to_string(value_.twist()) +
                            " differs from derivative twist " +
                            std::to_string(derivative_.twist()));
    }
  }

  R value_;
  R derivative_;
};

template <class R>
Dual<R> zero_like(const Dual<R>& d) {
  return Dual<R>(zero_like(d.value()), zero_like(d.derivative()));
}
template <class R>
Dual<R> one_like(const Dual<R>& d) {
  return Dual<R>::constant(one_like(d.value()));
}

/// Value and derivative parts carry equal twists through every operation.
template <Field F>
using DualForm = Dual<BinaryForm<F>>;

}  // namespace higgs::arith
