#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "higgs/arith/error.hpp"

namespace higgs::arith {

class RationalField;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
 public:
  using Context = RationalField;
  using Value = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t n) : v_(n) {}  // NOLINT: integers embed implicitly
  explicit Rational(Value v) : v_(std::move(v)) {}
  Rational(std::int64_t num, std::int64_t den);

  RationalField context() const;

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  Rational inverse() const;

  boost::multiprecision::cpp_int numerator() const;
  boost::multiprecision::cpp_int denominator() const;
  const Value& value() const { return v_; }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Value(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Value(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Value(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational operator-() const { return Rational(Value(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Value v_;
};

/// The field Q. Stateless; all instances compare equal.
class RationalField {
 public:
  using Element = Rational;

  std::uint64_t characteristic() const { return 0; }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t v) const { return Rational(v); }
  /// Parses "17", "-3" or "22/7" with integers of any length.
  Rational parse(std::string_view text) const;
  std::string describe() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

inline RationalField Rational::context() const { return {}; }

}  // namespace higgs::arith
