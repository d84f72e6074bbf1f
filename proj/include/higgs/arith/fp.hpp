#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "higgs/arith/error.hpp"

namespace higgs::arith {

class PrimeField;

/// Element of a prime field F_p. The modulus travels with the value so
/// that combining elements of different fields is caught at runtime.
/// Values are kept as canonical representatives in [0, p).
class Fp {
 public:
  using Context = PrimeField;

  /// Unbound element (modulus 0). Only meaningful as an assignment target.
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  PrimeField context() const;

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  /// Multiplicative inverse; throws PreconditionError for zero.
  Fp inverse() const;
  Fp pow(std::uint64_t exponent) const;

  /// Representative in (-p/2, p/2], handy for printing small test values.
  std::int64_t symmetric() const;
  std::string to_string() const;

  friend Fp operator+(const Fp& a, const Fp& b) {
    a.check(b);
    std::uint32_t s = a.value_ + b.value_;
    if (s >= a.modulus_) s -= a.modulus_;
    return raw(s, a.modulus_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.check(b);
    std::uint32_t s = a.value_ >= b.value_ ? a.value_ - b.value_
                                           : a.value_ + a.modulus_ - b.value_;
    return raw(s, a.modulus_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.check(b);
    return raw(static_cast<std::uint32_t>(
                   static_cast<std::uint64_t>(a.value_) * b.value_ % a.modulus_),
               a.modulus_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }
  /// Orders by modulus, then value. Only used for sorting keys.
  friend std::strong_ordering operator<=>(const Fp& a, const Fp& b) {
    if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.value_ = v;
    r.modulus_ = p;
    return r;
  }
  void check(const Fp& o) const {
    if (modulus_ != o.modulus_) throw_mismatch(o);
  }
  [[noreturn]] void throw_mismatch(const Fp& o) const;

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// The field F_p as a value: factory for constants and the parse entry point.
class PrimeField {
 public:
  using Element = Fp;

  /// Throws DataError unless p is an odd or even prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  /// Number of elements; the brute-force searches enumerate them.
  std::uint64_t size() const { return p_; }

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(std::int64_t v) const { return Fp(v, p_); }
  /// The i-th element in enumeration order 0, 1, ..., p-1.
  Fp element(std::uint64_t index) const { return Fp(static_cast<std::int64_t>(index), p_); }

  /// Parses "17", "-3" or "2/5" (an integer of any length, reduced mod p).
  Fp parse(std::string_view text) const;

  std::string describe() const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  friend class Fp;
  struct Unchecked {};
  PrimeField(std::uint32_t p, Unchecked) : p_(p) {}

  std::uint32_t p_;
};

inline PrimeField Fp::context() const { return PrimeField(modulus_, PrimeField::Unchecked{}); }

}  // namespace higgs::arith
