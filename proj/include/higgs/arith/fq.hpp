#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "higgs/arith/field.hpp"

namespace higgs::arith {

class ExtensionField;

/// Element of F_q = F_p[t]/(m(t)), q = p^e, e <= kMaxDegree. Stored inline
/// (coefficients and the modulus travel with the value, like Fp), so the
/// brute-force point searches never touch the heap per operation.
class Fq {
 public:
  using Context = ExtensionField;
  static constexpr int kMaxDegree = 6;
  using Coeffs = std::array<std::uint32_t, kMaxDegree>;

  Fq() = default;

  ExtensionField context() const;
  int degree() const { return e_; }
  std::uint32_t characteristic() const { return p_; }
  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const {
    for (int i = 0; i < e_; ++i)
      if (c_[i]) return false;
    return true;
  }

  Fq inverse() const;
  Fq pow(std::uint64_t exponent) const;
  /// "c0+c1*t+...", or just c0 for elements of F_p.
  std::string to_string() const;

  friend Fq operator+(const Fq& a, const Fq& b) {
    a.check(b);
    Fq r = a;
    for (int i = 0; i < a.e_; ++i) {
      r.c_[i] += b.c_[i];
      if (r.c_[i] >= a.p_) r.c_[i] -= a.p_;
    }
    return r;
  }
  friend Fq operator-(const Fq& a, const Fq& b) { return a + (-b); }
  Fq operator-() const {
    Fq r = *this;
    for (int i = 0; i < e_; ++i) r.c_[i] = c_[i] ? p_ - c_[i] : 0;
    return r;
  }
  friend Fq operator*(const Fq& a, const Fq& b);
  friend Fq operator/(const Fq& a, const Fq& b) { return a * b.inverse(); }

  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }

  friend bool operator==(const Fq& a, const Fq& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.m_ == b.m_ && a.c_ == b.c_;
  }

 private:
  friend class ExtensionField;
  void check(const Fq& o) const {
    if (p_ != o.p_ || e_ != o.e_ || m_ != o.m_) throw_mismatch(o);
  }
  [[noreturn]] void throw_mismatch(const Fq& o) const;

  Coeffs c_{};
  Coeffs m_{};  // m(t) = t^e + m_{e-1} t^{e-1} + ... + m_0
  std::uint32_t p_ = 0;
  int e_ = 0;
};

/// F_{p^e}. The modulus is the first monic irreducible of degree e in the
/// order of (m_0, ..., m_{e-1}) read as base-p digits, so it is reproducible.
class ExtensionField {
 public:
  using Element = Fq;

  /// Throws DataError for a non-prime p, e outside [1, kMaxDegree], or q >= 2^62.
  ExtensionField(std::uint32_t p, int e);

  std::uint32_t prime() const { return p_; }
  int degree() const { return e_; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t size() const { return q_; }
  /// Low coefficients of the monic modulus.
  const Fq::Coeffs& modulus() const { return m_; }

  Fq zero() const { return make({}); }
  Fq one() const { return from_int(1); }
  Fq from_int(std::int64_t v) const;
  /// Lifts an element of the prime field.
  Fq from_prime(const Fp& a) const;
  /// Base-p digits of i are the coefficients of 1, t, t^2, ...
  Fq element(std::uint64_t index) const;
  /// The class of t.
  Fq generator() const;
  /// Parses an integer or "a/b" into the prime subfield.
  Fq parse(std::string_view text) const;
  std::string describe() const;

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.m_ == b.m_;
  }

 private:
  friend class Fq;
  ExtensionField() = default;
  Fq make(const Fq::Coeffs& c) const;

  std::uint32_t p_ = 0;
  int e_ = 0;
  std::uint64_t q_ = 0;
  Fq::Coeffs m_{};
};

static_assert(FiniteField<Fq>);

}  // namespace higgs::arith
