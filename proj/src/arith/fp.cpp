#include "higgs/arith/fp.hpp"

#include <cctype>
#include <limits>

namespace higgs::arith {

Fp::Fp(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus == 0) throw DataError("Fp: modulus must be positive");
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  value_ = static_cast<std::uint32_t>(r);
}

void Fp::throw_mismatch(const Fp& o) const {
  throw FieldMismatch("mixed prime fields: F_" + std::to_string(modulus_) + " and F_" +
                      std::to_string(o.modulus_));
}

Fp Fp::pow(std::uint64_t exponent) const {
  Fp base = *this;
  Fp result(1, modulus_);
  while (exponent) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Fp Fp::inverse() const {
  if (value_ == 0) throw PreconditionError("Fp: inverse of zero");
  // extended Euclid on (value, p)
  std::int64_t a = value_, b = modulus_, x0 = 1, x1 = 0;
  while (b) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, modulus_);
}

std::int64_t Fp::symmetric() const {
  return value_ > modulus_ / 2 ? static_cast<std::int64_t>(value_) - modulus_
                               : static_cast<std::int64_t>(value_);
}

std::string Fp::to_string() const { return std::to_string(value_); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw DataError("prime field: modulus " + std::to_string(p) + " is not a prime below 2^31");
}

namespace {

Fp parse_integer_mod(std::string_view digits, std::uint32_t p) {
  if (digits.empty()) throw DataError("scalar: empty integer");
  std::uint64_t acc = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw DataError("scalar: bad integer '" + std::string(digits) + "'");
    acc = (acc * 10 + static_cast<std::uint64_t>(c - '0')) % p;
  }
  return Fp(static_cast<std::int64_t>(acc), p);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Fp PrimeField::parse(std::string_view text) const {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text = trim(text.substr(1));
  }
  Fp value(0, p_);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Fp den = parse_integer_mod(trim(text.substr(slash + 1)), p_);
    if (den.is_zero()) throw DataError("scalar: denominator vanishes mod " + std::to_string(p_));
    value = parse_integer_mod(trim(text.substr(0, slash)), p_) / den;
  } else {
    value = parse_integer_mod(text, p_);
  }
  return negative ? -value : value;
}

std::string PrimeField::describe() const { return "F_" + std::to_string(p_); }

}  // namespace higgs::arith
