#include "higgs/arith/rational.hpp"

#include <cctype>

namespace higgs::arith {

using boost::multiprecision::cpp_int;

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("rational: zero denominator");
  v_ = Value(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw PreconditionError("rational: inverse of zero");
  return Rational(Value(1) / v_);
}

cpp_int Rational::numerator() const { return boost::multiprecision::numerator(v_); }
cpp_int Rational::denominator() const { return boost::multiprecision::denominator(v_); }

std::string Rational::to_string() const {
  cpp_int den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

cpp_int parse_integer(std::string_view digits) {
  digits = trim(digits);
  if (digits.empty()) throw DataError("scalar: empty integer");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw DataError("scalar: bad integer '" + std::string(digits) + "'");
  return cpp_int(std::string(digits));
}

}  // namespace

Rational RationalField::parse(std::string_view text) const {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text = trim(text.substr(1));
  }
  Rational::Value v;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    cpp_int den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DataError("scalar: zero denominator");
    v = Rational::Value(parse_integer(text.substr(0, slash)), den);
  } else {
    v = Rational::Value(parse_integer(text));
  }
  return Rational(negative ? Rational::Value(-v) : v);
}

}  // namespace higgs::arith
