#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "higgs/arith/binary_form.hpp"

namespace higgs::arith {

// Text syntax for sections of O(m):   "3*x^2 + 1; twist=2"
// Terms are coefficient*x^exponent in any order; the coefficient may be an
// integer or a fraction a/b and is optional for x-powers. The twist
// attribute is mandatory. Printing uses canonical field representatives,
// highest power first, so print(parse(s)) is a normal form and
// parse(print(f)) == f.

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, const char* what);

}  // namespace detail

/// Parses the polynomial part ("3*x^2 + 1") into an affine polynomial.
template <Field F>
Poly<F> parse_poly(const typename F::Context& ctx, std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw DataError("form: empty polynomial text");
  std::vector<F> coeffs;
  auto add_term = [&](bool negative, std::string_view term) {
    term = detail::trim(term);
    if (term.empty()) throw DataError("form: empty term in '" + std::string(text) + "'");
    std::string_view coef_text = term;
    int exponent = 0;
    if (auto xpos = term.find('x'); xpos != std::string_view::npos) {
      coef_text = detail::trim(term.substr(0, xpos));
      if (!coef_text.empty() && coef_text.back() == '*')
        coef_text = detail::trim(coef_text.substr(0, coef_text.size() - 1));
      std::string_view rest = detail::trim(term.substr(xpos + 1));
      if (rest.empty()) {
        exponent = 1;
      } else if (rest.front() == '^') {
        exponent = detail::parse_int(detail::trim(rest.substr(1)), "exponent");
        if (exponent < 0) throw DataError("form: negative exponent in '" + std::string(term) + "'");
      } else {
        throw DataError("form: unexpected text after x in '" + std::string(term) + "'");
      }
    }
    F c = coef_text.empty() ? ctx.one() : ctx.parse(coef_text);
    if (negative) c = -c;
    if (coeffs.size() <= static_cast<std::size_t>(exponent))
      coeffs.resize(static_cast<std::size_t>(exponent) + 1, ctx.zero());
    coeffs[exponent] += c;
  };
  // Split on top-level + and - (a leading sign belongs to the first term;
  // a '-' right after '/' or '^' is part of a number).
  bool negative = false;
  std::size_t start = 0;
  std::size_t i = 0;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    start = i = 1;
  }
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if ((ch == '+' || ch == '-') && i > start) {
      std::string_view before = detail::trim(text.substr(start, i - start));
      if (!before.empty() && (before.back() == '/' || before.back() == '^' || before.back() == '*'))
        continue;
      add_term(negative, text.substr(start, i - start));
      negative = ch == '-';
      start = i + 1;
    }
  }
  add_term(negative, text.substr(start));
  return Poly<F>(ctx, std::move(coeffs));
}

/// Parses "poly; twist=m".
template <Field F>
BinaryForm<F> parse_form(const typename F::Context& ctx, std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw DataError("form: missing '; twist=' attribute in '" + std::string(text) + "'");
  std::string_view attr = detail::trim(text.substr(semi + 1));
  if (attr.substr(0, 5) != "twist" )
    throw DataError("form: expected 'twist=' attribute, got '" + std::string(attr) + "'");
  attr = detail::trim(attr.substr(5));
  if (attr.empty() || attr.front() != '=')
    throw DataError("form: expected 'twist=' attribute, got '" + std::string(attr) + "'");
  const int twist = detail::parse_int(detail::trim(attr.substr(1)), "twist");
  return BinaryForm<F>::from_affine(parse_poly<F>(ctx, text.substr(0, semi)), twist);
}

template <Field F>
std::string to_text(const BinaryForm<F>& f) {
  return f.affine().to_string() + "; twist=" + std::to_string(f.twist());
}

}  // namespace higgs::arith
