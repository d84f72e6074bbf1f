#include "higgs/arith/fq.hpp"

#include "higgs/arith/poly.hpp"

namespace higgs::arith {

Fq operator*(const Fq& a, const Fq& b) {
  a.check(b);
  const int e = a.e_;
  const std::uint64_t p = a.p_;
  std::array<std::uint64_t, 2 * Fq::kMaxDegree - 1> prod{};
  for (int i = 0; i < e; ++i) {
    if (!a.c_[i]) continue;
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
  }
  // t^e = -(m_0 + ... + m_{e-1} t^{e-1})
  for (int i = 2 * e - 2; i >= e; --i) {
    const std::uint64_t t = prod[i];
    if (!t) continue;
    for (int j = 0; j < e; ++j) prod[i - e + j] = (prod[i - e + j] + t * (p - a.m_[j])) % p;
  }
  Fq r = a;
  for (int i = 0; i < e; ++i) r.c_[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

void Fq::throw_mismatch(const Fq& o) const {
  throw FieldMismatch("mixed extension fields: " + context().describe() + " and " +
                      o.context().describe());
}

ExtensionField Fq::context() const {
  ExtensionField f;
  f.p_ = p_;
  f.e_ = e_;
  f.m_ = m_;
  f.q_ = 1;
  for (int i = 0; i < e_; ++i) f.q_ *= p_;
  return f;
}

Fq Fq::pow(std::uint64_t exponent) const {
  Fq base = *this;
  Fq result = context().one();
  while (exponent) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Fq Fq::inverse() const {
  if (is_zero()) throw PreconditionError("Fq: inverse of zero");
  return pow(context().size() - 2);
}

std::string Fq::to_string() const {
  std::string out;
  for (int i = 0; i < e_; ++i) {
    if (!c_[i]) continue;
    if (!out.empty()) out += '+';
    out += std::to_string(c_[i]);
    if (i == 1) out += "*t";
    if (i > 1) out += "*t^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

namespace {

bool is_irreducible_mod_p(const Poly<Fp>& m, std::uint32_t p) {
  const PrimeField field(p);
  const Poly<Fp> x(field, {field.zero(), field.one()});
  Poly<Fp> power = x;
  for (int i = 1; 2 * i <= m.degree(); ++i) {
    power = powmod(power, p, m);
    if (gcd(m, power - x).degree() > 0) return false;
  }
  return true;
}

}  // namespace

ExtensionField::ExtensionField(std::uint32_t p, int e) : p_(p), e_(e) {
  const PrimeField field(p);
  if (e < 1 || e > Fq::kMaxDegree)
    throw DataError("extension field: degree " + std::to_string(e) + " out of range");
  q_ = 1;
  for (int i = 0; i < e; ++i) {
    if (q_ > (std::uint64_t{1} << 62) / p) throw DataError("extension field: order too large");
    q_ *= p;
  }
  if (e == 1) return;  // m(t) = t
  for (std::uint64_t index = 0;; ++index) {
    std::vector<Fp> coeffs;
    std::uint64_t rest = index;
    for (int i = 0; i < e; ++i, rest /= p) coeffs.push_back(field.element(rest % p));
    if (coeffs[0].is_zero()) continue;
    coeffs.push_back(field.one());
    if (!is_irreducible_mod_p(Poly<Fp>(field, coeffs), p)) continue;
    for (int i = 0; i < e; ++i) m_[i] = coeffs[i].value();
    return;
  }
}

Fq ExtensionField::make(const Fq::Coeffs& c) const {
  Fq r;
  r.c_ = c;
  r.m_ = m_;
  r.p_ = p_;
  r.e_ = e_;
  return r;
}

Fq ExtensionField::from_int(std::int64_t v) const {
  Fq::Coeffs c{};
  c[0] = Fp(v, p_).value();
  return make(c);
}

Fq ExtensionField::from_prime(const Fp& a) const {
  if (a.modulus() != p_) throw FieldMismatch("extension field: lifting from F_" + std::to_string(a.modulus()));
  return from_int(a.value());
}

Fq ExtensionField::element(std::uint64_t index) const {
  Fq::Coeffs c{};
  for (int i = 0; i < e_; ++i, index /= p_) c[i] = static_cast<std::uint32_t>(index % p_);
  return make(c);
}

Fq ExtensionField::generator() const {
  if (e_ == 1) return from_int(0);
  Fq::Coeffs c{};
  c[1] = 1;
  return make(c);
}

Fq ExtensionField::parse(std::string_view text) const {
  return from_prime(PrimeField(p_).parse(text));
}

std::string ExtensionField::describe() const {
  if (e_ == 1) return "F_" + std::to_string(p_);
  std::string m = "t^" + std::to_string(e_);
  for (int i = e_ - 1; i >= 0; --i) {
    if (!m_[i]) continue;
    m += "+" + std::to_string(m_[i]);
    if (i == 1) m += "*t";
    if (i > 1) m += "*t^" + std::to_string(i);
  }
  return "F_" + std::to_string(p_) + "^" + std::to_string(e_) + " = F_" + std::to_string(p_) + "[t]/(" + m + ")";
}

}  // namespace higgs::arith
