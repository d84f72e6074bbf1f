#include "higgs/detquartic/points.hpp"

#include <algorithm>
#include <thread>

#include "higgs/arith/poly.hpp"

namespace higgs::detquartic {

using arith::ExtensionField;
using arith::Poly;
using arith::PrimeField;

PlanePoint normalize(const std::array<Fp, 3>& v) {
  int last = 2;
  while (last >= 0 && v[last].is_zero()) --last;
  if (last < 0) throw PreconditionError("normalize: zero vector is not a projective point");
  const Fp inv = v[last].inverse();
  PlanePoint out{};
  for (int i = 0; i < 3; ++i) out[i] = (v[i] * inv).value();
  return out;
}

namespace {

/// Index i in [0, p^2 + p + 1) to a normalized point: [x, y, 1], then
/// [x, 1, 0], then [1, 0, 0].
PlanePoint point_at(std::uint64_t i, std::uint32_t p) {
  const std::uint64_t pp = std::uint64_t{p} * p;
  if (i < pp) return {static_cast<std::uint32_t>(i / p), static_cast<std::uint32_t>(i % p), 1};
  if (i < pp + p) return {static_cast<std::uint32_t>(i - pp), 1, 0};
  return {1, 0, 0};
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint32_t p) { return Fp(static_cast<std::int64_t>(a), p).inverse().value(); }

/// rank < rows for a rows x cols matrix mod p (entries reduced), destroying it.
bool rank_deficient(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols, std::uint32_t p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[rank * cols + j]);
    const std::uint64_t inv = inverse_mod(m[rank * cols + c], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t f = m[r * cols + c] * inv % p;
      if (!f) continue;
      for (std::size_t j = c; j < cols; ++j) m[r * cols + j] = (m[r * cols + j] + (p - f) * m[rank * cols + j]) % p;
    }
    ++rank;
  }
  return rank < rows;
}

template <class Pred>
std::vector<PlanePoint> search_plane(std::uint32_t p, int threads, const Pred& make_pred) {
  const std::uint64_t total = std::uint64_t{p} * p + p + 1;
  const auto workers = static_cast<std::uint64_t>(std::max(1, threads));
  std::vector<std::vector<PlanePoint>> found(workers);
  auto work = [&](std::uint64_t w) {
    auto pred = make_pred();
    const std::uint64_t begin = total * w / workers, end = total * (w + 1) / workers;
    for (std::uint64_t i = begin; i < end; ++i) {
      const PlanePoint pt = point_at(i, p);
      if (pred(pt)) found[w].push_back(pt);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<PlanePoint> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PlanePoint> rank_drop_points(const AugmentedMat<Fp>& a, int threads) {
  const std::size_t d = a.base.d();
  const std::uint32_t p = a.base.context().modulus();
  std::vector<std::array<std::uint64_t, 3>> lin;  // row-major d x d
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = 1; j <= d; ++j) {
      const auto& f = a.base.entry(i, j);
      lin.push_back({f[0].value(), f[1].value(), f[2].value()});
    }
  auto make_pred = [&] {
    return [&, m = std::vector<std::uint64_t>(d * (d + 1))](const PlanePoint& pt) mutable {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          const auto& c = lin[i * d + j];
          m[i * (d + 1) + j] = (c[0] * pt[0] + c[1] * pt[1] + c[2] * pt[2]) % p;
        }
        m[i * (d + 1) + d] = a.column[i].value();
      }
      return rank_deficient(m, d, d + 1, p);
    };
  };
  return search_plane(p, threads, make_pred);
}

std::vector<PlanePoint> rational_points(const TernaryForm<Fp>& f) {
  const std::uint32_t p = f.context().modulus();
  const PrimeField field(p);
  auto make_pred = [&] {
    return [&](const PlanePoint& pt) {
      return f.eval({field.from_int(pt[0]), field.from_int(pt[1]), field.from_int(pt[2])}).is_zero();
    };
  };
  return search_plane(p, 1, make_pred);
}

std::string to_string(Smoothness s) {
  switch (s) {
    case Smoothness::smooth_over_checked_fields: return "smooth_over_checked_fields";
    case Smoothness::singular_point_found: return "singular_point_found";
    case Smoothness::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

/// A ternary form over F_q restricted to a line: coefficient of t^b is a
/// polynomial in the line parameter u, stored densely.
struct Restricted {
  std::vector<std::vector<Fq>> by_power;  // by_power[b][a]: u^a t^b

  Poly<Fq> at(const Fq& u, const ExtensionField& field) const {
    std::vector<Fq> c;
    c.reserve(by_power.size());
    for (const auto& coeffs : by_power) {
      Fq acc = field.zero();
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
      c.push_back(acc);
    }
    return Poly<Fq>(field, std::move(c));
  }
};

/// f on the affine chart X2 = 1, with u = X0 and t = X1.
Restricted restrict_affine(const TernaryForm<Fp>& f, const ExtensionField& field) {
  Restricted r;
  for (const auto& [e, c] : f.terms()) {
    const auto a = static_cast<std::size_t>(e[0]);
    const auto b = static_cast<std::size_t>(e[1]);
    if (r.by_power.size() <= b) r.by_power.resize(b + 1);
    auto& row = r.by_power[b];
    if (row.size() <= a) row.resize(a + 1, field.zero());
    row[a] += field.from_prime(c);
  }
  for (auto& row : r.by_power)
    if (row.empty()) row.push_back(field.zero());
  return r;
}

/// First root in F_q of a nonzero polynomial with a root there, or 0 for
/// the zero polynomial; nothing if it has no root in F_q.
std::optional<Fq> root_in_field(const Poly<Fq>& g, const ExtensionField& field) {
  if (g.is_zero()) return field.zero();
  if (g.degree() < 1) return std::nullopt;
  const Poly<Fq> t(field, {field.zero(), field.one()});
  const Poly<Fq> split = arith::gcd(g, arith::powmod(t, field.size(), g) - t);
  if (split.degree() < 1) return std::nullopt;
  for (std::uint64_t i = 0; i < field.size(); ++i)
    if (split.eval(field.element(i)).is_zero()) return field.element(i);
  return std::nullopt;
}

std::optional<std::array<Fq, 3>> search_field(const std::array<TernaryForm<Fp>, 4>& forms, const ExtensionField& field) {
  const std::uint64_t q = field.size();
  // affine chart X2 = 1; the two partials first, since for a smooth curve
  // their gcd is almost always already constant
  {
    std::array<Restricted, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = restrict_affine(forms[i], field);
    for (std::uint64_t idx = 0; idx < q; ++idx) {
      const Fq u = field.element(idx);
      Poly<Fq> g = arith::gcd(r[1].at(u, field), r[2].at(u, field));
      if (!g.is_zero() && g.degree() < 1) continue;
      g = arith::gcd(g, r[3].at(u, field));
      g = arith::gcd(g, r[0].at(u, field));
      if (auto y = root_in_field(g, field)) return std::array<Fq, 3>{u, *y, field.one()};
    }
  }
  // points [u, 1, 0]
  {
    Poly<Fq> g(field);
    for (const auto& f : forms) {
      std::vector<Fq> c;
      for (const auto& [e, coef] : f.terms()) {
        if (e[2] > 0) continue;
        if (c.size() <= static_cast<std::size_t>(e[0])) c.resize(e[0] + 1, field.zero());
        c[e[0]] += field.from_prime(coef);
      }
      g = arith::gcd(g, Poly<Fq>(field, std::move(c)));
    }
    if (auto x = root_in_field(g, field)) return std::array<Fq, 3>{*x, field.one(), field.zero()};
  }
  // [1, 0, 0]
  const std::array<Fq, 3> corner{field.one(), field.zero(), field.zero()};
  for (const auto& f : forms) {
    Fq v = field.zero();
    for (const auto& [e, c] : f.terms())
      if (e[1] == 0 && e[2] == 0) v += field.from_prime(c);
    if (!v.is_zero()) return std::nullopt;
  }
  return corner;
}

}  // namespace

SmoothnessReport smooth_plane_curve_check(const TernaryForm<Fp>& f, int e_max, std::uint64_t max_field_size) {
  if (f.is_zero()) throw PreconditionError("smooth_plane_curve_check: zero form");
  if (e_max < 1 || e_max > Fq::kMaxDegree)
    throw PreconditionError("smooth_plane_curve_check: extension degree limit out of range");
  SmoothnessReport report;
  report.prime = f.context().modulus();
  const std::array<TernaryForm<Fp>, 4> forms{f, f.partial(0), f.partial(1), f.partial(2)};
  for (int e = 1; e <= e_max; ++e) {
    const ExtensionField field(report.prime, e);
    if (field.size() > max_field_size) {
      report.status = Smoothness::inconclusive;
      return report;
    }
    if (auto w = search_field(forms, field)) {
      report.status = Smoothness::singular_point_found;
      report.witness = w;
      report.witness_field = field.describe();
      return report;
    }
    report.checked_degree = e;
  }
  report.status = Smoothness::smooth_over_checked_fields;
  return report;
}

}  // namespace higgs::detquartic
