#pragma once

#include <array>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <string>
#include <vector>

#include "higgs/arith/determinant.hpp"
#include "higgs/detquartic/ternary_form.hpp"

namespace higgs::detquartic {

// Matrices of linear forms in X0, X1, X2. Row and column indices are
// 1-based throughout this module, matching the signs (-1)^(i+j) of the
// cofactor law.

/// Coefficients (c0, c1, c2) of c0 X0 + c1 X1 + c2 X2.
template <Field F>
using LinearForm = std::array<F, 3>;

/// Symmetric d x d matrix of linear forms; only the upper triangle is stored.
template <Field F>
class SymLinMat {
 public:
  using Context = typename F::Context;

  SymLinMat(Context ctx, std::size_t d) : ctx_(std::move(ctx)), d_(d) {
    if (d < 1) throw PreconditionError("SymLinMat: size must be positive");
    upper_.assign(d * (d + 1) / 2, {ctx_.zero(), ctx_.zero(), ctx_.zero()});
  }

  /// From a full matrix; DataError unless it is symmetric.
  static SymLinMat from_rows(const Context& ctx, const std::vector<std::vector<LinearForm<F>>>& rows) {
    SymLinMat m(ctx, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw DataError("SymLinMat: row " + std::to_string(i + 1) + " has wrong length");
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[i][j] != rows[j][i])
          throw DataError("SymLinMat: entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") and (" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ") differ");
      }
      for (std::size_t j = i; j < rows.size(); ++j) m.set(i + 1, j + 1, rows[i][j]);
    }
    return m;
  }

  std::size_t d() const { return d_; }
  const Context& context() const { return ctx_; }

  const LinearForm<F>& entry(std::size_t i, std::size_t j) const { return upper_[index(i, j)]; }
  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const LinearForm<F>& f) { upper_[index(i, j)] = f; }

  friend bool operator==(const SymLinMat&, const SymLinMat&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > d_ || j > d_)
      throw PreconditionError("SymLinMat: index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    if (i > j) std::swap(i, j);
    --i;
    --j;
    // rows 0..i-1 hold d, d-1, ..., d-i+1 entries
    return i * d_ - i * (i - 1) / 2 + (j - i);
  }

  Context ctx_;
  std::size_t d_;
  std::vector<LinearForm<F>> upper_;
};

/// Unconstrained square matrix of linear forms, for comparisons with the
/// symmetric case.
template <Field F>
class LinMat {
 public:
  using Context = typename F::Context;

  LinMat(Context ctx, std::size_t d) : ctx_(std::move(ctx)), d_(d) {
    if (d < 1) throw PreconditionError("LinMat: size must be positive");
    a_.assign(d * d, {ctx_.zero(), ctx_.zero(), ctx_.zero()});
  }
  explicit LinMat(const SymLinMat<F>& m) : LinMat(m.context(), m.d()) {
    for (std::size_t i = 1; i <= d_; ++i)
      for (std::size_t j = 1; j <= d_; ++j) set(i, j, m.entry(i, j));
  }

  std::size_t d() const { return d_; }
  const Context& context() const { return ctx_; }
  const LinearForm<F>& entry(std::size_t i, std::size_t j) const { return a_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, const LinearForm<F>& f) { a_[index(i, j)] = f; }

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > d_ || j > d_)
      throw PreconditionError("LinMat: index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    return (i - 1) * d_ + (j - 1);
  }

  Context ctx_;
  std::size_t d_;
  std::vector<LinearForm<F>> a_;
};

/// (M | r) with a constant column r.
template <Field F>
struct AugmentedMat {
  SymLinMat<F> base;
  std::vector<F> column;

  AugmentedMat(SymLinMat<F> m, std::vector<F> r) : base(std::move(m)), column(std::move(r)) {
    if (column.size() != base.d()) throw DataError("AugmentedMat: column length differs from matrix size");
  }
};

namespace detail {

template <class M>
auto form_entries(const M& m) {
  using F = typename M::Context::Element;
  std::vector<TernaryForm<F>> out;
  for (std::size_t i = 1; i <= m.d(); ++i)
    for (std::size_t j = 1; j <= m.d(); ++j) out.push_back(TernaryForm<F>::linear(m.context(), m.entry(i, j)));
  return out;
}

}  // namespace detail

/// det M, by memoized Laplace expansion.
template <class M>
auto det_form(const M& m) {
  const auto entries = detail::form_entries(m);
  return arith::LaplaceExpander(entries, m.d()).determinant();
}

/// det M_ij: the minor with row i and column j deleted (unsigned).
template <class M>
auto cofactor(const M& m, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > m.d() || j > m.d())
    throw PreconditionError("cofactor: index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  const auto entries = detail::form_entries(m);
  if (m.d() == 1) return one_like(entries.front());
  return arith::LaplaceExpander(entries, m.d()).cofactor_minor(i - 1, j - 1);
}

/// All d^2 minors det M_ij in row-major order, sharing one expansion.
template <class M>
auto all_cofactors(const M& m) {
  const auto entries = detail::form_entries(m);
  arith::LaplaceExpander expander(entries, m.d());
  std::vector<std::decay_t<decltype(entries.front())>> out;
  for (std::size_t i = 0; i < m.d(); ++i)
    for (std::size_t j = 0; j < m.d(); ++j)
      out.push_back(m.d() == 1 ? one_like(entries.front()) : expander.cofactor_minor(i, j));
  return out;
}

/// Adjugate identity from precomputed data: cof holds det M_ij row-major
/// (as from all_cofactors), det the form to divide by.
template <Field F>
bool adjugate_identity_holds(const std::vector<TernaryForm<F>>& cof, const TernaryForm<F>& det, std::size_t d,
                             std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  for (std::size_t idx : {i, j, k, l})
    if (idx < 1 || idx > d) throw PreconditionError("adjugate identity: index " + std::to_string(idx) + " out of range");
  if (det.is_zero()) throw PreconditionError("adjugate identity: determinant is zero");
  auto at = [&](std::size_t r, std::size_t c) -> const TernaryForm<F>& { return cof[(r - 1) * d + (c - 1)]; };
  return divide_exact(at(i, j) * at(k, l) - at(i, l) * at(k, j), det).has_value();
}

/// Whether det M divides det M_ij det M_kl - det M_il det M_kj. Throws
/// PreconditionError for det M = 0.
template <class M>
bool adjugate_identity_check(const M& m, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  return adjugate_identity_holds(all_cofactors(m), det_form(m), m.d(), i, j, k, l);
}

}  // namespace higgs::detquartic
