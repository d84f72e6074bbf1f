#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace higgs::arith {

// Determinant routines over an arbitrary commutative ring R. R needs
// + - * and the ADL helpers zero_like / one_like; Bareiss additionally
// needs exact_quotient and is_zero. Matrices are square, row-major.

/// Laplace expansion with memoized minors. det(rows, cols) is cached per
/// (row mask, column mask), so all principal minors of an n x n matrix
/// cost O(4^n) ring operations in the worst case. Intended for n <= 8.
template <class R>
class LaplaceExpander {
 public:
  LaplaceExpander(const std::vector<R>& entries, std::size_t n) : a_(entries), n_(n) {
    if (n > 16) throw std::invalid_argument("LaplaceExpander: n too large");
    if (entries.size() != n * n) throw std::invalid_argument("LaplaceExpander: shape mismatch");
  }

  /// Minor on the given row and column sets (bit masks of equal popcount).
  R minor(std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0) return one_like(a_.front());
    const std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int r0 = std::countr_zero(rows);
    const std::uint32_t rest_rows = rows & (rows - 1);
    std::vector<R> terms;
    bool negative = false;
    for (std::uint32_t c = cols; c; c &= c - 1) {
      const int col = std::countr_zero(c);
      R term = at(r0, col) * minor(rest_rows, cols & ~(1u << col));
      terms.push_back(negative ? -term : term);
      negative = !negative;
    }
    R acc = std::move(terms.front());
    for (std::size_t i = 1; i < terms.size(); ++i) acc += terms[i];
    memo_.emplace(key, acc);
    return acc;
  }

  R determinant() {
    const std::uint32_t all = n_ == 32 ? ~0u : (1u << n_) - 1;
    return minor(all, all);
  }

  /// Minor with row i and column j deleted.
  R cofactor_minor(std::size_t i, std::size_t j) {
    const std::uint32_t all = (1u << n_) - 1;
    return minor(all & ~(1u << i), all & ~(1u << j));
  }

  /// e_i = sum of the principal i x i minors, for i = 1..n (index 0 holds e_1).
  std::vector<R> principal_minor_sums() {
    std::vector<std::vector<R>> by_size(n_ + 1);
    for (std::uint32_t s = 1; s < (1u << n_); ++s)
      by_size[std::popcount(s)].push_back(minor(s, s));
    std::vector<R> out;
    for (std::size_t i = 1; i <= n_; ++i) {
      R acc = std::move(by_size[i].front());
      for (std::size_t j = 1; j < by_size[i].size(); ++j) acc += by_size[i][j];
      out.push_back(std::move(acc));
    }
    return out;
  }

 private:
  const R& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  const std::vector<R>& a_;
  std::size_t n_;
  std::unordered_map<std::uint64_t, R> memo_;
};

/// Berkowitz's division-free algorithm. Returns (p_0, ..., p_n) with
/// det(T*I - A) = sum_i p_i T^(n-i), p_0 = 1. Works over any commutative
/// ring, including dual numbers.
template <class R>
std::vector<R> berkowitz(const std::vector<R>& a, std::size_t n) {
  if (n == 0 || a.size() != n * n) throw std::invalid_argument("berkowitz: bad shape");
  const R one = one_like(a.front());
  auto at = [&](std::size_t r, std::size_t c) -> const R& { return a[r * n + c]; };

  // Characteristic vector of the leading 1x1 block.
  std::vector<R> poly = {one, -at(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Submatrix A_r = leading r x r, row R = a[r][0..r), column C = a[0..r)[r].
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C.
    std::vector<R> col;
    col.reserve(r + 2);
    col.push_back(one);
    col.push_back(-at(r, r));
    std::vector<R> v;  // A^j C
    v.reserve(r);
    for (std::size_t i = 0; i < r; ++i) v.push_back(at(i, r));
    for (std::size_t j = 0; j < r; ++j) {
      R dot = at(r, 0) * v[0];
      for (std::size_t i = 1; i < r; ++i) dot += at(r, i) * v[i];
      col.push_back(-dot);
      if (j + 1 < r) {
        std::vector<R> next;
        next.reserve(r);
        for (std::size_t i = 0; i < r; ++i) {
          R acc = at(i, 0) * v[0];
          for (std::size_t k = 1; k < r; ++k) acc += at(i, k) * v[k];
          next.push_back(std::move(acc));
        }
        v = std::move(next);
      }
    }
    // new_poly = Toeplitz(col) * poly, a lower-triangular (r+2) x (r+1) product.
    std::vector<R> next_poly;
    next_poly.reserve(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      bool started = false;
      R acc = one;
      for (std::size_t k = 0; k <= std::min(i, r); ++k) {
        R term = col[i - k] * poly[k];
        if (!started) {
          acc = std::move(term);
          started = true;
        } else {
          acc += term;
        }
      }
      next_poly.push_back(std::move(acc));
    }
    poly = std::move(next_poly);
  }
  return poly;
}

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact.
template <class R>
R bareiss_determinant(std::vector<R> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("bareiss: bad shape");
  if (n == 0) throw std::invalid_argument("bareiss: empty matrix");
  auto at = [&](std::size_t r, std::size_t c) -> R& { return a[r * n + c]; };
  bool negate = false;
  R prev = one_like(a.front());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && at(piv, k).is_zero()) ++piv;
    if (piv == n) return zero_like(a.front());
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        at(i, j) = exact_quotient(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
      at(i, k) = zero_like(at(i, k));
    }
    prev = at(k, k);
  }
  R det = at(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace higgs::arith
