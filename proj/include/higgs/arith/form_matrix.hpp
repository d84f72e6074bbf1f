#pragma once

#include <string>
#include <utility>
#include <vector>

#include "higgs/arith/binary_form.hpp"

namespace higgs::arith {

/// Matrix of binary forms whose entry (i, j) must have the twist recorded in
/// a per-entry profile. Entries are stored row-major.
template <Field F>
class FormMatrix {
 public:
  using Context = typename F::Context;

  /// All-zero matrix with the given twist profile (row-major, rows*cols).
  FormMatrix(Context ctx, std::size_t rows, std::size_t cols, std::vector<int> profile)
      : rows_(rows), cols_(cols), profile_(std::move(profile)) {
    if (rows == 0 || cols == 0) throw DataError("form matrix: empty shape");
    if (profile_.size() != rows * cols) throw DataError("form matrix: profile size mismatch");
    entries_.reserve(profile_.size());
    for (int t : profile_) entries_.emplace_back(ctx, t);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int twist_at(std::size_t i, std::size_t j) const { return profile_[i * cols_ + j]; }
  const std::vector<int>& profile() const { return profile_; }

  const BinaryForm<F>& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<BinaryForm<F>>& entries() const { return entries_; }

  /// Throws TwistMismatch if the form's twist differs from the profile.
  void set(std::size_t i, std::size_t j, BinaryForm<F> f) {
    if (f.twist() != twist_at(i, j))
      throw TwistMismatch("entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") needs twist " + std::to_string(twist_at(i, j)) + ", got " +
                          std::to_string(f.twist()));
    entries_[i * cols_ + j] = std::move(f);
  }

  friend bool operator==(const FormMatrix& a, const FormMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<int> profile_;
  std::vector<BinaryForm<F>> entries_;
};

}  // namespace higgs::arith
