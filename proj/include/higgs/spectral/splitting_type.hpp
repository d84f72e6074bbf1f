#pragma once

#include <string>
#include <vector>

namespace higgs::spectral {

/// Isomorphism class of E = O(e_1)^{m_1} + ... + O(e_l)^{m_l} on P^1,
/// with e strictly increasing and every m_j positive.
class SplittingType {
 public:
  SplittingType(std::vector<int> e, std::vector<int> m);

  /// Compresses a nondecreasing expanded vector into (e, m).
  static SplittingType from_expanded(const std::vector<int>& ebar);
  /// All multiplicities one.
  static SplittingType distinct(std::vector<int> e);

  const std::vector<int>& e() const { return e_; }
  const std::vector<int>& m() const { return m_; }
  int blocks() const { return static_cast<int>(e_.size()); }
  int n() const { return n_; }
  int degree() const;
  /// (e~_1 <= ... <= e~_n)
  const std::vector<int>& expanded() const { return ebar_; }
  /// Block index of expanded position r.
  int block_of(int r) const { return block_of_[static_cast<std::size_t>(r)]; }

  std::string to_string() const;
  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<int> e_;
  std::vector<int> m_;
  int n_ = 0;
  std::vector<int> ebar_;
  std::vector<int> block_of_;
};

}  // namespace higgs::spectral
