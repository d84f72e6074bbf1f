#include "higgs/spectral/splitting_type.hpp"

#include <numeric>

#include "higgs/arith/error.hpp"

namespace higgs::spectral {

SplittingType::SplittingType(std::vector<int> e, std::vector<int> m)
    : e_(std::move(e)), m_(std::move(m)) {
  if (e_.empty()) throw DataError("splitting type: e is empty");
  if (e_.size() != m_.size()) throw DataError("splitting type: e and m differ in length");
  for (std::size_t j = 0; j < e_.size(); ++j) {
    if (m_[j] <= 0) throw DataError("splitting type: m must be positive");
    if (j > 0 && e_[j] <= e_[j - 1]) throw DataError("splitting type: e must be strictly increasing");
    for (int i = 0; i < m_[j]; ++i) {
      ebar_.push_back(e_[j]);
      block_of_.push_back(static_cast<int>(j));
    }
  }
  n_ = static_cast<int>(ebar_.size());
}

SplittingType SplittingType::from_expanded(const std::vector<int>& ebar) {
  std::vector<int> e, m;
  for (std::size_t i = 0; i < ebar.size(); ++i) {
    if (i > 0 && ebar[i] < ebar[i - 1]) throw DataError("splitting type: expanded vector not sorted");
    if (i > 0 && ebar[i] == ebar[i - 1]) {
      ++m.back();
    } else {
      e.push_back(ebar[i]);
      m.push_back(1);
    }
  }
  return SplittingType(std::move(e), std::move(m));
}

SplittingType SplittingType::distinct(std::vector<int> e) {
  std::vector<int> m(e.size(), 1);
  return SplittingType(std::move(e), std::move(m));
}

int SplittingType::degree() const { return std::accumulate(ebar_.begin(), ebar_.end(), 0); }

std::string SplittingType::to_string() const {
  std::string out = "e=(";
  for (std::size_t j = 0; j < e_.size(); ++j) out += (j ? "," : "") + std::to_string(e_[j]);
  out += ") m=(";
  for (std::size_t j = 0; j < m_.size(); ++j) out += (j ? "," : "") + std::to_string(m_[j]);
  return out + ")";
}

}  // namespace higgs::spectral
