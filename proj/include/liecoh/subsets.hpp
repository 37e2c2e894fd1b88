#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace liecoh {

using SubsetMask = std::uint32_t;

std::size_t binomial(std::size_t n, std::size_t k);

/// The k-element subsets of {0, ..., n-1} in lexicographic order of their
/// sorted element lists. This ordering indexes every exterior-power basis.
class SubsetIndex {
 public:
  SubsetIndex(std::size_t n, std::size_t k);

  std::size_t universe() const { return n_; }
  std::size_t subset_size() const { return k_; }
  std::size_t size() const { return masks_.size(); }
  SubsetMask mask(std::size_t index) const { return masks_[index]; }
  const std::vector<SubsetMask>& masks() const { return masks_; }
  /// Position of a k-subset in the ordering.
  std::size_t index(SubsetMask mask) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<SubsetMask> masks_;
};

inline SubsetMask bit(std::size_t i) { return SubsetMask{1} << i; }

/// Number of elements of `mask` strictly below `i`.
inline std::size_t count_below(SubsetMask mask, std::size_t i) {
  return static_cast<std::size_t>(std::popcount(mask & (bit(i) - 1)));
}

std::vector<std::size_t> elements(SubsetMask mask);

}  // namespace liecoh
