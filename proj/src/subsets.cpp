#include "liecoh/subsets.hpp"

#include <stdexcept>

namespace liecoh {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void enumerate(std::size_t n, std::size_t k, std::size_t start, SubsetMask acc,
               std::vector<SubsetMask>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i) enumerate(n, k - 1, i + 1, acc | bit(i), out);
}

}  // namespace

SubsetIndex::SubsetIndex(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (n > 30) throw std::length_error("SubsetIndex: universe too large");
  masks_.reserve(binomial(n, k));
  enumerate(n, k, 0, 0, masks_);
}

std::size_t SubsetIndex::index(SubsetMask mask) const {
  // rank = C(n,k) - 1 - sum_t C(n-1-a_t, k-t+1) over sorted elements a_1 < ... < a_k
  std::size_t sum = 0;
  std::size_t t = 1;
  for (std::size_t a = 0; a < n_; ++a) {
    if (!(mask & bit(a))) continue;
    sum += binomial(n_ - 1 - a, k_ - t + 1);
    ++t;
  }
  return masks_.size() - 1 - sum;
}

std::vector<std::size_t> elements(SubsetMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

}  // namespace liecoh
