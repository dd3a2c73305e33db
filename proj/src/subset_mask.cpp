#include "lintersect/subset_mask.hpp"

#include <algorithm>
#include <stdexcept>

namespace lintersect {

namespace {

SubsetMask mask_from(auto first, auto last) {
  SubsetMask::word_type bits = 0;
  for (; first != last; ++first) {
    const int e = *first;
    if (e < 1 || e > kMaxGroundSize) {
      throw std::out_of_range("element " + std::to_string(e) + " outside 1.." +
                              std::to_string(kMaxGroundSize));
    }
    bits |= SubsetMask::word_type{1} << (e - 1);
  }
  return SubsetMask(bits);
}

}  // namespace

SubsetMask SubsetMask::of(std::initializer_list<int> elements) {
  return mask_from(elements.begin(), elements.end());
}

SubsetMask SubsetMask::of(const std::vector<int>& elements) {
  return mask_from(elements.begin(), elements.end());
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (word_type rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

std::vector<SubsetMask> subsets_of_size(int n, int k) {
  std::vector<SubsetMask> out;
  if (k < 0 || k > n || n < 0 || n > kMaxGroundSize) return out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  // Gosper's hack walks same-popcount patterns in ascending order.
  const SubsetMask::word_type limit = SubsetMask::word_type{1} << n;
  SubsetMask::word_type v = (SubsetMask::word_type{1} << k) - 1;
  while (v < limit) {
    out.emplace_back(v);
    const SubsetMask::word_type c = v & (~v + 1);
    const SubsetMask::word_type r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

std::vector<SubsetMask> subsets_up_to(int n, int max_card) {
  std::vector<SubsetMask> out;
  for (int k = 0; k <= std::min(n, max_card); ++k) {
    auto level = subsets_of_size(n, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace lintersect
