#include "lintersect/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lintersect {

namespace {

void check_range(int n, int s) {
  if (n < 1 || n > kMaxGroundSize) {
    throw std::invalid_argument("n must lie in 1.." + std::to_string(kMaxGroundSize) + ", got " + std::to_string(n));
  }
  if (s < 1 || s > n - 1) {
    throw std::invalid_argument("s must satisfy 1 <= s <= n-1, got n=" + std::to_string(n) +
                                " s=" + std::to_string(s));
  }
}

}  // namespace

GeneratedFamily gen_sharp_no_apex(int n, int s) {
  check_range(n, s);
  // Apex-free sets in graded order are already canonical.
  return {SetFamily(n, subsets_up_to(n - 1, s)), IntersectionSpec::range(s)};
}

GeneratedFamily gen_sharp_mixed(int n, int s) {
  check_range(n, s);
  std::vector<SubsetMask> sets;
  for (SubsetMask base : subsets_up_to(n - 1, s - 1)) sets.push_back(base.with(n));
  for (SubsetMask top : subsets_of_size(n - 1, s)) sets.push_back(top);
  std::sort(sets.begin(), sets.end(), [n](SubsetMask a, SubsetMask b) { return canonical_less(a, b, n); });
  return {SetFamily(n, std::move(sets)), IntersectionSpec::range(s)};
}

}  // namespace lintersect
