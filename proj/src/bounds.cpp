#include "lintersect/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace lintersect {

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) after this step
  }
  return result;
}

namespace {

void check_params(int n, int s) {
  if (n < 1) throw std::invalid_argument("n must be positive, got " + std::to_string(n));
  if (s < 0) throw std::invalid_argument("s must be non-negative, got " + std::to_string(s));
}

BigInt partial_row_sum(int row, int upto) {
  BigInt total = 0;
  for (int i = 0; i <= std::min(upto, row); ++i) total += binomial(row, i);
  return total;
}

}  // namespace

BigInt bound_fw(int n, int s) {
  check_params(n, s);
  return partial_row_sum(n, s);
}

BigInt bound_ordered(int n, int s) {
  check_params(n, s);
  return partial_row_sum(n - 1, s);
}

BigInt auxiliary_count(int n, int s) {
  check_params(n, s);
  return s == 0 ? BigInt(0) : partial_row_sum(n - 1, s - 1);
}

}  // namespace lintersect
