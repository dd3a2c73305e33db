#ifndef LINTERSECT_BIGINT_HPP
#define LINTERSECT_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lintersect {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k) exactly; zero when k < 0 or k > n.
BigInt binomial(int n, int k);

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace lintersect

#endif  // LINTERSECT_BIGINT_HPP
