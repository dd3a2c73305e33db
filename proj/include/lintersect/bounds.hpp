#ifndef LINTERSECT_BOUNDS_HPP
#define LINTERSECT_BOUNDS_HPP

#include "lintersect/bigint.hpp"

namespace lintersect {

/// Sum_{i=0}^{min(s,n)} C(n, i): the general bound for L-intersecting families with |L| = s.
/// Throws std::invalid_argument unless n >= 1 and s >= 0.
BigInt bound_fw(int n, int s);

/// Sum_{i=0}^{min(s,n-1)} C(n-1, i): the bound for ordered L-intersecting families
/// (and for positive-only L of size s).
BigInt bound_ordered(int n, int s);

/// Number of auxiliary polynomials in the certificate, Sum_{i=0}^{s-1} C(n-1, i).
BigInt auxiliary_count(int n, int s);

}  // namespace lintersect

#endif  // LINTERSECT_BOUNDS_HPP
