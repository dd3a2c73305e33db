#ifndef LINTERSECT_POLYNOMIAL_HPP
#define LINTERSECT_POLYNOMIAL_HPP

#include <map>
#include <string>

#include "lintersect/bigint.hpp"
#include "lintersect/family.hpp"
#include "lintersect/subset_mask.hpp"

namespace lintersect {

/// A point of {0,1}^n given by the set of its one-coordinates.
struct PointVector {
  SubsetMask mask;
  int n = 0;

  /// Coordinates x_1..x_n as 0/1 values.
  std::vector<int> coordinates() const;

  friend bool operator==(const PointVector&, const PointVector&) = default;
};

/// Characteristic vector of f inside {0,1}^n. Throws std::invalid_argument if f ⊄ [n].
PointVector char_vector(SubsetMask f, int n);

/// A multilinear polynomial over the integers in n variables. Each term is a
/// monomial x_S (S a subset of [n]) with a nonzero coefficient; x_∅ is the constant.
class MultilinearPoly {
public:
  using Terms = std::map<SubsetMask, BigInt, GradedLess>;

  explicit MultilinearPoly(int n);

  static MultilinearPoly constant(int n, const BigInt& value);
  static MultilinearPoly monomial(int n, SubsetMask support, const BigInt& coefficient = 1);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest support size; 0 for the zero polynomial.
  int degree() const;
  BigInt coefficient(SubsetMask support) const;
  /// Union of all monomial supports.
  SubsetMask variables() const;

  /// Adds c·x_S, dropping the term if it cancels.
  void add_term(SubsetMask support, const BigInt& coefficient);

  MultilinearPoly& operator+=(const MultilinearPoly& other);
  MultilinearPoly& operator-=(const MultilinearPoly& other);
  MultilinearPoly& operator*=(const BigInt& scalar);

  friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
  friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) { return a -= b; }
  friend MultilinearPoly operator*(MultilinearPoly a, const BigInt& s) { return a *= s; }
  /// Multilinear product: x_S · x_T = x_{S∪T}.
  friend MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b);

  friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

  /// e.g. "2*x1*x3 - x2 + 1", terms in graded order, highest first.
  std::string to_string() const;

private:
  void check_same_ambient(const MultilinearPoly& other) const;

  int n_;
  Terms terms_;
};

/// Reduced product; agrees with the ordinary product on every point of {0,1}^n.
MultilinearPoly poly_mul(const MultilinearPoly& a, const MultilinearPoly& b);

/// Sum of x_j over j in the support of v.
MultilinearPoly linear_form(const PointVector& v);

/// Sum of the coefficients whose support lies inside v.
BigInt eval(const MultilinearPoly& p, const PointVector& v);

/// Multilinear reduction of Prod_{l in L, l < |f|} (<x, v_f> - l). The empty product is 1.
MultilinearPoly build_q(SubsetMask f, const IntersectionSpec& spec, int n);

/// (x_n - 1) · x_T for T ⊆ [n-1]. Throws std::invalid_argument if T contains n.
MultilinearPoly build_g(SubsetMask t, int n);

}  // namespace lintersect

#endif  // LINTERSECT_POLYNOMIAL_HPP
