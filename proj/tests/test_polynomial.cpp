#include <gtest/gtest.h>

#include <random>

#include "lintersect/polynomial.hpp"
#include "support/oracles.hpp"

using namespace lintersect;
using lintersect::testing::DenseAffine;
using lintersect::testing::mobius_coefficients;
using lintersect::testing::unreduced_product_at;

namespace {

MultilinearPoly x(int n, std::initializer_list<int> vars, long long c = 1) {
  return MultilinearPoly::monomial(n, SubsetMask::of(vars), c);
}

MultilinearPoly from_affine(int n, const DenseAffine& f) {
  MultilinearPoly p = MultilinearPoly::constant(n, -f.constant);
  for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
    p.add_term(SubsetMask::singleton(static_cast<int>(j) + 1), f.coeffs[j]);
  }
  return p;
}

// Coefficients the polynomial must have, recovered from its values on the cube.
MultilinearPoly interpolate(int n, const std::vector<BigInt>& values) {
  const auto coeffs = mobius_coefficients(n, values);
  MultilinearPoly p(n);
  for (std::uint64_t s = 0; s < coeffs.size(); ++s) p.add_term(SubsetMask(s), coeffs[s]);
  return p;
}

}  // namespace

TEST(CharVector, Examples) {
  EXPECT_EQ(char_vector(SubsetMask::of({1, 3}), 3).coordinates(), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(char_vector(SubsetMask{}, 4).coordinates(), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(char_vector(SubsetMask::full(3), 3).coordinates(), (std::vector<int>{1, 1, 1}));
  EXPECT_THROW(char_vector(SubsetMask::of({4}), 3), std::invalid_argument);
}

TEST(LinearForm, Examples) {
  EXPECT_EQ(linear_form(char_vector(SubsetMask::of({1, 3}), 3)), x(3, {1}) + x(3, {3}));
  EXPECT_TRUE(linear_form(char_vector(SubsetMask{}, 3)).is_zero());
  EXPECT_EQ(linear_form(char_vector(SubsetMask::of({2}), 3)), x(3, {2}));
}

TEST(MultilinearPoly, StoresNoZeroTerms) {
  MultilinearPoly p = x(3, {1}) + x(3, {2});
  p -= x(3, {1});
  EXPECT_EQ(p.terms().size(), 1U);
  EXPECT_EQ(p.coefficient(SubsetMask::of({1})), 0);
  p *= 0;
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), 0);
  EXPECT_THROW(x(2, {3}), std::invalid_argument);
  EXPECT_THROW(x(2, {1}) + x(3, {1}), std::invalid_argument);
}

TEST(MultilinearPoly, ToString) {
  EXPECT_EQ((x(3, {1, 3}, 2) - x(3, {2}) + MultilinearPoly::constant(3, 1)).to_string(), "2*x1*x3 - x2 + 1");
  EXPECT_EQ(MultilinearPoly(2).to_string(), "0");
  EXPECT_EQ(MultilinearPoly::constant(2, -4).to_string(), "-4");
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(poly_mul(x(3, {1}), x(3, {1})), x(3, {1}));
  const auto p = x(3, {1, 2}, 5) - MultilinearPoly::constant(3, 7);
  EXPECT_EQ(poly_mul(p, MultilinearPoly::constant(3, 1)), p);

  // (x1+x3)(x1+x3-1): values on {0,1}^3 interpolated back to coefficients.
  const DenseAffine a{{1, 0, 1}, 0};
  const DenseAffine b{{1, 0, 1}, 1};
  std::vector<BigInt> values;
  for (std::uint64_t pt = 0; pt < 8; ++pt) values.push_back(unreduced_product_at({a, b}, SubsetMask(pt)));
  const auto expected = interpolate(3, values);
  EXPECT_EQ(expected, x(3, {1, 3}, 2));
  EXPECT_EQ(poly_mul(from_affine(3, a), from_affine(3, b)), expected);
}

TEST(PolyMul, AgreesWithPointwiseProductOnRandomFactors) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int factors = 1 + static_cast<int>(rng() % 3);
    std::vector<DenseAffine> forms;
    MultilinearPoly product = MultilinearPoly::constant(n, 1);
    for (int k = 0; k < factors; ++k) {
      DenseAffine f;
      for (int j = 0; j < n; ++j) f.coeffs.push_back(static_cast<long long>(rng() % 7) - 3);
      f.constant = static_cast<long long>(rng() % static_cast<unsigned>(n + 1));
      forms.push_back(f);
      product = poly_mul(product, from_affine(n, f));
    }
    std::vector<BigInt> values;
    for (std::uint64_t pt = 0; pt < (std::uint64_t{1} << n); ++pt) {
      values.push_back(unreduced_product_at(forms, SubsetMask(pt)));
      ASSERT_EQ(eval(product, char_vector(SubsetMask(pt), n)), values.back());
    }
    EXPECT_EQ(product, interpolate(n, values)) << "multilinear representation is unique";
  }
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval(x(3, {1, 3}, 2), char_vector(SubsetMask::of({1, 3}), 3)), 2);
  const auto p = x(3, {1, 2}, 4) + MultilinearPoly::constant(3, -9);
  EXPECT_EQ(eval(p, char_vector(SubsetMask{}, 3)), -9);
  EXPECT_EQ(eval(x(3, {3}) - MultilinearPoly::constant(3, 1), char_vector(SubsetMask::of({1, 2}), 3)), -1);
  EXPECT_THROW(eval(p, char_vector(SubsetMask{}, 4)), std::invalid_argument);
}

TEST(BuildQ, Examples) {
  const IntersectionSpec l01({0, 1});
  const auto q = build_q(SubsetMask::of({1, 3}), l01, 3);
  EXPECT_EQ(q, x(3, {1, 3}, 2));
  // Brute-force check against the unreduced product at all 8 points.
  for (std::uint64_t pt = 0; pt < 8; ++pt) {
    const BigInt expected = unreduced_product_at({{{1, 0, 1}, 0}, {{1, 0, 1}, 1}}, SubsetMask(pt));
    EXPECT_EQ(eval(q, char_vector(SubsetMask(pt), 3)), expected);
  }
  EXPECT_EQ(build_q(SubsetMask{}, l01, 3), MultilinearPoly::constant(3, 1));
  EXPECT_EQ(build_q(SubsetMask{}, IntersectionSpec({2, 5}), 3), MultilinearPoly::constant(3, 1));
  EXPECT_EQ(build_q(SubsetMask::of({2}), IntersectionSpec({0}), 3), x(3, {2}));
}

TEST(BuildQ, StructuralInvariants) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const SubsetMask f(rng() & SubsetMask::full(n).bits());
    const auto spec = lintersect::testing::random_spec(rng, n + 1, static_cast<int>(rng() % 4));
    const auto q = build_q(f, spec, n);

    EXPECT_LE(q.degree(), spec.size());
    EXPECT_TRUE(q.variables().subset_of(f));
    // Q(v_F) = Prod_{l < |F|} (|F| - l).
    BigInt diagonal = 1;
    for (int l : spec.values()) {
      if (l < f.size()) diagonal *= f.size() - l;
    }
    EXPECT_EQ(eval(q, char_vector(f, n)), diagonal);
    EXPECT_NE(diagonal, 0);
  }
}

TEST(BuildG, Examples) {
  EXPECT_EQ(build_g(SubsetMask{}, 3), x(3, {3}) - MultilinearPoly::constant(3, 1));
  EXPECT_EQ(build_g(SubsetMask::of({1}), 3), x(3, {1, 3}) - x(3, {1}));
  EXPECT_EQ(build_g(SubsetMask::of({1, 2}), 4), x(4, {1, 2, 4}) - x(4, {1, 2}));
  EXPECT_EQ(build_g(SubsetMask::of({1, 2}), 4).degree(), 3);
  EXPECT_THROW(build_g(SubsetMask::of({3}), 3), std::invalid_argument);
}
