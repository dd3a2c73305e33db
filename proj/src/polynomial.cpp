#include "lintersect/polynomial.hpp"

#include <stdexcept>

namespace lintersect {

std::vector<int> PointVector::coordinates() const {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) out[static_cast<std::size_t>(j - 1)] = mask.contains(j) ? 1 : 0;
  return out;
}

PointVector char_vector(SubsetMask f, int n) {
  if (n < 0 || n > kMaxGroundSize || !f.within(n)) {
    throw std::invalid_argument(f.to_string() + " is not a subset of [" + std::to_string(n) + "]");
  }
  return {f, n};
}

MultilinearPoly::MultilinearPoly(int n) : n_(n) {
  if (n < 0 || n > kMaxGroundSize) throw std::invalid_argument("variable count out of range: " + std::to_string(n));
}

MultilinearPoly MultilinearPoly::constant(int n, const BigInt& value) {
  return monomial(n, SubsetMask{}, value);
}

MultilinearPoly MultilinearPoly::monomial(int n, SubsetMask support, const BigInt& coefficient) {
  MultilinearPoly p(n);
  p.add_term(support, coefficient);
  return p;
}

int MultilinearPoly::degree() const {
  // Graded order puts the largest support last.
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

BigInt MultilinearPoly::coefficient(SubsetMask support) const {
  const auto it = terms_.find(support);
  return it == terms_.end() ? BigInt(0) : it->second;
}

SubsetMask MultilinearPoly::variables() const {
  SubsetMask all;
  for (const auto& [support, c] : terms_) all = all | support;
  return all;
}

void MultilinearPoly::add_term(SubsetMask support, const BigInt& coefficient) {
  if (!support.within(n_)) {
    throw std::invalid_argument("monomial " + support.to_string() + " uses a variable beyond x" + std::to_string(n_));
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(support, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultilinearPoly::check_same_ambient(const MultilinearPoly& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("ambient mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_) +
                                " variables");
  }
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& other) {
  check_same_ambient(other);
  for (const auto& [support, c] : other.terms_) add_term(support, c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& other) {
  check_same_ambient(other);
  for (const auto& [support, c] : other.terms_) add_term(support, -c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [support, c] : terms_) c *= scalar;
  return *this;
}

MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b) {
  a.check_same_ambient(b);
  MultilinearPoly out(a.n_);
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) out.add_term(sa | sb, ca * cb);
  }
  return out;
}

std::string MultilinearPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [support, c] = *it;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    for (int j : support.elements()) {
      if (!vars.empty()) vars += '*';
      vars += "x" + std::to_string(j);
    }
    if (vars.empty()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + "*";
      out += vars;
    }
  }
  return out;
}

MultilinearPoly poly_mul(const MultilinearPoly& a, const MultilinearPoly& b) { return a * b; }

MultilinearPoly linear_form(const PointVector& v) {
  MultilinearPoly p(v.n);
  for (int j : v.mask.elements()) p.add_term(SubsetMask::singleton(j), 1);
  return p;
}

BigInt eval(const MultilinearPoly& p, const PointVector& v) {
  if (p.n() != v.n) {
    throw std::invalid_argument("ambient mismatch: polynomial in " + std::to_string(p.n()) + " variables, point in " +
                                std::to_string(v.n));
  }
  BigInt total = 0;
  for (const auto& [support, c] : p.terms()) {
    if (support.subset_of(v.mask)) total += c;
  }
  return total;
}

MultilinearPoly build_q(SubsetMask f, const IntersectionSpec& spec, int n) {
  const PointVector v = char_vector(f, n);
  const MultilinearPoly form = linear_form(v);
  MultilinearPoly q = MultilinearPoly::constant(n, 1);
  for (int l : spec.values()) {
    if (l >= f.size()) break;  // values are increasing
    q = q * (form - MultilinearPoly::constant(n, l));
  }
  return q;
}

MultilinearPoly build_g(SubsetMask t, int n) {
  if (n < 1 || !t.within(n - 1)) {
    throw std::invalid_argument(t.to_string() + " must be a subset of [" + std::to_string(n - 1) + "]");
  }
  MultilinearPoly g(n);
  g.add_term(t.with(n), 1);
  g.add_term(t, -1);
  return g;
}

}  // namespace lintersect
