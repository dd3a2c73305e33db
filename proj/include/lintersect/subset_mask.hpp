#ifndef LINTERSECT_SUBSET_MASK_HPP
#define LINTERSECT_SUBSET_MASK_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace lintersect {

/// Largest ground-set size representable by a single-word mask.
inline constexpr int kMaxGroundSize = 62;

/// A subset of [n] stored as a bit pattern. Element i (1-based) lives at bit i-1,
/// so the same value doubles as a multilinear monomial support and as a 0/1 point.
class SubsetMask {
public:
  using word_type = std::uint64_t;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(word_type bits) : bits_(bits) {}

  /// Throws std::out_of_range for elements outside 1..kMaxGroundSize.
  static SubsetMask of(std::initializer_list<int> elements);
  static SubsetMask of(const std::vector<int>& elements);

  /// [n]; n = 0 gives the empty set.
  static constexpr SubsetMask full(int n) {
    return SubsetMask(n <= 0 ? 0 : (n >= 64 ? ~word_type{0} : (word_type{1} << n) - 1));
  }
  static constexpr SubsetMask singleton(int element) {
    return SubsetMask(word_type{1} << (element - 1));
  }

  constexpr word_type bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int element) const {
    return element >= 1 && element <= 64 && ((bits_ >> (element - 1)) & 1U) != 0;
  }
  constexpr bool within(int n) const { return (bits_ & ~full(n).bits_) == 0; }
  constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  /// Largest element, 0 for the empty set.
  constexpr int max_element() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  constexpr SubsetMask with(int element) const { return SubsetMask(bits_ | singleton(element).bits_); }
  constexpr SubsetMask without(int element) const { return SubsetMask(bits_ & ~singleton(element).bits_); }

  /// Elements in ascending order.
  std::vector<int> elements() const;
  /// "{1,3}", "{}" for the empty set.
  std::string to_string() const;

  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

private:
  word_type bits_ = 0;
};

constexpr int intersection_size(SubsetMask a, SubsetMask b) { return (a & b).size(); }

/// Graded order: cardinality ascending, then ascending bit pattern. Used for the
/// search vertex list, the auxiliary g-family and the monomial column basis.
struct GradedLess {
  constexpr bool operator()(SubsetMask a, SubsetMask b) const {
    const int ca = a.size();
    const int cb = b.size();
    return ca != cb ? ca < cb : a.bits() < b.bits();
  }
};

/// All subsets of [n] with at most max_card elements, in graded order.
std::vector<SubsetMask> subsets_up_to(int n, int max_card);

/// All subsets of [n] with exactly k elements, ascending bit pattern.
std::vector<SubsetMask> subsets_of_size(int n, int k);

}  // namespace lintersect

template <>
struct std::hash<lintersect::SubsetMask> {
  std::size_t operator()(lintersect::SubsetMask m) const noexcept {
    return std::hash<std::uint64_t>{}(m.bits());
  }
};

#endif  // LINTERSECT_SUBSET_MASK_HPP
