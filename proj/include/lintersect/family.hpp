#ifndef LINTERSECT_FAMILY_HPP
#define LINTERSECT_FAMILY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lintersect/subset_mask.hpp"

namespace lintersect {

/// Raised when a family or an intersection spec violates its construction invariants.
class FamilyError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The set L of allowed pairwise intersection sizes, kept strictly increasing.
class IntersectionSpec {
public:
  IntersectionSpec() = default;
  /// Requires a strictly increasing list of non-negative values.
  explicit IntersectionSpec(std::vector<int> values);

  /// Sorts and deduplicates; still rejects negative values.
  static IntersectionSpec canonical(std::vector<int> values);
  /// {0, 1, ..., s-1}.
  static IntersectionSpec range(int s);

  const std::vector<int>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  bool contains(int value) const;
  /// Members that can never occur as an intersection size inside [n].
  std::vector<int> values_at_least(int n) const;
  std::string to_string() const;

  friend bool operator==(const IntersectionSpec&, const IntersectionSpec&) = default;

private:
  std::vector<int> values_;
  std::uint64_t small_ = 0;  // membership bits for values below 64
};

/// An indexed list of pairwise distinct subsets of [n].
class SetFamily {
public:
  /// Throws FamilyError unless 1 <= n <= kMaxGroundSize, every member lies in [n]
  /// and members are pairwise distinct.
  SetFamily(int n, std::vector<SubsetMask> sets);

  int n() const { return n_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const std::vector<SubsetMask>& sets() const { return sets_; }
  SubsetMask operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  /// True when member i contains the apex element n.
  bool has_apex(std::size_t i) const { return sets_[i].contains(n_); }

  std::string to_string() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
  int n_;
  std::vector<SubsetMask> sets_;
};

/// Indices are 0-based positions in the family.
struct PairIntersection {
  std::size_t i;
  std::size_t j;
  int size;

  friend bool operator==(const PairIntersection&, const PairIntersection&) = default;
};

/// |F_i ∩ F_j| for every i < j, ordered by i then j.
std::vector<PairIntersection> intersection_profile(const SetFamily& family);

struct LIntersectionVerdict {
  bool holds = true;
  std::optional<PairIntersection> violation;  // smallest (i, j) whose size is not in L

  explicit operator bool() const { return holds; }
};

LIntersectionVerdict is_l_intersecting(const SetFamily& family, const IntersectionSpec& spec);

/// r sets containing the apex come first. permutation[k] is the input index of the
/// set that sits at position k.
struct OrderingWitness {
  std::size_t r = 0;
  std::vector<std::size_t> permutation;

  friend bool operator==(const OrderingWitness&, const OrderingWitness&) = default;
};

enum class OrderingViolation {
  ApexNotPrefix,        // an apex-containing set follows an apex-free one
  CardinalityDecrease,  // |F_k| < |F_{k-1}|
  NotOrderable,         // no reindexing can satisfy both conditions
};

struct OrderingFailure {
  OrderingViolation kind;
  std::size_t index = 0;  // offending position in the input order
  std::optional<std::pair<SubsetMask, SubsetMask>> offending;

  std::string describe() const;
};

const char* to_string(OrderingViolation kind);

/// Checks the ordered conditions for the family exactly as indexed.
std::variant<OrderingWitness, OrderingFailure> check_ordered_indexing(const SetFamily& family);

struct OrderedFamily {
  SetFamily family;
  OrderingWitness witness;
};

/// Reindexes into canonical ordered form: cardinality ascending, apex-containing sets
/// first among equal cardinality, then ascending bit pattern. Succeeds iff the largest
/// apex-containing member is no larger than the smallest apex-free member.
std::variant<OrderedFamily, OrderingFailure> make_ordered(const SetFamily& family);

/// Canonical sort key used by make_ordered.
bool canonical_less(SubsetMask a, SubsetMask b, int n);

/// Cheap orderability test without building the reindexed family.
bool is_orderable(const SetFamily& family);

}  // namespace lintersect

#endif  // LINTERSECT_FAMILY_HPP
