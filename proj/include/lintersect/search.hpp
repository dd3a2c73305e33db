#ifndef LINTERSECT_SEARCH_HPP
#define LINTERSECT_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lintersect/bigint.hpp"
#include "lintersect/bitset.hpp"
#include "lintersect/family.hpp"

namespace lintersect {

inline constexpr int kDefaultSearchMaxN = 16;
inline constexpr int kOracleMaxN = 4;

class CapExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Compatibility graph: vertices are subsets of [n], A ~ B iff |A ∩ B| ∈ L.
struct CompatGraph {
  int n = 0;
  IntersectionSpec spec;
  std::vector<SubsetMask> vertices;       // graded order
  std::vector<DynamicBitset> adjacency;   // symmetric, no self-loops

  bool adjacent(std::size_t a, std::size_t b) const { return adjacency[a].test(b); }
  std::size_t edge_count() const;
};

/// Vertices are all subsets of [n] (at most max_card elements when given).
/// Throws CapExceeded when n > max_n.
CompatGraph build_graph(int n, const IntersectionSpec& spec, std::optional<int> max_card = std::nullopt,
                        int max_n = kDefaultSearchMaxN);

struct SearchLimits {
  int max_n = kDefaultSearchMaxN;
  std::optional<int> max_card;
  std::uint64_t node_budget = 100'000'000;
  unsigned workers = 1;
  /// Stop as soon as a family reaches the ordered bound. Leave off when the point of
  /// the run is to test that bound.
  bool analytic_cutoff = true;
};

struct SearchResult {
  std::size_t best_size = 0;
  SetFamily witness;  // canonical ordered form
  std::uint64_t nodes_explored = 0;
  BigInt bound_value;
  bool bound_respected = true;
  bool truncated = false;  // node budget ran out; best_size is only a lower bound
};

/// Largest orderable L-intersecting family over [n], by branch and bound on the
/// compatibility graph. Orderability is enforced while branching: the largest
/// apex-containing member may not exceed the smallest apex-free member.
/// With a single worker the witness is the lexicographically least maximum family
/// under the graded vertex order.
SearchResult max_ordered_family(int n, const IntersectionSpec& spec, const SearchLimits& limits = {});

/// Brute force over every subfamily of 2^[n]. With require_ordered = false the
/// orderability filter is dropped (plain L-intersecting maximum).
/// Throws CapExceeded for n > kOracleMaxN.
std::size_t exhaustive_oracle(int n, const IntersectionSpec& spec, bool require_ordered = true);

struct SweepRow {
  int n = 0;
  IntersectionSpec spec;
  std::size_t best = 0;
  BigInt bound;
  BigInt gap;  // bound - best
  std::uint64_t nodes = 0;
  bool truncated = false;
};

struct SweepReport {
  std::vector<SweepRow> rows;
};

/// A search result larger than the ordered bound; carries the offending family.
class BoundViolation : public std::runtime_error {
public:
  BoundViolation(SweepRow row, SetFamily family);
  const SweepRow& row() const { return row_; }
  const SetFamily& family() const { return family_; }

private:
  SweepRow row_;
  SetFamily family_;
};

/// Runs the search for every n in [n_min, n_max] and every spec in the catalog and checks
/// best <= bound_ordered(n, |L|). The analytic cutoff is always disabled here.
/// Throws BoundViolation on the first counterexample.
SweepReport sweep_verify(int n_max, std::span<const IntersectionSpec> catalog, SearchLimits limits = {},
                         int n_min = 1);

/// Same check with a per-n catalog: every L ⊆ {0..n-1} with min_size <= |L| <= max_size,
/// for n in [n_min, n_max].
SweepReport sweep_verify_sizes(int n_min, int n_max, int min_size, int max_size, SearchLimits limits = {});

/// Every L ⊆ {0..n-1} with min_size <= |L| <= max_size, ordered by size then values.
std::vector<IntersectionSpec> all_specs(int n, int min_size, int max_size);

/// DIMACS clique format: "p edge V E" then "e i j" (1-based, i < j, ascending).
std::string export_dimacs(const CompatGraph& graph);

nlohmann::ordered_json to_json(const SweepRow& row);
nlohmann::ordered_json to_json(const SearchResult& result);

}  // namespace lintersect

#endif  // LINTERSECT_SEARCH_HPP
