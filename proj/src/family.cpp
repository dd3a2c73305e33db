#include "lintersect/family.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace lintersect {

// ---------------------------------------------------------------------------
// IntersectionSpec

IntersectionSpec::IntersectionSpec(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 0) {
      throw FamilyError("intersection sizes must be non-negative, got " + std::to_string(values_[k]));
    }
    if (k > 0 && values_[k] <= values_[k - 1]) {
      throw FamilyError("intersection sizes must be strictly increasing");
    }
    if (values_[k] < 64) small_ |= std::uint64_t{1} << values_[k];
  }
}

IntersectionSpec IntersectionSpec::canonical(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return IntersectionSpec(std::move(values));
}

IntersectionSpec IntersectionSpec::range(int s) {
  if (s < 0) throw FamilyError("negative spec size");
  std::vector<int> values(static_cast<std::size_t>(s));
  std::iota(values.begin(), values.end(), 0);
  return IntersectionSpec(std::move(values));
}

bool IntersectionSpec::contains(int value) const {
  if (value < 0) return false;
  if (value < 64) return ((small_ >> value) & 1U) != 0;
  return std::binary_search(values_.begin(), values_.end(), value);
}

std::vector<int> IntersectionSpec::values_at_least(int n) const {
  std::vector<int> out;
  std::copy_if(values_.begin(), values_.end(), std::back_inserter(out), [n](int v) { return v >= n; });
  return out;
}

std::string IntersectionSpec::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(values_[k]);
  }
  return out + '}';
}

// ---------------------------------------------------------------------------
// SetFamily

SetFamily::SetFamily(int n, std::vector<SubsetMask> sets) : n_(n), sets_(std::move(sets)) {
  if (n_ < 1 || n_ > kMaxGroundSize) {
    throw FamilyError("ground-set size must lie in 1.." + std::to_string(kMaxGroundSize) + ", got " +
                      std::to_string(n_));
  }
  std::unordered_set<SubsetMask> seen;
  seen.reserve(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (!sets_[i].within(n_)) {
      throw FamilyError("set #" + std::to_string(i + 1) + " " + sets_[i].to_string() + " is not a subset of [" +
                        std::to_string(n_) + "]");
    }
    if (!seen.insert(sets_[i]).second) {
      throw FamilyError("set #" + std::to_string(i + 1) + " " + sets_[i].to_string() + " is a duplicate");
    }
  }
}

std::string SetFamily::to_string() const {
  std::string out = "n=" + std::to_string(n_) + " [";
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i > 0) out += ", ";
    out += sets_[i].to_string();
  }
  return out + ']';
}

// ---------------------------------------------------------------------------
// Predicates

std::vector<PairIntersection> intersection_profile(const SetFamily& family) {
  std::vector<PairIntersection> out;
  const std::size_t m = family.size();
  out.reserve(m * (m > 0 ? m - 1 : 0) / 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      out.push_back({i, j, intersection_size(family[i], family[j])});
    }
  }
  return out;
}

LIntersectionVerdict is_l_intersecting(const SetFamily& family, const IntersectionSpec& spec) {
  const std::size_t m = family.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const int size = intersection_size(family[i], family[j]);
      if (!spec.contains(size)) return {false, PairIntersection{i, j, size}};
    }
  }
  return {};
}

const char* to_string(OrderingViolation kind) {
  switch (kind) {
    case OrderingViolation::ApexNotPrefix:
      return "apex-not-prefix";
    case OrderingViolation::CardinalityDecrease:
      return "cardinality-decrease";
    case OrderingViolation::NotOrderable:
      return "not-orderable";
  }
  return "unknown";
}

std::string OrderingFailure::describe() const {
  std::string out = to_string(kind);
  out += " at index " + std::to_string(index + 1);
  if (offending) {
    out += ": " + offending->first.to_string() + " vs " + offending->second.to_string();
  }
  return out;
}

std::variant<OrderingWitness, OrderingFailure> check_ordered_indexing(const SetFamily& family) {
  OrderingWitness witness;
  witness.permutation.resize(family.size());
  std::iota(witness.permutation.begin(), witness.permutation.end(), std::size_t{0});

  bool in_prefix = true;
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (family.has_apex(k)) {
      if (!in_prefix) {
        return OrderingFailure{OrderingViolation::ApexNotPrefix, k, std::pair{family[k - 1], family[k]}};
      }
      ++witness.r;
    } else {
      in_prefix = false;
    }
    if (k > 0 && family[k].size() < family[k - 1].size()) {
      return OrderingFailure{OrderingViolation::CardinalityDecrease, k, std::pair{family[k - 1], family[k]}};
    }
  }
  return witness;
}

bool canonical_less(SubsetMask a, SubsetMask b, int n) {
  if (a.size() != b.size()) return a.size() < b.size();
  const bool apex_a = a.contains(n);
  const bool apex_b = b.contains(n);
  if (apex_a != apex_b) return apex_a;
  return a.bits() < b.bits();
}

namespace {

// Largest apex-containing member and smallest apex-free member, by cardinality.
struct OrderabilityProbe {
  std::optional<std::size_t> largest_apex;
  std::optional<std::size_t> smallest_free;
};

OrderabilityProbe probe(const SetFamily& family) {
  OrderabilityProbe p;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const int c = family[i].size();
    if (family.has_apex(i)) {
      if (!p.largest_apex || c > family[*p.largest_apex].size()) p.largest_apex = i;
    } else if (!p.smallest_free || c < family[*p.smallest_free].size()) {
      p.smallest_free = i;
    }
  }
  return p;
}

bool probe_ok(const SetFamily& family, const OrderabilityProbe& p) {
  return !p.largest_apex || !p.smallest_free || family[*p.largest_apex].size() <= family[*p.smallest_free].size();
}

}  // namespace

bool is_orderable(const SetFamily& family) { return probe_ok(family, probe(family)); }

std::variant<OrderedFamily, OrderingFailure> make_ordered(const SetFamily& family) {
  const OrderabilityProbe p = probe(family);
  if (!probe_ok(family, p)) {
    return OrderingFailure{OrderingViolation::NotOrderable, *p.largest_apex,
                           std::pair{family[*p.largest_apex], family[*p.smallest_free]}};
  }

  const int n = family.n();
  std::vector<std::size_t> perm(family.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return canonical_less(family[a], family[b], n); });

  std::vector<SubsetMask> sets;
  sets.reserve(perm.size());
  std::size_t r = 0;
  for (std::size_t idx : perm) {
    sets.push_back(family[idx]);
    if (family.has_apex(idx)) ++r;
  }
  return OrderedFamily{SetFamily(n, std::move(sets)), OrderingWitness{r, std::move(perm)}};
}

}  // namespace lintersect
