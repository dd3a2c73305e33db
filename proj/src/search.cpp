#include "lintersect/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <variant>

#include "lintersect/bounds.hpp"
#include "lintersect/family_io.hpp"

namespace lintersect {

std::size_t CompatGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency) twice += row.count();
  return twice / 2;
}

CompatGraph build_graph(int n, const IntersectionSpec& spec, std::optional<int> max_card, int max_n) {
  if (n < 1) throw std::invalid_argument("n must be positive, got " + std::to_string(n));
  if (n > max_n || n > kMaxGroundSize) {
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the search cap " + std::to_string(max_n));
  }
  CompatGraph g;
  g.n = n;
  g.spec = spec;
  g.vertices = subsets_up_to(n, max_card.value_or(n));
  const std::size_t count = g.vertices.size();
  g.adjacency.assign(count, DynamicBitset(count));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      if (spec.contains(intersection_size(g.vertices[a], g.vertices[b]))) {
        g.adjacency[a].set(b);
        g.adjacency[b].set(a);
      }
    }
  }
  return g;
}

namespace {

constexpr std::size_t kNoCutoff = std::numeric_limits<std::size_t>::max();

// Branch and bound for a maximum clique that also keeps the chosen sets orderable.
class OrderedCliqueSearch {
public:
  OrderedCliqueSearch(const CompatGraph& graph, std::uint64_t node_budget, std::size_t cutoff)
      : graph_(graph), budget_(node_budget), cutoff_(cutoff) {
    const int n = graph.n;
    const std::size_t count = graph.vertices.size();
    apex_up_to_.assign(static_cast<std::size_t>(n) + 2, DynamicBitset(count));
    free_from_.assign(static_cast<std::size_t>(n) + 2, DynamicBitset(count));
    for (std::size_t v = 0; v < count; ++v) {
      const int c = graph.vertices[v].size();
      if (graph.vertices[v].contains(n)) {
        for (int t = c; t <= n + 1; ++t) apex_up_to_[static_cast<std::size_t>(t)].set(v);
      } else {
        for (int t = 0; t <= c; ++t) free_from_[static_cast<std::size_t>(t)].set(v);
      }
    }
  }

  struct Worker {
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;
  };

  void run(unsigned workers) {
    const std::size_t count = graph_.vertices.size();
    if (count == 0) return;
    if (workers <= 1) {
      Worker w;
      DynamicBitset all(count);
      all.set_all();
      expand(w, all, -1, graph_.n + 1);
      adopt(w);
      return;
    }

    // Root branches are handed out in vertex order.
    std::atomic<std::size_t> next_root{0};
    std::vector<Worker> states(workers);
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < workers; ++t) {
      threads.emplace_back([&, t] {
        Worker& w = states[t];
        while (!stop_.load(std::memory_order_relaxed)) {
          const std::size_t v = next_root.fetch_add(1);
          if (v >= count) break;
          if (count - v <= best_size_.load()) break;
          if (!count_node()) break;
          record(w);  // the empty clique
          DynamicBitset candidates = graph_.adjacency[v];
          for (std::size_t u = candidates.find_first(); u != DynamicBitset::npos && u < v;
               u = candidates.find_next(u + 1)) {
            candidates.reset(u);
          }
          branch(w, candidates, v, -1, graph_.n + 1);
        }
      });
    }
    for (auto& th : threads) th.join();
    for (auto& w : states) adopt(w);
  }

  const std::vector<std::size_t>& best_clique() const { return best_clique_; }
  std::uint64_t nodes() const { return std::min(nodes_.load(), budget_); }
  bool truncated() const { return truncated_.load(); }

private:
  bool count_node() {
    if (nodes_.fetch_add(1) >= budget_) {
      truncated_.store(true);
      stop_.store(true);
      return false;
    }
    return true;
  }

  void record(Worker& w) {
    std::size_t seen = best_size_.load();
    const std::size_t size = w.current.size();
    while (size > seen) {
      if (best_size_.compare_exchange_weak(seen, size)) {
        w.best = w.current;
        if (size >= cutoff_) stop_.store(true);
        return;
      }
    }
  }

  // Adds v to the clique, narrows candidates to what stays compatible and orderable.
  void branch(Worker& w, DynamicBitset candidates, std::size_t v, int max_apex, int min_free) {
    const SubsetMask set = graph_.vertices[v];
    if (set.contains(graph_.n)) {
      max_apex = std::max(max_apex, set.size());
    } else {
      min_free = std::min(min_free, set.size());
    }
    candidates &= apex_up_to_[static_cast<std::size_t>(min_free)] |
                  free_from_[static_cast<std::size_t>(std::max(max_apex, 0))];
    w.current.push_back(v);
    expand(w, candidates, max_apex, min_free);
    w.current.pop_back();
  }

  void expand(Worker& w, DynamicBitset candidates, int max_apex, int min_free) {
    if (!count_node()) return;
    record(w);
    if (stop_.load(std::memory_order_relaxed) || candidates.none()) return;
    if (w.current.size() + color_bound(candidates) <= best_size_.load()) return;

    for (std::size_t v = candidates.find_first(); v != DynamicBitset::npos; v = candidates.find_next(v + 1)) {
      if (w.current.size() + candidates.count() <= best_size_.load()) break;
      branch(w, candidates & graph_.adjacency[v], v, max_apex, min_free);
      if (stop_.load(std::memory_order_relaxed)) return;
      candidates.reset(v);
    }
  }

  // Greedy sequential coloring; the number of color classes bounds any clique inside.
  std::size_t color_bound(const DynamicBitset& candidates) const {
    DynamicBitset uncolored = candidates;
    std::size_t colors = 0;
    while (!uncolored.none()) {
      ++colors;
      DynamicBitset open = uncolored;
      for (std::size_t v = open.find_first(); v != DynamicBitset::npos; v = open.find_next(v + 1)) {
        uncolored.reset(v);
        open.subtract(graph_.adjacency[v]);
      }
    }
    return colors;
  }

  void adopt(const Worker& w) {
    if (w.best.size() > best_clique_.size() ||
        (w.best.size() == best_clique_.size() && !w.best.empty() && w.best < best_clique_)) {
      best_clique_ = w.best;
    }
  }

  const CompatGraph& graph_;
  std::uint64_t budget_;
  std::size_t cutoff_;
  std::vector<DynamicBitset> apex_up_to_;  // [t]: apex-containing vertices with |A| <= t
  std::vector<DynamicBitset> free_from_;   // [t]: apex-free vertices with |B| >= t

  std::atomic<std::size_t> best_size_{0};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::atomic<bool> truncated_{false};
  std::vector<std::size_t> best_clique_;
};

}  // namespace

SearchResult max_ordered_family(int n, const IntersectionSpec& spec, const SearchLimits& limits) {
  const CompatGraph graph = build_graph(n, spec, limits.max_card, limits.max_n);
  const BigInt bound = bound_ordered(n, spec.size());
  const std::size_t cutoff = limits.analytic_cutoff ? static_cast<std::size_t>(bound) : kNoCutoff;

  OrderedCliqueSearch search(graph, limits.node_budget, cutoff);
  search.run(std::max(1U, limits.workers));

  std::vector<SubsetMask> sets;
  for (std::size_t v : search.best_clique()) sets.push_back(graph.vertices[v]);
  const auto ordered = make_ordered(SetFamily(n, std::move(sets)));
  if (std::holds_alternative<OrderingFailure>(ordered)) {
    throw std::logic_error("search produced a non-orderable family");
  }

  const std::size_t best = search.best_clique().size();
  return SearchResult{best,
                      std::get<OrderedFamily>(ordered).family,
                      search.nodes(),
                      bound,
                      BigInt(best) <= bound,
                      search.truncated()};
}

std::size_t exhaustive_oracle(int n, const IntersectionSpec& spec, bool require_ordered) {
  if (n < 1) throw std::invalid_argument("n must be positive, got " + std::to_string(n));
  if (n > kOracleMaxN) {
    throw CapExceeded("exhaustive oracle supports n <= " + std::to_string(kOracleMaxN) + ", got " + std::to_string(n));
  }
  const unsigned universe = 1U << n;  // subsets of [n], indexed by their bit pattern
  const std::uint32_t apex_bit = 1U << (n - 1);

  std::vector<std::vector<bool>> compatible(universe, std::vector<bool>(universe));
  for (unsigned a = 0; a < universe; ++a) {
    for (unsigned b = 0; b < universe; ++b) {
      compatible[a][b] = spec.contains(std::popcount(a & b));
    }
  }

  std::size_t best = 0;
  const std::uint64_t families = std::uint64_t{1} << universe;
  for (std::uint64_t chosen = 1; chosen < families; ++chosen) {
    const auto m = static_cast<std::size_t>(std::popcount(chosen));
    if (m <= best) continue;

    bool ok = true;
    int max_apex = -1;
    int min_free = n + 1;
    for (unsigned a = 0; a < universe && ok; ++a) {
      if (((chosen >> a) & 1U) == 0) continue;
      const int card = std::popcount(a);
      if ((a & apex_bit) != 0) {
        max_apex = std::max(max_apex, card);
      } else {
        min_free = std::min(min_free, card);
      }
      for (unsigned b = a + 1; b < universe; ++b) {
        if (((chosen >> b) & 1U) != 0 && !compatible[a][b]) {
          ok = false;
          break;
        }
      }
    }
    if (ok && require_ordered && max_apex > min_free) ok = false;
    if (ok) best = m;
  }
  return best;
}

BoundViolation::BoundViolation(SweepRow row, SetFamily family)
    : std::runtime_error("bound violated at n=" + std::to_string(row.n) + " L=" + row.spec.to_string() + ": " +
                         std::to_string(row.best) + " > " + row.bound.str() + "; family " +
                         write_family_json(family)),
      row_(std::move(row)),
      family_(std::move(family)) {}

namespace {

SweepRow sweep_one(int n, const IntersectionSpec& spec, const SearchLimits& limits) {
  SearchResult result = max_ordered_family(n, spec, limits);
  SweepRow row{n, spec, result.best_size, result.bound_value, result.bound_value - BigInt(result.best_size),
               result.nodes_explored, result.truncated};
  if (!result.bound_respected) throw BoundViolation(std::move(row), std::move(result.witness));
  return row;
}

}  // namespace

SweepReport sweep_verify(int n_max, std::span<const IntersectionSpec> catalog, SearchLimits limits, int n_min) {
  if (n_max > limits.max_n) {
    throw CapExceeded("n_max = " + std::to_string(n_max) + " exceeds the search cap " + std::to_string(limits.max_n));
  }
  limits.analytic_cutoff = false;
  SweepReport report;
  for (int n = std::max(n_min, 1); n <= n_max; ++n) {
    for (const auto& spec : catalog) report.rows.push_back(sweep_one(n, spec, limits));
  }
  return report;
}

std::vector<IntersectionSpec> all_specs(int n, int min_size, int max_size) {
  std::vector<IntersectionSpec> out;
  if (n < 0 || n > 30) throw std::invalid_argument("spec universe {0..n-1} too large");
  for (int k = std::max(min_size, 0); k <= std::min(max_size, n); ++k) {
    for (SubsetMask pattern : subsets_of_size(n, k)) {
      std::vector<int> values;
      for (int e : pattern.elements()) values.push_back(e - 1);
      out.emplace_back(std::move(values));
    }
  }
  return out;
}

SweepReport sweep_verify_sizes(int n_min, int n_max, int min_size, int max_size, SearchLimits limits) {
  if (n_max > limits.max_n) {
    throw CapExceeded("n_max = " + std::to_string(n_max) + " exceeds the search cap " + std::to_string(limits.max_n));
  }
  limits.analytic_cutoff = false;
  SweepReport report;
  for (int n = std::max(n_min, 1); n <= n_max; ++n) {
    for (const auto& spec : all_specs(n, min_size, max_size)) report.rows.push_back(sweep_one(n, spec, limits));
  }
  return report;
}

std::string export_dimacs(const CompatGraph& graph) {
  std::string out = "p edge " + std::to_string(graph.vertices.size()) + " " + std::to_string(graph.edge_count()) + "\n";
  for (std::size_t a = 0; a < graph.adjacency.size(); ++a) {
    for (std::size_t b = graph.adjacency[a].find_next(a + 1); b != DynamicBitset::npos;
         b = graph.adjacency[a].find_next(b + 1)) {
      out += "e " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    }
  }
  return out;
}

namespace {

nlohmann::ordered_json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(value);
  }
  return value.str();
}

}  // namespace

nlohmann::ordered_json to_json(const SweepRow& row) {
  nlohmann::ordered_json out;
  out["n"] = row.n;
  out["l_values"] = row.spec.values();
  out["best"] = row.best;
  out["bound"] = big_to_json(row.bound);
  out["gap"] = big_to_json(row.gap);
  out["nodes"] = row.nodes;
  out["truncated"] = row.truncated;
  return out;
}

nlohmann::ordered_json to_json(const SearchResult& result) {
  nlohmann::ordered_json out;
  out["best_size"] = result.best_size;
  out["witness"] = nlohmann::ordered_json::parse(family_to_json(result.witness).dump());
  out["nodes_explored"] = result.nodes_explored;
  out["bound_value"] = big_to_json(result.bound_value);
  out["bound_respected"] = result.bound_respected;
  out["truncated"] = result.truncated;
  return out;
}

}  // namespace lintersect
