// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "lintersect/bounds.hpp"
#include "lintersect/certificate.hpp"
#include "lintersect/generators.hpp"
#include "lintersect/search.hpp"
#include "support/oracles.hpp"

using namespace lintersect;
namespace oracle = lintersect::testing;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      note << what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<void(Check&)>& body) {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.require(seconds < limit_seconds, "over time limit");
  if (!check.ok) ++failures;
  std::printf("%s %d %s (%.3fs / %.0fs)%s%s\n", check.ok ? "PASS" : "FAIL", id, name, seconds, limit_seconds,
              check.ok ? "" : ": ", check.note.str().c_str());
  std::fflush(stdout);
}

std::string tag(int n, int s) { return "n=" + std::to_string(n) + " s=" + std::to_string(s); }

}  // namespace

int main() {
  criterion(1, "sharpness-table", 1.0, [](Check& c) {
    for (int n = 2; n <= 8; ++n) {
      for (int s = 1; s <= std::min(3, n - 1); ++s) {
        const BigInt expected = oracle::pascal_partial_sum(n - 1, s);
        for (const auto& g : {gen_sharp_no_apex(n, s), gen_sharp_mixed(n, s)}) {
          c.require(BigInt(g.family.size()) == expected, "size mismatch at " + tag(n, s));
          c.require(is_l_intersecting(g.family, g.spec).holds, "not L-intersecting at " + tag(n, s));
          c.require(std::holds_alternative<OrderedFamily>(make_ordered(g.family)), "not orderable at " + tag(n, s));
        }
      }
    }
  });

  criterion(2, "certificate-engine", 5.0, [](Check& c) {
    for (int n = 2; n <= 6; ++n) {
      for (int s = 1; s <= std::min(2, n - 1); ++s) {
        const BigInt dim = oracle::pascal_partial_sum(n, s);
        for (const auto& g : {gen_sharp_no_apex(n, s), gen_sharp_mixed(n, s)}) {
          const auto report = certify(g.family, g.spec);
          c.require(report.verdict, "verdict fail at " + tag(n, s));
          c.require(report.rank == report.m + report.N, "rank != m+N at " + tag(n, s));
          c.require(BigInt(report.rank) == dim, "rank != dim V at " + tag(n, s));
        }
      }
    }
  });

  criterion(3, "ordered-bound-sweep", 600.0, [](Check& c) {
    SearchLimits limits;
    limits.analytic_cutoff = false;
    std::size_t cases = 0;
    for (int n = 3; n <= 6; ++n) {
      for (const auto& spec : all_specs(n, 1, 2)) {
        const auto r = max_ordered_family(n, spec, limits);
        c.require(!r.truncated, "truncated at n=" + std::to_string(n) + " L=" + spec.to_string());
        c.require(BigInt(r.best_size) <= oracle::pascal_partial_sum(n - 1, static_cast<int>(spec.size())),
                  "violation at n=" + std::to_string(n) + " L=" + spec.to_string());
        ++cases;
      }
    }
    c.require(cases == 6 + 10 + 15 + 21, "unexpected case count");
  });

  criterion(4, "oracle-equivalence", 120.0, [](Check& c) {
    SearchLimits limits;
    limits.analytic_cutoff = false;
    for (int n = 1; n <= 4; ++n) {
      for (const auto& spec : all_specs(n, 0, n)) {
        const auto r = max_ordered_family(n, spec, limits);
        c.require(r.best_size == exhaustive_oracle(n, spec),
                  "mismatch at n=" + std::to_string(n) + " L=" + spec.to_string());
      }
    }
  });

  criterion(5, "random-certificates", 120.0, [](Check& c) {
    std::mt19937_64 rng(20261015);
    for (int trial = 0; trial < 500; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const auto spec = oracle::random_spec(rng, n, 1 + static_cast<int>(rng() % 2));
      const auto raw = oracle::random_orderable_family(rng, n, spec, 1 + rng() % 64);
      const auto family = std::get<OrderedFamily>(make_ordered(raw)).family;
      const auto report = certify(family, spec);
      const std::string where = "trial " + std::to_string(trial);
      c.require(report.verdict, "verdict fail in " + where);
      c.require(report.rank == report.m + report.N, "rank != m+N in " + where);
      c.require(report.q_triangular && report.g_triangular && report.q_apex_free, "flag unset in " + where);
    }
  });

  criterion(6, "multilinearization", 10.0, [](Check& c) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const int factors = 1 + static_cast<int>(rng() % 3);
      std::vector<oracle::DenseAffine> forms;
      MultilinearPoly product = MultilinearPoly::constant(n, 1);
      for (int k = 0; k < factors; ++k) {
        oracle::DenseAffine f;
        MultilinearPoly p(n);
        for (int j = 1; j <= n; ++j) {
          const long long a = static_cast<long long>(rng() % 11) - 5;
          f.coeffs.push_back(a);
          p.add_term(SubsetMask::singleton(j), a);
        }
        f.constant = static_cast<long long>(rng() % static_cast<unsigned>(n + 1));
        p.add_term(SubsetMask{}, -f.constant);
        forms.push_back(f);
        product = poly_mul(product, p);
      }
      for (std::uint64_t pt = 0; pt < (std::uint64_t{1} << n); ++pt) {
        c.require(eval(product, char_vector(SubsetMask(pt), n)) == oracle::unreduced_product_at(forms, SubsetMask(pt)),
                  "disagreement in trial " + std::to_string(trial));
      }
    }
  });

  criterion(7, "rank-oracle", 10.0, [](Check& c) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t rows = 1 + rng() % 12;
      const std::size_t cols = 1 + rng() % 12;
      IntMatrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < cols; ++k) m(r, k) = static_cast<long long>(rng() % 19) - 9;
      }
      if (trial % 3 == 0 && rows >= 2) {
        for (std::size_t k = 0; k < cols; ++k) m(rows - 1, k) = m(0, k) * 4 - m(rows / 2, k);
      }
      c.require(exact_rank(m) == oracle::rational_rank(m), "rank mismatch in trial " + std::to_string(trial));
    }
  });

  criterion(8, "bound-monotonicity", 1.0, [](Check& c) {
    for (int n = 2; n <= 40; ++n) {
      for (int s = 1; s <= n - 1; ++s) {
        c.require(bound_ordered(n, s) < bound_fw(n, s), "not strict at " + tag(n, s));
        c.require(bound_ordered(n, s) == oracle::pascal_partial_sum(n - 1, s), "ordered value off at " + tag(n, s));
        c.require(bound_fw(n, s) == oracle::pascal_partial_sum(n, s), "fw value off at " + tag(n, s));
      }
    }
    c.require(bound_ordered(5, 2) == 11, "bound_ordered(5,2) != 11");
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
