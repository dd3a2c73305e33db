#include "lintersect/certificate.hpp"

#include <unordered_map>
#include <variant>

#include "lintersect/bounds.hpp"

namespace lintersect {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

std::string dump_matrix(const IntMatrix& matrix) {
  std::string out;
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      if (c > 0) out += ' ';
      out += matrix(r, c).str();
    }
    out += '\n';
  }
  return out;
}

TriangularVerdict triangular_check(std::span<const MultilinearPoly> polys, std::span<const PointVector> points) {
  if (polys.size() != points.size()) {
    throw std::invalid_argument("triangular check needs as many points as functions (" +
                                std::to_string(polys.size()) + " vs " + std::to_string(points.size()) + ")");
  }
  const std::size_t m = polys.size();
  TriangularVerdict verdict{true, IntMatrix(m, m), std::nullopt};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) verdict.evaluations(i, j) = eval(polys[i], points[j]);
  }
  for (std::size_t i = 0; i < m && verdict.triangular; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (verdict.evaluations(i, j) != 0) {
        verdict.triangular = false;
        verdict.first_failure = std::pair{i, j};
        break;
      }
    }
    if (verdict.triangular && verdict.evaluations(i, i) == 0) {
      verdict.triangular = false;
      verdict.first_failure = std::pair{i, i};
    }
  }
  return verdict;
}

std::vector<SubsetMask> monomial_basis(int n, int s) { return subsets_up_to(n, s); }

DegreeOverflow::DegreeOverflow(std::size_t index, int degree, int limit)
    : std::invalid_argument("polynomial #" + std::to_string(index + 1) + " has degree " + std::to_string(degree) +
                            " > " + std::to_string(limit)),
      index_(index) {}

IntMatrix coefficient_matrix(std::span<const MultilinearPoly> polys, int n, int s) {
  const std::vector<SubsetMask> basis = monomial_basis(n, s);
  std::unordered_map<SubsetMask, std::size_t> column;
  column.reserve(basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) column.emplace(basis[c], c);

  IntMatrix matrix(polys.size(), basis.size());
  for (std::size_t row = 0; row < polys.size(); ++row) {
    const MultilinearPoly& p = polys[row];
    if (p.n() != n) {
      throw std::invalid_argument("polynomial #" + std::to_string(row + 1) + " lives in " + std::to_string(p.n()) +
                                  " variables, expected " + std::to_string(n));
    }
    if (p.degree() > s) throw DegreeOverflow(row, p.degree(), s);
    for (const auto& [support, c] : p.terms()) matrix(row, column.at(support)) = c;
  }
  return matrix;
}

std::size_t exact_rank(IntMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  BigInt previous = 1;
  std::size_t rank = 0;

  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    // Full pivoting: any nonzero entry of the trailing submatrix.
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t c = k; c < cols && !pivot; ++c) {
      for (std::size_t r = k; r < rows; ++r) {
        if (a(r, c) != 0) {
          pivot = std::pair{r, c};
          break;
        }
      }
    }
    if (!pivot) break;

    const auto [pr, pc] = *pivot;
    if (pr != k) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(k, c), a(pr, c));
    }
    if (pc != k) {
      for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, k), a(r, pc));
    }

    // Bareiss step; every division is exact.
    for (std::size_t r = k + 1; r < rows; ++r) {
      for (std::size_t c = k + 1; c < cols; ++c) {
        a(r, c) = (a(k, k) * a(r, c) - a(r, k) * a(k, c)) / previous;
      }
      a(r, k) = 0;
    }
    previous = a(k, k);
    ++rank;
  }
  return rank;
}

const char* to_string(CertifyErrorKind kind) {
  switch (kind) {
    case CertifyErrorKind::NotOrdered:
      return "not-ordered";
    case CertifyErrorKind::NotLIntersecting:
      return "not-L-intersecting";
    case CertifyErrorKind::TooLarge:
      return "too-large";
  }
  return "unknown";
}

CertifyError::CertifyError(CertifyErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

std::vector<SubsetMask> auxiliary_family(int n, int s) {
  if (s <= 0) return {};
  return subsets_up_to(n - 1, s - 1);
}

CertificateReport certify(const SetFamily& family, const IntersectionSpec& spec, const CertifyOptions& options) {
  const auto ordering = check_ordered_indexing(family);
  if (const auto* failure = std::get_if<OrderingFailure>(&ordering)) {
    throw CertifyError(CertifyErrorKind::NotOrdered, failure->describe());
  }
  const LIntersectionVerdict intersecting = is_l_intersecting(family, spec);
  if (!intersecting) {
    const auto& v = *intersecting.violation;
    throw CertifyError(CertifyErrorKind::NotLIntersecting,
                       "|F_" + std::to_string(v.i + 1) + " ∩ F_" + std::to_string(v.j + 1) +
                           "| = " + std::to_string(v.size) + " is not in " + spec.to_string());
  }

  const int n = family.n();
  const int s = spec.size();
  CertificateReport report;
  report.m = family.size();
  report.r = std::get<OrderingWitness>(ordering).r;

  const BigInt dim_v = bound_fw(n, s);
  const BigInt aux = auxiliary_count(n, s);
  const BigInt cells = (BigInt(report.m) + aux) * dim_v;
  if (cells > options.max_cells) {
    throw CertifyError(CertifyErrorKind::TooLarge, "stacked matrix needs " + cells.str() + " cells, limit " +
                                                       std::to_string(options.max_cells));
  }
  report.dim_v = static_cast<std::uint64_t>(dim_v);
  report.N = static_cast<std::size_t>(aux);

  std::vector<MultilinearPoly> polys;
  polys.reserve(report.m + report.N);
  std::vector<PointVector> family_points;
  for (SubsetMask f : family) {
    polys.push_back(build_q(f, spec, n));
    family_points.push_back(char_vector(f, n));
  }
  std::vector<PointVector> aux_points;
  for (SubsetMask t : auxiliary_family(n, s)) {
    polys.push_back(build_g(t, n));
    aux_points.push_back(char_vector(t, n));
  }
  const std::span<const MultilinearPoly> q_polys(polys.data(), report.m);
  const std::span<const MultilinearPoly> g_polys(polys.data() + report.m, report.N);

  TriangularVerdict q_check = triangular_check(q_polys, family_points);
  TriangularVerdict g_check = triangular_check(g_polys, aux_points);
  report.q_triangular = q_check.triangular;
  report.g_triangular = g_check.triangular;

  report.q_apex_free = true;
  for (std::size_t i = report.r; i < report.m; ++i) {
    if (q_polys[i].variables().contains(n)) {
      report.q_apex_free = false;
      break;
    }
  }

  IntMatrix stacked = coefficient_matrix(polys, n, s);
  report.rank = exact_rank(stacked);
  report.verdict = report.q_triangular && report.g_triangular && report.q_apex_free &&
                   report.rank == report.m + report.N;

  if (options.keep_matrices) {
    report.q_evaluations = std::move(q_check.evaluations);
    report.g_evaluations = std::move(g_check.evaluations);
    report.coefficients = std::move(stacked);
  }
  return report;
}

nlohmann::ordered_json to_json(const CertificateReport& report, bool full) {
  nlohmann::ordered_json out;
  out["m"] = report.m;
  out["r"] = report.r;
  out["N"] = report.N;
  out["dim_v"] = report.dim_v;
  out["q_triangular"] = report.q_triangular;
  out["g_triangular"] = report.g_triangular;
  out["q_apex_free"] = report.q_apex_free;
  out["rank"] = report.rank;
  out["verdict"] = report.verdict ? "pass" : "fail";
  if (full) {
    if (report.q_evaluations) out["q_evaluations"] = dump_matrix(*report.q_evaluations);
    if (report.g_evaluations) out["g_evaluations"] = dump_matrix(*report.g_evaluations);
    if (report.coefficients) out["coefficients"] = dump_matrix(*report.coefficients);
  }
  return out;
}

}  // namespace lintersect
