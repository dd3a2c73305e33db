#ifndef LINTERSECT_CERTIFICATE_HPP
#define LINTERSECT_CERTIFICATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lintersect/bigint.hpp"
#include "lintersect/family.hpp"
#include "lintersect/polynomial.hpp"

namespace lintersect {

/// Dense row-major matrix of exact integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Convenience for tests; all rows must have equal length.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Row-major decimal dump: entries separated by single spaces, one row per line.
std::string dump_matrix(const IntMatrix& matrix);

struct TriangularVerdict {
  bool triangular = true;
  IntMatrix evaluations;  // evaluations(i, j) = f_i(v_j)
  /// First (i, j) that breaks the criterion; i == j marks a vanishing diagonal.
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
};

/// Evaluates every f_i at every v_j and checks f_i(v_i) != 0 and f_i(v_j) = 0 for j < i.
/// Throws std::invalid_argument when the lists differ in length.
TriangularVerdict triangular_check(std::span<const MultilinearPoly> polys, std::span<const PointVector> points);

/// Multilinear monomials in n variables of degree <= s, ordered by degree then bit pattern.
std::vector<SubsetMask> monomial_basis(int n, int s);

class DegreeOverflow : public std::invalid_argument {
public:
  DegreeOverflow(std::size_t index, int degree, int limit);
  std::size_t index() const { return index_; }

private:
  std::size_t index_;
};

/// Rows are polynomials, columns follow monomial_basis(n, s).
IntMatrix coefficient_matrix(std::span<const MultilinearPoly> polys, int n, int s);

/// Rank over the rationals by fraction-free (Bareiss) elimination with full pivoting.
std::size_t exact_rank(IntMatrix matrix);

struct CertifyOptions {
  std::uint64_t max_cells = 2'000'000;  // (m + N) * dim V
  bool keep_matrices = false;
};

/// Outcome of stacking Q_1..Q_m and g_1..g_N and checking their independence.
struct CertificateReport {
  std::size_t m = 0;
  std::size_t r = 0;
  std::size_t N = 0;
  std::uint64_t dim_v = 0;
  bool q_triangular = false;
  bool g_triangular = false;
  bool q_apex_free = false;
  std::size_t rank = 0;
  bool verdict = false;

  // Present only with CertifyOptions::keep_matrices.
  std::optional<IntMatrix> q_evaluations;
  std::optional<IntMatrix> g_evaluations;
  std::optional<IntMatrix> coefficients;
};

enum class CertifyErrorKind { NotOrdered, NotLIntersecting, TooLarge };

const char* to_string(CertifyErrorKind kind);

class CertifyError : public std::runtime_error {
public:
  CertifyError(CertifyErrorKind kind, const std::string& detail);
  CertifyErrorKind kind() const { return kind_; }

private:
  CertifyErrorKind kind_;
};

/// The T_1..T_N of the auxiliary family: subsets of [n-1] with at most s-1 elements,
/// in graded order.
std::vector<SubsetMask> auxiliary_family(int n, int s);

/// Builds the certificate for a family that is ordered as indexed and L-intersecting.
/// Throws CertifyError for either precondition and when the matrix exceeds max_cells.
CertificateReport certify(const SetFamily& family, const IntersectionSpec& spec, const CertifyOptions& options = {});

/// Fields in declaration order; matrices as dump_matrix strings when full is set.
nlohmann::ordered_json to_json(const CertificateReport& report, bool full);

}  // namespace lintersect

#endif  // LINTERSECT_CERTIFICATE_HPP
