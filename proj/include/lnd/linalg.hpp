#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lnd/polyring.hpp"

namespace lnd::linalg {

using Vector = std::vector<Rational>;
using SparseColumn = std::vector<std::pair<std::size_t, Rational>>;

/// Column-major sparse matrix over Q. Column entries are sorted by row and nonzero.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<SparseColumn> columns;

  std::size_t cols() const noexcept { return columns.size(); }
  Vector apply(const Vector& x) const;
  /// Builds the matrix whose rows are the given dense vectors.
  static SparseMatrix from_rows(const std::vector<Vector>& rows, std::size_t width);
  /// Builds the matrix whose columns are the given dense vectors.
  static SparseMatrix from_columns(const std::vector<Vector>& cols, std::size_t height);
};

enum class Exec { serial, parallel };

struct Config {
  /// Largest dense block (rows x columns) a single elimination may touch.
  std::size_t entry_cap = 20000;
  Exec exec = Exec::parallel;
};

// --- fraction-free kernel ------------------------------------------------------

/// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Integer& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  void swap_rows(std::size_t a, std::size_t b);
};

/// Bareiss fraction-free forward elimination, in place. Only columns below
/// `pivot_limit` may hold pivots; pivots are taken from the first nonzero row
/// in row order. On return rows [0, rank) are the echelon rows, with
/// pivot_cols[i] the pivot column of row i, and rows [rank, rows) are zero in
/// all pivot-eligible columns. Returns the pivot columns.
std::vector<std::size_t> bareiss_serial(IntMatrix& m, std::size_t pivot_limit);
/// Same contract as bareiss_serial, with the row updates of each elimination
/// step distributed over OpenMP threads. Produces bit-identical results.
std::vector<std::size_t> bareiss_parallel(IntMatrix& m, std::size_t pivot_limit);

// --- rational reduced row echelon form over sparse blocks ----------------------

struct RrefRow {
  std::size_t pivot;
  /// Sorted (column, value) pairs; the pivot entry is 1.
  SparseColumn entries;
};

struct Rref {
  std::vector<RrefRow> rows;            // sorted by pivot column
  std::vector<std::size_t> free_cols;   // pivot-eligible columns without a pivot
  std::vector<std::size_t> inconsistent_cols;  // columns >= pivot_limit hit by a zero row
};

/// Reduced row echelon form, computed independently on the connected blocks
/// of the sparsity pattern. Throws DimensionCapExceeded when a block exceeds
/// the entry cap.
Rref rref(const SparseMatrix& m, std::size_t pivot_limit, const Config& cfg = {});

std::size_t rank(const SparseMatrix& m, const Config& cfg = {});

/// Basis of the nullspace, one vector per free column (ascending), with a 1 at
/// that free column and 0 at the other free columns.
std::vector<Vector> nullspace(const SparseMatrix& m, const Config& cfg = {});

/// For each right-hand side b, a solution x of m x = b (free variables set to
/// zero) or nullopt when the system is inconsistent.
std::vector<std::optional<Vector>> solve(const SparseMatrix& m, const std::vector<Vector>& rhs,
                                         const Config& cfg = {});

/// Canonical basis of the span of the given vectors: the nonzero rows of their
/// reduced row echelon form, ordered by pivot.
std::vector<Vector> row_basis(const std::vector<Vector>& vectors, std::size_t width,
                              const Config& cfg = {});

}  // namespace lnd::linalg
