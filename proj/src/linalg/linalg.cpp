#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "lnd/linalg.hpp"

namespace lnd::linalg {

Vector SparseMatrix::apply(const Vector& x) const {
  if (x.size() != cols()) throw DomainError("vector length does not match the matrix");
  Vector y(rows, Rational(0));
  for (std::size_t c = 0; c < cols(); ++c) {
    if (sgn(x[c]) == 0) continue;
    for (const auto& [r, v] : columns[c]) y[r] += v * x[c];
  }
  return y;
}

SparseMatrix SparseMatrix::from_rows(const std::vector<Vector>& rows, std::size_t width) {
  SparseMatrix m;
  m.rows = rows.size();
  m.columns.resize(width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) throw DomainError("row length mismatch");
    for (std::size_t c = 0; c < width; ++c)
      if (sgn(rows[r][c]) != 0) m.columns[c].emplace_back(r, rows[r][c]);
  }
  return m;
}

SparseMatrix SparseMatrix::from_columns(const std::vector<Vector>& cols, std::size_t height) {
  SparseMatrix m;
  m.rows = height;
  m.columns.resize(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != height) throw DomainError("column length mismatch");
    for (std::size_t r = 0; r < height; ++r)
      if (sgn(cols[c][r]) != 0) m.columns[c].emplace_back(r, cols[c][r]);
  }
  return m;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

struct Block {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

const Rational* lookup(const SparseColumn& entries, std::size_t col) {
  auto it = std::lower_bound(entries.begin(), entries.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == entries.end() || it->first != col) return nullptr;
  return &it->second;
}

void reduce_block(const SparseMatrix& m, const Block& block, std::size_t pivot_limit, const Config& cfg,
                  Rref& out) {
  const std::size_t nr = block.rows.size();
  const std::size_t nc = block.cols.size();
  if (nr * nc > cfg.entry_cap)
    throw DimensionCapExceeded("elimination block of " + std::to_string(nr) + "x" + std::to_string(nc) +
                               " exceeds the entry cap of " + std::to_string(cfg.entry_cap));
  std::unordered_map<std::size_t, std::size_t> local_row;
  for (std::size_t i = 0; i < nr; ++i) local_row.emplace(block.rows[i], i);
  const std::size_t local_limit = static_cast<std::size_t>(
      std::lower_bound(block.cols.begin(), block.cols.end(), pivot_limit) - block.cols.begin());

  // Scale each row to integers.
  std::vector<std::vector<std::pair<std::size_t, const Rational*>>> row_entries(nr);
  for (std::size_t j = 0; j < nc; ++j)
    for (const auto& [r, v] : m.columns[block.cols[j]]) row_entries[local_row.at(r)].emplace_back(j, &v);
  IntMatrix dense(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    Integer den = 1;
    for (const auto& [j, v] : row_entries[i]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v->get_den_mpz_t());
    for (const auto& [j, v] : row_entries[i]) dense.at(i, j) = v->get_num() * (den / v->get_den());
  }

  const auto pivots =
      cfg.exec == Exec::parallel ? bareiss_parallel(dense, local_limit) : bareiss_serial(dense, local_limit);
  const std::size_t rank = pivots.size();

  // Back substitution over Q on the echelon rows.
  std::vector<std::vector<Rational>> rows(rank, std::vector<Rational>(nc));
  std::vector<std::vector<std::size_t>> support(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    for (std::size_t j = 0; j < nc; ++j) {
      if (sgn(dense.at(k, j)) == 0) continue;
      rows[k][j] = Rational(dense.at(k, j));
    }
  }
  for (std::size_t kk = rank; kk-- > 0;) {
    auto& row = rows[kk];
    const Rational inv = Rational(1) / row[pivots[kk]];
    support[kk].clear();
    for (std::size_t j = 0; j < nc; ++j) {
      if (sgn(row[j]) == 0) continue;
      row[j] *= inv;
      support[kk].push_back(j);
    }
    for (std::size_t i = 0; i < kk; ++i) {
      const Rational f = rows[i][pivots[kk]];
      if (sgn(f) == 0) continue;
      for (auto j : support[kk]) rows[i][j] -= f * row[j];
    }
  }
  for (std::size_t k = 0; k < rank; ++k) {
    RrefRow rr{block.cols[pivots[k]], {}};
    for (std::size_t j = 0; j < nc; ++j)
      if (sgn(rows[k][j]) != 0) rr.entries.emplace_back(block.cols[j], rows[k][j]);
    out.rows.push_back(std::move(rr));
  }
  std::vector<bool> is_pivot(nc, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < local_limit; ++j)
    if (!is_pivot[j]) out.free_cols.push_back(block.cols[j]);
  for (std::size_t i = rank; i < nr; ++i)
    for (std::size_t j = local_limit; j < nc; ++j)
      if (sgn(dense.at(i, j)) != 0) out.inconsistent_cols.push_back(block.cols[j]);
}

}  // namespace

Rref rref(const SparseMatrix& m, std::size_t pivot_limit, const Config& cfg) {
  const std::size_t R = m.rows;
  const std::size_t C = m.cols();
  DisjointSets sets(R + C);
  std::vector<bool> row_used(R, false);
  for (std::size_t c = 0; c < C; ++c) {
    for (const auto& [r, v] : m.columns[c]) {
      if (r >= R) throw DomainError("sparse entry outside the matrix");
      sets.unite(r, R + c);
      row_used[r] = true;
    }
  }
  std::unordered_map<std::size_t, Block> blocks;
  std::vector<std::size_t> order;  // deterministic processing order by root
  for (std::size_t r = 0; r < R; ++r) {
    if (!row_used[r]) continue;
    const auto root = sets.find(r);
    auto [it, inserted] = blocks.try_emplace(root);
    if (inserted) order.push_back(root);
    it->second.rows.push_back(r);
  }
  Rref out;
  for (std::size_t c = 0; c < C; ++c) {
    if (m.columns[c].empty()) {
      if (c < pivot_limit) out.free_cols.push_back(c);
      continue;
    }
    blocks.at(sets.find(R + c)).cols.push_back(c);
  }
  std::sort(order.begin(), order.end());
  for (auto root : order) reduce_block(m, blocks.at(root), pivot_limit, cfg, out);

  std::sort(out.rows.begin(), out.rows.end(), [](const auto& a, const auto& b) { return a.pivot < b.pivot; });
  std::sort(out.free_cols.begin(), out.free_cols.end());
  std::sort(out.inconsistent_cols.begin(), out.inconsistent_cols.end());
  out.inconsistent_cols.erase(std::unique(out.inconsistent_cols.begin(), out.inconsistent_cols.end()),
                              out.inconsistent_cols.end());
  return out;
}

std::size_t rank(const SparseMatrix& m, const Config& cfg) { return rref(m, m.cols(), cfg).rows.size(); }

std::vector<Vector> nullspace(const SparseMatrix& m, const Config& cfg) {
  const Rref r = rref(m, m.cols(), cfg);
  std::vector<Vector> basis;
  basis.reserve(r.free_cols.size());
  for (auto f : r.free_cols) {
    Vector v(m.cols(), Rational(0));
    v[f] = 1;
    for (const auto& row : r.rows)
      if (const Rational* val = lookup(row.entries, f)) v[row.pivot] = -*val;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::optional<Vector>> solve(const SparseMatrix& m, const std::vector<Vector>& rhs,
                                         const Config& cfg) {
  SparseMatrix aug = m;
  for (const auto& b : rhs) {
    if (b.size() != m.rows) throw DomainError("right-hand side length mismatch");
    SparseColumn col;
    for (std::size_t r = 0; r < b.size(); ++r)
      if (sgn(b[r]) != 0) col.emplace_back(r, b[r]);
    aug.columns.push_back(std::move(col));
  }
  const Rref r = rref(aug, m.cols(), cfg);
  std::vector<std::optional<Vector>> out;
  out.reserve(rhs.size());
  for (std::size_t q = 0; q < rhs.size(); ++q) {
    const std::size_t col = m.cols() + q;
    if (std::binary_search(r.inconsistent_cols.begin(), r.inconsistent_cols.end(), col)) {
      out.emplace_back(std::nullopt);
      continue;
    }
    Vector x(m.cols(), Rational(0));
    for (const auto& row : r.rows)
      if (const Rational* val = lookup(row.entries, col)) x[row.pivot] = *val;
    out.emplace_back(std::move(x));
  }
  return out;
}

std::vector<Vector> row_basis(const std::vector<Vector>& vectors, std::size_t width, const Config& cfg) {
  const Rref r = rref(SparseMatrix::from_rows(vectors, width), width, cfg);
  std::vector<Vector> out;
  out.reserve(r.rows.size());
  for (const auto& row : r.rows) {
    Vector v(width, Rational(0));
    for (const auto& [c, val] : row.entries) v[c] = val;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace lnd::linalg
