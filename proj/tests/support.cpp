#include "support.hpp"

namespace lnd::test {

std::uint64_t& seed() {
  static std::uint64_t s = 20240601;
  return s;
}

Poly random_poly(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_terms, std::uint32_t param_deg,
                 std::uint32_t var_deg) {
  const auto monos = monomials_within(*ring, param_deg, var_deg);
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Poly p(ring);
  for (std::size_t k = count(rng); k > 0; --k) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    p += Poly::monomial(ring, monos[pick(rng)], c);
  }
  return p;
}

Poly random_nonzero_poly(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_terms, std::uint32_t param_deg,
                         std::uint32_t var_deg) {
  for (;;) {
    Poly p = random_poly(rng, ring, max_terms, param_deg, var_deg);
    if (!p.is_zero()) return p;
  }
}

Derivation random_triangular(std::mt19937_64& rng) {
  const auto ring = PolyRing::make({"t"}, {"X1", "X2"});
  const auto r_only = PolyRing::make({"t"}, {"X1"});
  const Poly c = random_nonzero_poly(rng, r_only, 2, 2, 0).embed(ring);
  const Poly g = random_poly(rng, r_only, 3, 1, 2).embed(ring);
  return Derivation(ring, {c, g});
}

std::size_t naive_rank(const linalg::SparseMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols()));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.columns[c]) a[r][c] = v;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows; ++c) {
    std::size_t p = rank;
    while (p < m.rows && a[p][c] == 0) ++p;
    if (p == m.rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace lnd::test
