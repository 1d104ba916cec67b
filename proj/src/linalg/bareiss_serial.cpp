#include "lnd/linalg.hpp"

namespace lnd::linalg {

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols; ++c) std::swap(at(a, c), at(b, c));
}

// Reference implementation; bareiss_parallel must agree with it exactly.
std::vector<std::size_t> bareiss_serial(IntMatrix& m, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && sgn(m.at(p, c)) == 0) ++p;
    if (p == m.rows) continue;
    m.swap_rows(p, r);
    const Integer& piv = m.at(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      const Integer factor = m.at(i, c);
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        Integer& x = m.at(i, j);
        x *= piv;
        if (sgn(factor) != 0) {
          tmp = factor * m.at(r, j);
          x -= tmp;
        }
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace lnd::linalg
