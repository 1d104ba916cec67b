#include "lnd/linalg.hpp"

namespace lnd::linalg {

namespace {
// Below this many entries per step the threading overhead dominates.
constexpr std::size_t kParallelThreshold = 4096;
}  // namespace

std::vector<std::size_t> bareiss_parallel(IntMatrix& m, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && sgn(m.at(p, c)) == 0) ++p;
    if (p == m.rows) continue;
    m.swap_rows(p, r);
    const Integer& piv = m.at(r, c);
    const auto first = static_cast<long>(r + 1);
    const auto last = static_cast<long>(m.rows);
    const bool wide = (m.rows - r) * (m.cols - c) >= kParallelThreshold;
#pragma omp parallel for schedule(dynamic, 4) if (wide)
    for (long ii = first; ii < last; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      const Integer factor = m.at(i, c);
      Integer tmp;
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
