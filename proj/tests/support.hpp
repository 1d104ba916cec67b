#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/linalg.hpp"
#include "lnd/polyring.hpp"

namespace lnd::test {

/// Seed of the randomized suites; set from `--seed` by the test main.
std::uint64_t& seed();

inline Poly P(const RingPtr& ring, const std::string& text) { return parse_poly(ring, text); }

inline Derivation make_derivation(const std::vector<std::string>& params, const std::vector<std::string>& vars,
                                  const std::vector<std::string>& images) {
  const auto ring = PolyRing::make(params, vars);
  std::vector<Poly> ims;
  for (const auto& s : images) ims.push_back(P(ring, s));
  return Derivation(ring, ims);
}

/// Random polynomial with small rational coefficients.
Poly random_poly(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_terms, std::uint32_t param_deg,
                 std::uint32_t var_deg);
Poly random_nonzero_poly(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_terms, std::uint32_t param_deg,
                         std::uint32_t var_deg);

/// Random triangular derivation on Q[t][X1, X2]: DX1 = c in R nonzero,
/// DX2 in R[X1]. Always locally nilpotent.
Derivation random_triangular(std::mt19937_64& rng);

/// Rank over Q by plain Gaussian elimination on a dense copy.
std::size_t naive_rank(const linalg::SparseMatrix& m);

}  // namespace lnd::test
