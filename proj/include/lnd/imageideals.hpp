#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/grading.hpp"
#include "lnd/oracle.hpp"

namespace lnd {

struct KernelPresentation {
  std::vector<Poly> generators;  ///< generators of A as an R-algebra, as elements of B
  bool certified = false;        ///< D kills every generator (re-checked)
};

/// Kernel generator of a two-variable nice or quasi-nice derivation:
/// (DY)X - (DX)Y in the nice case, bX_2 + f(X_1) in the quasi case.
KernelPresentation kernel_generator(const Derivation& d);

/// min{i_1 + (d-1) i_2 : i_1 + d i_2 = j}, which is j - floor(j/d).
std::uint32_t min_exponent(std::uint32_t j, std::uint32_t d);

enum class Theorem { trivial, slice, inice, quasi2var, quasi2var_pid, pid3var, oracle_only };
const char* to_string(Theorem t);

/// A machine-checked hypothesis of the formula that was applied.
struct Certificate {
  std::string name;
  Tri holds = Tri::unknown;
  std::string detail;
};

struct ImageIdealResult {
  std::size_t n = 0;
  std::vector<Poly> generators;  ///< normalized and sorted canonically
  Theorem theorem = Theorem::trivial;
  std::vector<Certificate> certificates;
  /// When present, D^n(preimages[i]) = factors[i] * generators[i].
  std::vector<Poly> preimages;
  std::vector<Rational> factors;
  std::optional<std::uint32_t> m;
  std::optional<std::uint32_t> d;
  std::vector<Poly> failing_primes;  ///< the primes p_i, i in J
  std::optional<KernelPresentation> kernel;
  std::optional<oracle::VerifyReport> oracle;
  std::vector<std::string> notes;

  bool fully_certified() const;
};

struct ImageIdealOptions {
  std::optional<std::vector<PrimePower>> factored_b;
  bool assert_irreducible = false;
  oracle::Bounds bounds{2, 2};  ///< oracle bounds for confirmation runs and oracle-only results
  std::size_t iteration_cap = kDefaultIterationCap;
  unsigned bezout_degree = 6;
  std::uint32_t syzygy_degree_cap = 16;
  linalg::Config la;
};

ImageIdealResult image_ideal(const Derivation& d, std::size_t n, const ImageIdealOptions& opts = {});

enum class StrictnessKind { nice_able, strictly_1_quasi, undetermined };
const char* to_string(StrictnessKind k);

struct StrictnessResult {
  StrictnessKind kind = StrictnessKind::undetermined;
  Poly u;  ///< f = u + b v, no coefficient of u divisible by b
  Poly v;
  std::optional<Poly> new_coordinate;  ///< X_2 + v(X_1) when nice-able
  bool certified = false;
  std::string reason;
};

StrictnessResult strictness_decompose(const Derivation& d, bool assert_irreducible = false);

/// An element s with Ds = 1: by Bezout when every image lies in R, otherwise by
/// a linear solve in the slice with the given bounds. Throws DomainError when
/// D is known not to be fixed point free.
std::optional<Poly> slice_construct(const Derivation& d, oracle::Bounds bounds = {2, 2},
                                    const FpfOptions& fpf = {});

struct Nice3Reduction {
  std::array<Poly, 3> syzygy;                  ///< (a, b, c) with a DX + b DY + c DZ = 0
  std::array<std::array<Poly, 3>, 3> matrix;   ///< rows give U, V, W in terms of X, Y, Z
  std::array<Poly, 3> coordinates;             ///< U, V, W as elements of B
  RingPtr reduced_ring;                        ///< R[U][V, W]
  Derivation reduced;                          ///< DV = f, DW = g with f, g in R[U]
  KernelPresentation kernel;                   ///< [U, gV - fW] in B

  /// Maps an element of the reduced ring back to B.
  Poly to_original(const Poly& p) const;
};

Nice3Reduction nice3var_reduce(const Derivation& d, std::uint32_t degree_cap = 16);

}  // namespace lnd
