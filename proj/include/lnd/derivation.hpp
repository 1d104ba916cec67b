#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lnd/polyring.hpp"

namespace lnd {

/// An R-derivation of R[X_1..X_n] given by the images of the main variables;
/// every coefficient parameter is killed.
class Derivation {
 public:
  Derivation(RingPtr ring, std::vector<Poly> images);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Poly>& images() const noexcept { return images_; }
  const Poly& image(std::size_t var) const { return images_.at(var); }
  std::size_t num_vars() const noexcept { return images_.size(); }

  /// Df = sum_i (DX_i) * df/dX_i.
  Poly apply(const Poly& f) const;
  Poly iterate(const Poly& f, std::size_t n) const;

 private:
  RingPtr ring_;
  std::vector<Poly> images_;
};

/// deg_D(f): least n with D^{n+1} f = 0.
struct DDegree {
  enum class Kind { minus_infinity, finite, overflow, never };
  Kind kind = Kind::finite;
  std::size_t value = 0;

  bool finite() const noexcept { return kind == Kind::finite; }
  std::string str() const;
  bool operator==(const DDegree&) const = default;
};

constexpr std::size_t kDefaultIterationCap = 64;

/// Iterates D on f up to `cap` times. Reports `never` when an iterate is a
/// nonzero scalar multiple of an earlier one (so f is not nilpotent), and
/// `overflow` when the cap is reached first.
DDegree deg_D(const Derivation& d, const Poly& f, std::size_t cap = kDefaultIterationCap);

enum class Classification { nice, strictly_1_quasi_candidate, quasi_nice, other };

const char* to_string(Classification c);

/// Data of the two-variable case with D^2 X_1 = 0 and DX_2 in R[X_1]:
/// DX_1 = b in R and DX_2 = -f'(X_1) with f(0) = 0.
struct QuasiData {
  std::size_t first = 0;   ///< index of the variable playing X_1
  std::size_t second = 1;  ///< index of the variable playing X_2
  Poly b;
  Poly f;
  std::uint32_t d = 0;  ///< deg_{X_1} f
};

/// Data of the nice two-variable case, D = b d/dX - a d/dY.
struct NiceData {
  Poly b;  ///< DX
  Poly a;  ///< -DY
};

struct StructureReport {
  Tri lnd = Tri::unknown;
  std::vector<DDegree> degrees;  ///< deg_D(X_l) per main variable
  bool irreducible = false;
  std::optional<Poly> images_gcd;
  std::vector<std::size_t> nice_set;  ///< variables with D^2 X_i = 0
  Classification classification = Classification::other;
  std::optional<QuasiData> quasi;
  std::optional<NiceData> nice2;
};

StructureReport classify(const Derivation& d, std::size_t cap = kDefaultIterationCap);

bool verify_kernel_element(const Derivation& d, const Poly& g);

/// Outcome of a fixed-point-freeness decision, with a short justification.
struct FpfVerdict {
  Tri value = Tri::unknown;
  std::string reason;
  /// Primes p of the factorization of b at which the localized derivation is
  /// not fixed point free (quasi case over Q[t] only).
  std::vector<std::size_t> failing_primes;
};

struct FpfOptions {
  /// Factorization of b = DX_1 for the quasi case over Q[t].
  std::optional<std::vector<PrimePower>> factored_b;
  /// For coefficient rings with two or more parameters: total degree bound of
  /// the Bezout search.
  unsigned bezout_degree = 6;
  /// Whether b may be treated as irreducible in the quasi case over a
  /// multi-parameter ring.
  bool assert_irreducible = false;
};

/// Decides whether (DX, DY)B = B for the structured two-variable cases.
FpfVerdict is_fixed_point_free(const Derivation& d, const FpfOptions& opts = {});

/// Fixed-point-freeness of the localized derivation D_p for a prime p of Q[t]
/// dividing b, in the quasi-nice two-variable case.
bool localized_fpf(const Derivation& d, const Poly& p);

/// Checks that the product of the prime powers equals b up to a nonzero
/// rational, and that every prime is irreducible or explicitly asserted.
void validate_factorization(const Poly& b, const std::vector<PrimePower>& factors);

/// Whether the unit ideal is generated by `gens` in R, for R with any number
/// of parameters: decided exactly for at most one parameter, otherwise by a
/// common rational zero search (no) and a bounded Bezout search (yes).
struct UnitIdealVerdict {
  Tri value = Tri::unknown;
  std::string reason;
  std::vector<Poly> bezout;  ///< cofactors with sum bezout[i]*gens[i] = 1 when value is yes
};
UnitIdealVerdict unit_ideal_in_coefficients(const std::vector<Poly>& gens, unsigned bezout_degree);

}  // namespace lnd
