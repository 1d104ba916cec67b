#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/linalg.hpp"

namespace lnd::oracle {

struct Bounds {
  std::uint32_t param = 0;  ///< total degree in the coefficient parameters
  std::uint32_t var = 0;    ///< total degree in the main variables
  bool operator==(const Bounds&) const = default;
};

/// All monomials within the bounds, in ascending graded-lex order.
class DegreeSlice {
 public:
  DegreeSlice(RingPtr ring, Bounds bounds);

  const RingPtr& ring() const noexcept { return ring_; }
  const Bounds& bounds() const noexcept { return bounds_; }
  const std::vector<Exponent>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }

  std::optional<std::size_t> index_of(const Exponent& e) const;
  bool contains(const Poly& p) const;
  /// Coordinate vector; nullopt when p has a monomial outside the slice.
  std::optional<linalg::Vector> coords(const Poly& p) const;
  Poly poly(const linalg::Vector& v) const;

 private:
  RingPtr ring_;
  Bounds bounds_;
  std::vector<Exponent> basis_;
  std::map<Exponent, std::size_t> index_;
};

DegreeSlice slice_basis(const RingPtr& ring, std::uint32_t param_bound, std::uint32_t var_bound);

struct LinearMapMatrix {
  DegreeSlice source;
  DegreeSlice target;
  linalg::SparseMatrix entries;  ///< column c holds the coordinates of D^n(source monomial c)
};

/// Growth of the bounds under one application of D.
Bounds degree_growth(const Derivation& d);

LinearMapMatrix matrix_of_power(const Derivation& d, std::size_t n, const DegreeSlice& source);

struct KernelImage {
  DegreeSlice target;
  std::vector<Poly> kernel;  ///< basis of A intersected with the target slice
  std::vector<Poly> image;   ///< basis of span{D^n(source)} intersected with A
};

KernelImage kernel_and_image_basis(const Derivation& d, std::size_t n, const DegreeSlice& source,
                                   const linalg::Config& cfg = {});

struct Membership {
  Tri value = Tri::unknown;
  std::vector<Poly> cofactors;  ///< sum cofactors[i] * gens[i] = h when value is yes
  std::string reason;
};

/// h in (gens)B. Principal ideals are decided by exact division; otherwise
/// cofactors are searched in the slice with the given bounds (yes or unknown).
Membership ideal_membership_bounded(const std::vector<Poly>& gens, const Poly& h, Bounds cofactor_bound,
                                    const linalg::Config& cfg = {});

/// Membership of each h in the ideal of A generated by gens, where the
/// cofactors range over the span of `multipliers` (elements of A). Principal
/// ideals are decided by exact division in B.
std::vector<Membership> kernel_membership(const std::vector<Poly>& gens, const std::vector<Poly>& hs,
                                          const std::vector<Poly>& multipliers, const linalg::Config& cfg = {});

enum class Verdict { pass, fail, inconclusive };
const char* to_string(Verdict v);

struct VerifyReport {
  Bounds source;
  Bounds target;
  Verdict forward = Verdict::inconclusive;
  Verdict backward = Verdict::inconclusive;
  Verdict overall = Verdict::inconclusive;
  std::vector<std::optional<Poly>> preimages;  ///< per predicted generator: x with D^n x = generator
  std::vector<Poly> witnesses;                 ///< elements of I_n outside the predicted ideal
  std::vector<Poly> undecided;                 ///< elements of I_n whose membership stayed open
  std::size_t kernel_dim = 0;
  std::size_t image_dim = 0;
  std::vector<std::string> notes;
};

/// Checks the predicted generators of I_n against the oracle. `probes` are
/// extra candidate elements of I_n; each one is first certified in I_n by a
/// preimage search and then tested against the prediction ahead of the
/// oracle basis.
VerifyReport verify_image_ideal(const Derivation& d, std::size_t n, const std::vector<Poly>& predicted, Bounds bounds,
                                const std::vector<Poly>& probes = {}, const linalg::Config& cfg = {});

}  // namespace lnd::oracle
