#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lnd/polyring.hpp"

namespace lnd {

/// Weighted degree map on a polynomial ring. Coefficient parameters have weight 0.
class WeightedDegree {
 public:
  /// Every main variable must be given a weight; parameters may be omitted or
  /// given weight 0.
  WeightedDegree(RingPtr ring, const std::map<std::string, std::uint32_t>& weights);

  const RingPtr& ring() const noexcept { return ring_; }
  std::uint32_t weight(std::size_t index) const { return weights_.at(index); }
  std::uint64_t weight_of(const Exponent& e) const;

 private:
  RingPtr ring_;
  std::vector<std::uint32_t> weights_;
};

struct Tilde {
  std::optional<std::uint64_t> degree;  ///< nullopt for the zero polynomial (-inf)
  Poly top;
};

Tilde wdeg_and_tilde(const WeightedDegree& lambda, const Poly& p);

enum class Ambient { B, A };

struct IdealPresentation {
  RingPtr ring;
  std::vector<Poly> generators;
  Ambient ambient = Ambient::B;
};

struct TopDegreeCertificate {
  bool homogeneous_checked = false;   ///< hypothesis (i): f_i = tilde(f_i) for i < m
  bool nonzerodivisor_checked = false;  ///< hypothesis (ii), via substitution
  /// Elements p_i of the input ideal with tilde(p_i) equal to output generator i.
  std::vector<Poly> sources;
  std::vector<std::string> notes;
};

struct TopDegreeResult {
  IdealPresentation ideal;
  TopDegreeCertificate certificate;
};

/// (f_1, .., f_{m-1}, tilde(f_m)) for gens = (f_1, .., f_m) after checking both
/// hypotheses. Throws DomainError when (i) fails or (ii) cannot be verified
/// because the leading generators are not of substitution shape.
TopDegreeResult top_degree_ideal(const WeightedDegree& lambda, const std::vector<Poly>& gens);

struct PrimalityVerdict {
  Tri value = Tri::unknown;
  std::string reason;
};

/// Sound partial primality test of (gens) in the ambient polynomial ring:
/// generators of the form c*V - g (c a nonzero rational, V absent from g and
/// from every other generator) are eliminated first.
PrimalityVerdict prime_after_elimination(const std::vector<Poly>& gens);

struct GjSpec {
  std::size_t slices = 0;             ///< m: number of slice variables, each of weight 1
  std::vector<std::uint32_t> u;       ///< weights u_l >= 1 of the main variables
  std::uint32_t j = 0;
};

/// All exponent tuples (j_1..j_{m+n}) with j_1+..+j_m + u_1 j_{m+1} + .. + u_n j_{m+n} = j,
/// in descending lexicographic order.
std::vector<std::vector<std::uint32_t>> enumerate_gj(const GjSpec& spec);

}  // namespace lnd
