#pragma once

#include <vector>

#include "lnd/polyring.hpp"

namespace lnd {

/// Dense univariate polynomial over Q; coeffs[i] is the coefficient of t^i.
/// Used for Euclidean arithmetic in the single-parameter coefficient ring.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly from_poly(const Poly& p, std::size_t index);
  Poly to_poly(const RingPtr& ring, std::size_t index) const;

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& lead() const { return coeffs_.back(); }

  UPoly monic() const;
  Rational eval(const Rational& x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  bool operator==(const UPoly& other) const = default;

  /// Euclidean division; divisor must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

  /// Distinct rational roots.
  std::vector<Rational> rational_roots() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace lnd
