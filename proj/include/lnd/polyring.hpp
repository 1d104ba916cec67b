#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lnd/error.hpp"

namespace lnd {

using Rational = mpq_class;
using Integer = mpz_class;

enum class Tri { no, yes, unknown };

const char* to_string(Tri t);

/// Names of the coefficient parameters t_1..t_k and main variables X_1..X_n of
/// Q[t_1..t_k][X_1..X_n]. Variables are addressed by a combined index: params
/// first, then main variables.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> params, std::vector<std::string> vars);

  static std::shared_ptr<const PolyRing> make(std::vector<std::string> params,
                                              std::vector<std::string> vars);

  const std::vector<std::string>& params() const noexcept { return params_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t num_params() const noexcept { return params_.size(); }
  std::size_t num_vars() const noexcept { return vars_.size(); }
  std::size_t arity() const noexcept { return params_.size() + vars_.size(); }

  bool is_param(std::size_t index) const noexcept { return index < params_.size(); }
  std::size_t var_index(std::size_t i) const noexcept { return params_.size() + i; }
  const std::string& name(std::size_t index) const;
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  bool operator==(const PolyRing& other) const = default;

 private:
  std::vector<std::string> params_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, ties broken by the first
/// differing exponent (the larger exponent is the larger monomial).
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const noexcept;
};

std::uint32_t total_degree(const Exponent& e) noexcept;

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept in ascending graded-lex order; no stored coefficient is zero.
class Poly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  explicit Poly(RingPtr ring);
  Poly(RingPtr ring, TermMap terms);

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, std::string_view name);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, Exponent e, const Rational& c = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Coefficient of the constant monomial (zero when absent).
  Rational constant_term() const;
  Rational coefficient(const Exponent& e) const;

  /// Greatest term under graded-lex. Requires a nonzero polynomial.
  const Exponent& leading_exponent() const;
  const Rational& leading_coefficient() const;

  std::uint32_t total_degree() const noexcept;
  std::uint32_t degree_in(std::size_t index) const noexcept;
  /// Total degree in the coefficient parameters / main variables separately.
  std::uint32_t param_degree() const noexcept;
  std::uint32_t var_degree() const noexcept;
  bool involves(std::size_t index) const noexcept;
  /// True when no main variable occurs, i.e. the polynomial lies in R.
  bool in_coefficient_ring() const noexcept;
  std::vector<std::size_t> variables_used() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  bool operator==(const Poly& other) const;

  Poly pow(unsigned exponent) const;
  Poly partial(std::size_t index) const;
  Poly partial(std::string_view name) const;
  /// Multiply by the monomial x^e for a single variable.
  Poly shift(std::size_t index, std::uint32_t e) const;
  /// Replace the variable `index` by `value` (which must live in the same ring).
  Poly substitute(std::size_t index, const Poly& value) const;
  /// Re-express over another ring by variable name. Throws RingMismatch when a
  /// variable that occurs here is missing from `target`.
  Poly embed(const RingPtr& target) const;

  /// Coefficients when viewed as a univariate polynomial in `index`; entry i is
  /// the coefficient of x^i (a polynomial not involving x).
  std::vector<Poly> coefficients_in(std::size_t index) const;
  static Poly from_coefficients(const RingPtr& ring, std::size_t index,
                                std::span<const Poly> coefficients);

  /// Split by main-variable monomial: the key keeps only the main-variable
  /// exponents (params zeroed) and the value is the R-coefficient.
  std::map<Exponent, Poly, GrlexLess> coefficients_over_params() const;

  std::string str() const;

 private:
  void require_same_ring(const Poly& other) const;
  void add_term(const Exponent& e, const Rational& c);

  RingPtr ring_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Every exponent vector of `ring` whose parameter part has total degree at
/// most `param_bound` and whose main-variable part has total degree at most
/// `var_bound`, in ascending graded-lex order.
std::vector<Exponent> monomials_within(const PolyRing& ring, std::uint32_t param_bound,
                                       std::uint32_t var_bound);

/// Image of p under the ring homomorphism sending variable i (combined index)
/// of p's ring to images[i], a polynomial of `target`.
Poly map_variables(const Poly& p, const RingPtr& target, const std::vector<Poly>& images);

/// Canonical ordering of polynomials: compares term sequences from the leading
/// term down. Used to sort generator lists deterministically.
bool canonical_less(const Poly& a, const Poly& b);

/// Parse a polynomial in `ring`. Grammar: sums of products of rational numbers,
/// variable names, parenthesized expressions and `^` powers; juxtaposition
/// multiplies. Division is only allowed by nonzero constants.
Poly parse_poly(const RingPtr& ring, std::string_view text, std::size_t line = 1);

// --- exact division, gcd, normalization -------------------------------------

struct DivisionResult {
  Poly quotient;
  Poly remainder;
};

/// Multivariate division by a single polynomial under graded-lex. The remainder
/// is the canonical normal form modulo the principal ideal (divisor).
DivisionResult divide(const Poly& dividend, const Poly& divisor);

/// Quotient when `divisor` divides `dividend` exactly, otherwise nullopt.
std::optional<Poly> divide_exact(const Poly& dividend, const Poly& divisor);

/// Unit normalization over Q: integer coefficients with gcd 1 and positive
/// leading coefficient. Zero stays zero.
Poly normalize_unit(const Poly& p);

/// Multiplicative factor c with normalize_unit(p) == c * p.
Rational normalization_factor(const Poly& p);

bool is_unit(const Poly& p);

/// Greatest common divisor in Q[params][vars], by recursive content /
/// primitive-part reduction. Throws DomainError when every input is zero.
Poly multivariate_gcd(std::span<const Poly> fs);
Poly gcd(const Poly& a, const Poly& b);

/// Content of p viewed as a polynomial in variable `index` (normalized).
Poly content_in(const Poly& p, std::size_t index);

/// Pseudo-remainder of a by b with respect to variable `index`.
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t index);

// --- univariate coefficient-parameter operations -------------------------------

struct BezoutResult {
  Poly gcd;
  Poly alpha;
  Poly beta;
};

/// Extended Euclid in Q[t] for a ring with exactly one coefficient parameter.
/// Returns monic g = gcd(a, b) with alpha*a + beta*b = g.
BezoutResult extended_euclid(const Poly& a, const Poly& b);

/// Replace every R-coefficient of r by its remainder modulo the prime p of
/// Q[t]; the canonical representative in (Q[t]/(p))[vars].
Poly reduce_mod_prime(const Poly& r, const Poly& p);

/// Normal form of r modulo the principal ideal (m) for any m in R. For a single
/// parameter this agrees with reduce_mod_prime.
Poly reduce_mod(const Poly& r, const Poly& m);

/// Irreducibility over Q of a univariate polynomial in the coefficient
/// parameter: degree 1 is irreducible, degrees 2 and 3 are decided by the
/// rational-root test, anything larger is unknown.
Tri irreducible_smalldeg(const Poly& p);

struct PrimePower {
  Poly prime;
  unsigned multiplicity = 1;
  bool asserted_irreducible = false;
};

/// Factor a polynomial of Q[t] into primes when every irreducible factor is
/// found by rational roots or has degree 2..3. Returns nullopt otherwise.
std::optional<std::vector<PrimePower>> factor_smalldeg(const Poly& p);

}  // namespace lnd
