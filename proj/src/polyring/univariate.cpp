#include <algorithm>
#include <set>

#include "lnd/univariate.hpp"

namespace lnd {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UPoly UPoly::from_poly(const Poly& p, std::size_t index) {
  std::vector<Rational> c(p.degree_in(index) + 1, Rational(0));
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != index && e[i] != 0) throw DomainError("polynomial is not univariate in '" + p.ring()->name(index) + "'");
    c[e[index]] = v;
  }
  return UPoly(std::move(c));
}

Poly UPoly::to_poly(const RingPtr& ring, std::size_t index) const {
  Poly::TermMap terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    Exponent e(ring->arity(), 0);
    e[index] = static_cast<std::uint32_t>(i);
    terms.emplace(std::move(e), coeffs_[i]);
  }
  return Poly(ring, std::move(terms));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly out = *this;
  const Rational l = lead();
  for (auto& c : out.coeffs_) c /= l;
  return out;
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Rational> r = a.coeffs_;
  const int db = b.degree();
  std::vector<Rational> q(std::max(0, a.degree() - db + 1), Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = r[static_cast<std::size_t>(k)] / b.lead();
    if (sgn(c) == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= c * b.coeffs_[static_cast<std::size_t>(i)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

namespace {

constexpr unsigned long kDivisorSearchLimit = 1'000'000UL;

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  if (n == 0) return {};
  if (n > Integer(kDivisorSearchLimit) * Integer(kDivisorSearchLimit))
    throw DomainError("coefficient too large for the rational-root test");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> UPoly::rational_roots() const {
  if (is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<Rational> roots;
  // strip the factor t^k
  std::size_t low = 0;
  while (sgn(coeffs_[low]) == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<Rational> rest(coeffs_.begin() + static_cast<long>(low), coeffs_.end());
  if (rest.size() <= 1) return roots;

  Integer den_lcm = 1;
  for (const auto& c : rest) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : rest) ints.push_back(c.get_num() * (den_lcm / c.get_den()));

  const UPoly reduced{std::vector<Rational>(rest)};
  std::set<Rational> found;
  for (const auto& p : positive_divisors(ints.front())) {
    for (const auto& q : positive_divisors(ints.back())) {
      for (int s : {1, -1}) {
        Rational cand(p * s, q);
        cand.canonicalize();
        if (found.count(cand)) continue;
        if (sgn(reduced.eval(cand)) == 0) found.insert(cand);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

// --- operations on the single-parameter coefficient ring ----------------------

namespace {

/// Index of the parameter both inputs are univariate in. Throws otherwise.
std::size_t univariate_param(std::initializer_list<const Poly*> ps) {
  const auto& ring = ps.begin()[0]->ring();
  std::optional<std::size_t> idx;
  for (const Poly* p : ps) {
    if (!(*p->ring() == *ring)) throw RingMismatch("operands belong to different rings");
    for (auto v : p->variables_used()) {
      if (!ring->is_param(v)) throw DomainError("input is not univariate in a coefficient parameter");
      if (idx && *idx != v) throw DomainError("inputs are not univariate in a single coefficient parameter");
      idx = v;
    }
  }
  if (!idx) {
    if (ring->num_params() == 0) return ring->arity();  // constants only; index unused
    idx = 0;
  }
  return *idx;
}

UPoly to_upoly(const Poly& p, std::size_t index) {
  if (index >= p.ring()->arity()) return UPoly({p.constant_term()});
  return UPoly::from_poly(p, index);
}

Poly from_upoly(const UPoly& u, const RingPtr& ring, std::size_t index) {
  if (index >= ring->arity()) {
    if (u.degree() > 0) throw DomainError("non-constant result without a parameter");
    return Poly::constant(ring, u.is_zero() ? Rational(0) : u.coeffs()[0]);
  }
  return u.to_poly(ring, index);
}

}  // namespace

BezoutResult extended_euclid(const Poly& a, const Poly& b) {
  const std::size_t t = univariate_param({&a, &b});
  const auto& ring = a.ring();
  UPoly r0 = to_upoly(a, t), r1 = to_upoly(b, t);
  if (r0.is_zero() && r1.is_zero()) throw DomainError("extended Euclid of two zero polynomials");
  UPoly s0({Rational(1)}), s1;
  UPoly u0, u1({Rational(1)});
  while (!r1.is_zero()) {
    auto [q, r] = UPoly::divmod(r0, r1);
    UPoly s2 = s0 - q * s1;
    UPoly u2 = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  const Rational l = r0.lead();
  const UPoly scale({Rational(1) / l});
  return {from_upoly(r0.monic(), ring, t), from_upoly(s0 * scale, ring, t), from_upoly(u0 * scale, ring, t)};
}

Poly reduce_mod(const Poly& r, const Poly& m) {
  if (!m.in_coefficient_ring()) throw DomainError("modulus must lie in the coefficient ring");
  if (m.is_zero()) throw DomainError("reduction modulo zero");
  return divide(r, m).remainder;
}

Poly reduce_mod_prime(const Poly& r, const Poly& p) {
  const std::size_t t = univariate_param({&p});
  if (p.is_constant()) throw DomainError("prime modulus must have degree >= 1");
  for (auto v : r.variables_used())
    if (r.ring()->is_param(v) && v != t)
      throw DomainError("polynomial involves a coefficient parameter other than the modulus variable");
  return reduce_mod(r, p);
}

Tri irreducible_smalldeg(const Poly& p) {
  const std::size_t t = univariate_param({&p});
  if (p.is_constant()) throw DomainError("irreducibility of a constant");
  const UPoly u = UPoly::from_poly(p, t);
  if (u.degree() == 1) return Tri::yes;
  if (u.degree() <= 3) return u.rational_roots().empty() ? Tri::yes : Tri::no;
  return Tri::unknown;
}

std::optional<std::vector<PrimePower>> factor_smalldeg(const Poly& p) {
  const std::size_t t = univariate_param({&p});
  if (p.is_zero()) throw DomainError("factorization of zero");
  std::vector<PrimePower> out;
  if (p.is_constant()) return out;
  const auto& ring = p.ring();
  UPoly u = UPoly::from_poly(p, t);
  std::vector<Rational> roots;
  try {
    roots = u.rational_roots();
  } catch (const DomainError&) {
    return std::nullopt;
  }
  for (const auto& root : roots) {
    const UPoly lin({-root, Rational(1)});
    unsigned mult = 0;
    for (;;) {
      auto [q, r] = UPoly::divmod(u, lin);
      if (!r.is_zero()) break;
      u = std::move(q);
      ++mult;
    }
    out.push_back({normalize_unit(lin.to_poly(ring, t)), mult, false});
  }
  if (u.degree() >= 4) return std::nullopt;
  if (u.degree() >= 2) out.push_back({normalize_unit(u.to_poly(ring, t)), 1, false});
  return out;
}

}  // namespace lnd
