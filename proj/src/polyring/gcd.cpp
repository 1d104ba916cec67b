#include <algorithm>

#include "lnd/polyring.hpp"

namespace lnd {

DivisionResult divide(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (!(*dividend.ring() == *divisor.ring())) throw RingMismatch("division across different rings");
  const auto& ring = dividend.ring();
  const Exponent& lead = divisor.leading_exponent();
  const Rational& lead_coeff = divisor.leading_coefficient();

  Poly quotient(ring);
  Poly remainder(ring);
  Poly rest = dividend;
  Exponent shift(ring->arity());
  while (!rest.is_zero()) {
    const Exponent e = rest.leading_exponent();
    const Rational c = rest.leading_coefficient();
    bool divisible = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < lead[i]) {
        divisible = false;
        break;
      }
      shift[i] = e[i] - lead[i];
    }
    if (divisible) {
      const Poly term = Poly::monomial(ring, shift, c / lead_coeff);
      quotient += term;
      rest -= term * divisor;
    } else {
      const Poly term = Poly::monomial(ring, e, c);
      remainder += term;
      rest -= term;
    }
  }
  return {std::move(quotient), std::move(remainder)};
}

std::optional<Poly> divide_exact(const Poly& dividend, const Poly& divisor) {
  auto [q, r] = divide(dividend, divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Rational normalization_factor(const Poly& p) {
  if (p.is_zero()) return 1;
  Integer den_lcm = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational f(den_lcm, num_gcd);
  f.canonicalize();
  if (sgn(p.leading_coefficient()) < 0) f = -f;
  return f;
}

Poly normalize_unit(const Poly& p) { return p * normalization_factor(p); }

bool is_unit(const Poly& p) { return !p.is_zero() && p.is_constant(); }

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t index) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  const auto db = b.degree_in(index);
  const Poly lb = b.coefficients_in(index).back();
  Poly r = a;
  while (!r.is_zero() && r.degree_in(index) >= db) {
    const auto dr = r.degree_in(index);
    const Poly lr = r.coefficients_in(index).back();
    r = lb * r - (lr * b).shift(index, dr - db);
  }
  return r;
}

Poly content_in(const Poly& p, std::size_t index) {
  if (p.is_zero()) return p;
  Poly g(p.ring());
  for (const auto& c : p.coefficients_in(index)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (is_unit(g)) break;
  }
  return g;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (!(*a.ring() == *b.ring())) throw RingMismatch("gcd across different rings");
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  const auto& ring = a.ring();
  if (a.is_constant() || b.is_constant()) return Poly::constant(ring, 1);

  const auto va = a.variables_used();
  const auto vb = b.variables_used();
  for (auto x : va)
    if (!b.involves(x)) return gcd(content_in(a, x), b);
  for (auto x : vb)
    if (!a.involves(x)) return gcd(a, content_in(b, x));

  const std::size_t x = va.back();
  const Poly ca = content_in(a, x);
  const Poly cb = content_in(b, x);
  const Poly c = gcd(ca, cb);
  Poly pa = *divide_exact(a, ca);
  Poly pb = *divide_exact(b, cb);
  if (pa.degree_in(x) < pb.degree_in(x)) std::swap(pa, pb);
  // primitive polynomial remainder sequence
  while (!pb.is_zero()) {
    Poly r = pseudo_remainder(pa, pb, x);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = Poly(ring);
    } else {
      const Poly cr = content_in(r, x);
      pb = *divide_exact(r, cr);
    }
  }
  if (pa.degree_in(x) == 0) return normalize_unit(c);
  return normalize_unit(c * pa);
}

Poly multivariate_gcd(std::span<const Poly> fs) {
  if (fs.empty()) throw DomainError("gcd of an empty list");
  Poly g(fs.front().ring());
  bool any = false;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    any = true;
    g = gcd(g, f);
    if (is_unit(g)) break;
  }
  if (!any) throw DomainError("gcd of all-zero inputs");
  return g;
}

}  // namespace lnd
