#include <algorithm>
#include <functional>
#include <map>

#include "lnd/derivation.hpp"
#include "lnd/linalg.hpp"

namespace lnd {

Derivation::Derivation(RingPtr ring, std::vector<Poly> images) : ring_(std::move(ring)), images_(std::move(images)) {
  if (images_.size() != ring_->num_vars())
    throw DomainError("expected " + std::to_string(ring_->num_vars()) + " images, got " +
                      std::to_string(images_.size()));
  bool all_zero = true;
  for (const auto& img : images_) {
    if (!(*img.ring() == *ring_)) throw RingMismatch("derivation image lives in a different ring");
    all_zero = all_zero && img.is_zero();
  }
  if (all_zero) throw DomainError("the zero derivation is not allowed");
}

Poly Derivation::apply(const Poly& f) const {
  if (!(*f.ring() == *ring_)) throw RingMismatch("polynomial and derivation live in different rings");
  Poly out(ring_);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const std::size_t idx = ring_->var_index(i);
    if (images_[i].is_zero() || !f.involves(idx)) continue;
    out += images_[i] * f.partial(idx);
  }
  return out;
}

Poly Derivation::iterate(const Poly& f, std::size_t n) const {
  Poly cur = f;
  for (std::size_t i = 0; i < n && !cur.is_zero(); ++i) cur = apply(cur);
  if (!(*f.ring() == *ring_)) throw RingMismatch("polynomial and derivation live in different rings");
  return cur;
}

std::string DDegree::str() const {
  switch (kind) {
    case Kind::minus_infinity:
      return "-inf";
    case Kind::finite:
      return std::to_string(value);
    case Kind::overflow:
      return "overflow";
    case Kind::never:
      return "inf";
  }
  return "?";
}

namespace {

/// Whether a = c * b for some nonzero rational c.
bool scalar_multiple(const Poly& a, const Poly& b) {
  if (a.size() != b.size() || a.is_zero()) return false;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const Rational ratio = ia->second / ib->second;
  for (; ia != a.terms().end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ratio * ib->second) return false;
  return true;
}

}  // namespace

DDegree deg_D(const Derivation& d, const Poly& f, std::size_t cap) {
  if (cap == 0) throw DomainError("iteration cap must be at least 1");
  if (f.is_zero()) return {DDegree::Kind::minus_infinity, 0};
  std::vector<Poly> seen{f};
  for (std::size_t n = 0; n < cap; ++n) {
    Poly next = d.apply(seen.back());
    if (next.is_zero()) return {DDegree::Kind::finite, n};
    for (const auto& prev : seen)
      if (scalar_multiple(next, prev)) return {DDegree::Kind::never, 0};
    seen.push_back(std::move(next));
  }
  return {DDegree::Kind::overflow, cap};
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::nice:
      return "nice";
    case Classification::strictly_1_quasi_candidate:
      return "strictly-1-quasi-candidate";
    case Classification::quasi_nice:
      return "quasi-nice";
    case Classification::other:
      return "other";
  }
  return "other";
}

namespace {

/// -integral of g with respect to the variable `idx`, with zero constant term in it.
Poly neg_antiderivative(const Poly& g, std::size_t idx) {
  Poly::TermMap terms;
  for (const auto& [e, c] : g.terms()) {
    Exponent d = e;
    d[idx] += 1;
    terms.emplace(std::move(d), -c / Rational(d[idx]));
  }
  return Poly(g.ring(), std::move(terms));
}

bool only_involves(const Poly& p, std::size_t allowed_var_idx) {
  for (auto v : p.variables_used())
    if (!p.ring()->is_param(v) && v != allowed_var_idx) return false;
  return true;
}

}  // namespace

StructureReport classify(const Derivation& d, std::size_t cap) {
  StructureReport rep;
  const auto& ring = d.ring();
  const std::size_t n = d.num_vars();
  bool any_never = false, any_overflow = false;
  for (std::size_t i = 0; i < n; ++i) {
    rep.degrees.push_back(deg_D(d, Poly::variable(ring, ring->var_index(i)), cap));
    any_never = any_never || rep.degrees.back().kind == DDegree::Kind::never;
    any_overflow = any_overflow || rep.degrees.back().kind == DDegree::Kind::overflow;
  }
  rep.lnd = any_never ? Tri::no : (any_overflow ? Tri::unknown : Tri::yes);
  rep.images_gcd = multivariate_gcd(d.images());
  rep.irreducible = is_unit(*rep.images_gcd);
  for (std::size_t i = 0; i < n; ++i)
    if (d.apply(d.image(i)).is_zero()) rep.nice_set.push_back(i);

  if (rep.nice_set.size() == n) {
    rep.classification = Classification::nice;
    if (n == 2 && d.image(0).in_coefficient_ring() && d.image(1).in_coefficient_ring())
      rep.nice2 = NiceData{d.image(0), -d.image(1)};
    return rep;
  }
  if (rep.nice_set.empty()) {
    rep.classification = Classification::other;
    return rep;
  }
  rep.classification = Classification::quasi_nice;
  if (n == 2 && rep.lnd == Tri::yes) {
    const std::size_t first = rep.nice_set.front();
    const std::size_t second = 1 - first;
    const std::size_t x1 = ring->var_index(first);
    if (d.image(first).in_coefficient_ring() && only_involves(d.image(second), x1)) {
      Poly f = neg_antiderivative(d.image(second), x1);
      const auto deg = f.degree_in(x1);
      rep.quasi = QuasiData{first, second, d.image(first), std::move(f), deg};
      rep.classification = Classification::strictly_1_quasi_candidate;
    }
  }
  return rep;
}

bool verify_kernel_element(const Derivation& d, const Poly& g) { return d.apply(g).is_zero(); }

// --- unit ideal tests in the coefficient ring ----------------------------------

namespace {

std::vector<std::size_t> params_used(const std::vector<Poly>& ps) {
  std::vector<std::size_t> out;
  for (const auto& p : ps)
    for (auto v : p.variables_used()) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational evaluate_params(const Poly& p, const std::vector<Rational>& point) {
  Rational acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

/// Looks for cofactors c_i of total degree <= deg with sum c_i g_i = 1.
std::optional<std::vector<Poly>> bezout_search(const std::vector<Poly>& gens, std::uint32_t deg) {
  const auto& ring = gens.front().ring();
  const auto monos = monomials_within(*ring, deg, 0);
  std::uint32_t max_deg = 0;
  for (const auto& g : gens) max_deg = std::max(max_deg, g.param_degree());
  const auto rows_monos = monomials_within(*ring, deg + max_deg, 0);
  std::map<Exponent, std::size_t, GrlexLess> row_of;
  for (std::size_t i = 0; i < rows_monos.size(); ++i) row_of.emplace(rows_monos[i], i);

  linalg::SparseMatrix m;
  m.rows = rows_monos.size();
  for (const auto& g : gens) {
    for (const auto& mono : monos) {
      const Poly prod = g * Poly::monomial(ring, mono);
      linalg::SparseColumn col;
      for (const auto& [e, c] : prod.terms()) col.emplace_back(row_of.at(e), c);
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      m.columns.push_back(std::move(col));
    }
  }
  linalg::Vector rhs(m.rows, Rational(0));
  rhs[row_of.at(Exponent(ring->arity(), 0))] = 1;
  auto sol = linalg::solve(m, {rhs}, {.entry_cap = 1'000'000, .exec = linalg::Exec::serial});
  if (!sol.front()) return std::nullopt;
  std::vector<Poly> cof;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Poly c(ring);
    for (std::size_t k = 0; k < monos.size(); ++k) {
      const Rational& v = (*sol.front())[i * monos.size() + k];
      if (sgn(v) != 0) c += Poly::monomial(ring, monos[k], v);
    }
    cof.push_back(std::move(c));
  }
  return cof;
}

}  // namespace

UnitIdealVerdict unit_ideal_in_coefficients(const std::vector<Poly>& input, unsigned bezout_degree) {
  std::vector<Poly> gens;
  for (const auto& g : input) {
    if (!g.in_coefficient_ring()) throw DomainError("unit ideal test expects elements of the coefficient ring");
    if (!g.is_zero()) gens.push_back(g);
  }
  UnitIdealVerdict out;
  if (gens.empty()) {
    out.value = Tri::no;
    out.reason = "all generators are zero";
    return out;
  }
  const auto& ring = gens.front().ring();
  out.bezout.assign(input.size(), Poly(ring));
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (is_unit(input[i])) {
      out.value = Tri::yes;
      out.reason = "generator " + input[i].str() + " is a unit";
      out.bezout[i] = Poly::constant(ring, Rational(1) / input[i].constant_term());
      return out;
    }
  }
  const auto used = params_used(gens);
  if (used.size() <= 1) {
    // Euclid in Q[t].
    std::size_t first = 0;
    while (input[first].is_zero()) ++first;
    Poly g = input[first];
    std::vector<Poly> cof(input.size(), Poly(ring));
    cof[first] = Poly::constant(ring, 1);
    for (std::size_t i = first + 1; i < input.size(); ++i) {
      if (input[i].is_zero()) continue;
      const auto r = extended_euclid(g, input[i]);
      for (auto& c : cof) c = c * r.alpha;
      cof[i] = r.beta;
      g = r.gcd;
    }
    if (is_unit(g)) {
      out.value = Tri::yes;
      out.reason = "extended Euclid gives gcd 1";
      out.bezout = std::move(cof);
    } else {
      out.value = Tri::no;
      out.reason = "common factor " + normalize_unit(g).str();
    }
    return out;
  }
  const Poly g = multivariate_gcd(gens);
  if (!is_unit(g)) {
    out.value = Tri::no;
    out.reason = "common factor " + g.str();
    return out;
  }
  // Common rational zero on a small grid.
  const std::size_t k = ring->num_params();
  std::vector<Rational> point(k, Rational(0));
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == k) {
      return std::all_of(gens.begin(), gens.end(), [&](const Poly& p) { return sgn(evaluate_params(p, point)) == 0; });
    }
    if (!std::binary_search(used.begin(), used.end(), i)) return search(i + 1);
    for (int v = -2; v <= 2; ++v) {
      point[i] = v;
      if (search(i + 1)) return true;
    }
    point[i] = 0;
    return false;
  };
  if (search(0)) {
    out.value = Tri::no;
    std::string at;
    for (std::size_t i = 0; i < k; ++i) at += (i ? ", " : "") + ring->name(i) + "=" + point[i].get_str();
    out.reason = "common zero at (" + at + ")";
    return out;
  }
  std::vector<std::uint32_t> schedule{0};
  for (std::uint32_t deg = 1; deg < bezout_degree; deg *= 2) schedule.push_back(deg);
  if (bezout_degree > 0) schedule.push_back(bezout_degree);
  for (auto deg : schedule) {
    if (auto cof = bezout_search(gens, deg)) {
      out.value = Tri::yes;
      out.reason = "Bezout cofactors of degree <= " + std::to_string(deg);
      std::size_t j = 0;
      for (std::size_t i = 0; i < input.size(); ++i)
        if (!input[i].is_zero()) out.bezout[i] = (*cof)[j++];
      return out;
    }
  }
  out.value = Tri::unknown;
  out.reason = "no common zero found and no Bezout identity of degree <= " + std::to_string(bezout_degree);
  return out;
}

// --- fixed point freeness --------------------------------------------------------

void validate_factorization(const Poly& b, const std::vector<PrimePower>& factors) {
  Poly prod = Poly::constant(b.ring(), 1);
  for (const auto& f : factors) {
    if (f.prime.is_constant()) throw DomainError("declared prime " + f.prime.str() + " is constant");
    if (f.multiplicity == 0) throw DomainError("declared prime " + f.prime.str() + " has multiplicity 0");
    if (!f.asserted_irreducible) {
      const Tri irr = irreducible_smalldeg(f.prime);
      if (irr == Tri::no) throw DomainError("declared prime " + f.prime.str() + " is reducible");
      if (irr == Tri::unknown)
        throw DomainError("irreducibility of " + f.prime.str() + " cannot be decided; assert it explicitly");
    }
    prod *= f.prime.pow(f.multiplicity);
  }
  if (b.is_zero() || !(normalize_unit(prod) == normalize_unit(b)))
    throw DomainError("factorization does not multiply to " + b.str());
}

namespace {

const QuasiData& require_quasi(const StructureReport& rep) {
  if (!rep.quasi) throw Unsupported("derivation is not of the two-variable quasi-nice shape");
  return *rep.quasi;
}

Poly f_prime(const Derivation& d, const QuasiData& q) { return -d.image(q.second); }

}  // namespace

bool localized_fpf(const Derivation& d, const Poly& p) {
  const auto rep = classify(d);
  if (!rep.quasi && rep.nice2) {
    // nice shape: f' = -DX_2 lies in R
    if (!reduce_mod_prime(d.image(0), p).is_zero()) throw DomainError(p.str() + " does not divide " + d.image(0).str());
    const Poly r = reduce_mod_prime(d.image(1), p);
    return !r.is_zero();
  }
  const auto& q = require_quasi(rep);
  if (!reduce_mod_prime(q.b, p).is_zero()) throw DomainError(p.str() + " does not divide " + q.b.str());
  const Poly r = reduce_mod_prime(f_prime(d, q), p);
  return !r.is_zero() && r.in_coefficient_ring();
}

FpfVerdict is_fixed_point_free(const Derivation& d, const FpfOptions& opts) {
  const auto rep = classify(d);
  const auto& ring = d.ring();
  FpfVerdict out;
  const bool all_in_r = std::all_of(d.images().begin(), d.images().end(),
                                    [](const Poly& p) { return p.in_coefficient_ring(); });
  if (all_in_r) {
    const auto u = unit_ideal_in_coefficients(d.images(), opts.bezout_degree);
    out.value = u.value;
    out.reason = u.reason;
    return out;
  }
  const auto& q = require_quasi(rep);
  if (is_unit(q.b)) {
    out.value = Tri::yes;
    out.reason = "DX_1 is a unit";
    return out;
  }
  const Poly fp = f_prime(d, q);
  if (ring->num_params() == 1) {
    std::vector<PrimePower> factors;
    if (opts.factored_b) {
      factors = *opts.factored_b;
    } else if (auto auto_f = factor_smalldeg(q.b)) {
      factors = *auto_f;
    } else {
      throw DomainError("missing factorization of " + q.b.str());
    }
    validate_factorization(q.b, factors);
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (!localized_fpf(d, factors[i].prime)) out.failing_primes.push_back(i);
    if (out.failing_primes.empty()) {
      out.value = Tri::yes;
      out.reason = "f' is a nonzero constant modulo every prime factor of b";
    } else {
      out.value = Tri::no;
      out.reason = "not fixed point free at " + normalize_unit(factors[out.failing_primes.front()].prime).str();
    }
    return out;
  }
  const Poly r = reduce_mod(fp, q.b);
  if (r.is_constant() && !r.is_zero()) {
    out.value = Tri::yes;
    out.reason = "f' is a nonzero rational modulo b";
    return out;
  }
  if (!r.in_coefficient_ring()) {
    const bool prime_b = opts.assert_irreducible || q.b.total_degree() == 1;
    out.value = prime_b ? Tri::no : Tri::unknown;
    out.reason = prime_b ? "f' modulo the prime b has positive degree" : "b is not known to be prime";
    return out;
  }
  const auto u = unit_ideal_in_coefficients({q.b, r}, opts.bezout_degree);
  out.value = u.value;
  out.reason = u.reason;
  return out;
}

}  // namespace lnd
