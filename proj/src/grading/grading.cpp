#include <algorithm>

#include "lnd/grading.hpp"

namespace lnd {

WeightedDegree::WeightedDegree(RingPtr ring, const std::map<std::string, std::uint32_t>& weights)
    : ring_(std::move(ring)), weights_(ring_->arity(), 0) {
  for (const auto& [name, w] : weights) {
    const auto idx = ring_->require_index(name);
    if (ring_->is_param(idx) && w != 0) throw DomainError("coefficient parameter '" + name + "' must have weight 0");
    weights_[idx] = w;
  }
  for (const auto& v : ring_->vars())
    if (!weights.count(v)) throw DomainError("no weight given for variable '" + v + "'");
}

std::uint64_t WeightedDegree::weight_of(const Exponent& e) const {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<std::uint64_t>(weights_[i]) * e[i];
  return w;
}

Tilde wdeg_and_tilde(const WeightedDegree& lambda, const Poly& p) {
  if (!(*p.ring() == *lambda.ring())) throw RingMismatch("polynomial and weighted degree live in different rings");
  Tilde out{std::nullopt, Poly(p.ring())};
  if (p.is_zero()) return out;
  std::uint64_t top = 0;
  for (const auto& [e, c] : p.terms()) top = std::max(top, lambda.weight_of(e));
  Poly::TermMap terms;
  for (const auto& [e, c] : p.terms())
    if (lambda.weight_of(e) == top) terms.emplace(e, c);
  out.degree = top;
  out.top = Poly(p.ring(), std::move(terms));
  return out;
}

namespace {

/// A variable V with p = c*V - g, c a nonzero rational and V absent from g.
std::optional<std::size_t> substitution_variable(const Poly& p, const std::vector<const Poly*>& others,
                                                 bool main_only) {
  for (auto v : p.variables_used()) {
    if (main_only && p.ring()->is_param(v)) continue;
    if (p.degree_in(v) != 1) continue;
    const auto coeffs = p.coefficients_in(v);
    if (!coeffs[1].is_constant()) continue;
    if (std::any_of(others.begin(), others.end(), [&](const Poly* o) { return o->involves(v); })) continue;
    return v;
  }
  return std::nullopt;
}

/// Value of V solved from p = c*V - g, i.e. g / c.
Poly solve_for(const Poly& p, std::size_t v) {
  const auto coeffs = p.coefficients_in(v);
  return coeffs[0] * (Rational(-1) / coeffs[1].constant_term());
}

}  // namespace

TopDegreeResult top_degree_ideal(const WeightedDegree& lambda, const std::vector<Poly>& gens) {
  if (gens.empty()) throw DomainError("top degree ideal of an empty generator list");
  const auto& ring = lambda.ring();
  TopDegreeResult out;
  out.ideal.ring = ring;
  auto& cert = out.certificate;
  const std::size_t m = gens.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (gens[i].is_zero()) throw DomainError("zero generator");
    if (!(wdeg_and_tilde(lambda, gens[i]).top == gens[i]))
      throw DomainError("hypothesis (i) fails: generator " + std::to_string(i + 1) + " is not weighted homogeneous");
  }
  cert.homogeneous_checked = true;
  const Poly last = wdeg_and_tilde(lambda, gens.back()).top;
  if (last.is_zero()) throw DomainError("zero generator");

  // Hypothesis (ii): eliminate the leading generators by substitution.
  std::vector<std::size_t> remaining(m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i) remaining[i] = i;
  Poly reduced = last;
  while (!remaining.empty()) {
    bool progressed = false;
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      std::vector<const Poly*> others;
      for (std::size_t l = 0; l < remaining.size(); ++l)
        if (l != k) others.push_back(&gens[remaining[l]]);
      if (auto v = substitution_variable(gens[remaining[k]], others, false)) {
        reduced = reduced.substitute(*v, solve_for(gens[remaining[k]], *v));
        cert.notes.push_back("eliminated " + ring->name(*v) + " via generator " + std::to_string(remaining[k] + 1));
        remaining.erase(remaining.begin() + static_cast<long>(k));
        progressed = true;
        break;
      }
    }
    if (!progressed) throw DomainError("hypothesis (ii) unverifiable: generators are not of substitution shape");
  }
  if (reduced.is_zero())
    throw DomainError("hypothesis (ii) fails: the top part of the last generator vanishes modulo the others");
  cert.nonzerodivisor_checked = true;
  cert.notes.push_back("top part of the last generator is " + reduced.str() + " in the residual polynomial ring");

  for (std::size_t i = 0; i + 1 < m; ++i) {
    out.ideal.generators.push_back(gens[i]);
    cert.sources.push_back(gens[i]);
  }
  out.ideal.generators.push_back(last);
  cert.sources.push_back(gens.back());
  for (std::size_t i = 0; i < m; ++i)
    if (!(wdeg_and_tilde(lambda, cert.sources[i]).top == out.ideal.generators[i]))
      throw Error("top degree certificate does not re-verify");
  return out;
}

PrimalityVerdict prime_after_elimination(const std::vector<Poly>& input) {
  std::vector<Poly> gens;
  for (const auto& g : input)
    if (!g.is_zero()) gens.push_back(g);
  for (bool progressed = true; progressed && !gens.empty();) {
    progressed = false;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::vector<const Poly*> others;
      for (std::size_t l = 0; l < gens.size(); ++l)
        if (l != k) others.push_back(&gens[l]);
      if (substitution_variable(gens[k], others, false)) {
        gens.erase(gens.begin() + static_cast<long>(k));
        progressed = true;
        break;
      }
    }
  }
  if (gens.empty()) return {Tri::yes, "every generator eliminates a variable; the quotient is a polynomial ring"};
  for (const auto& g : gens)
    if (g.is_constant()) return {Tri::no, "the ideal contains the unit " + g.str()};
  if (gens.size() > 1) return {Tri::unknown, std::to_string(gens.size()) + " generators remain after elimination"};

  const Poly& h = gens.front();
  const auto& ring = h.ring();
  for (auto x : h.variables_used()) {
    if (h.degree_in(x) != 1) continue;
    const auto c = h.coefficients_in(x);
    if (c[0].is_zero() ? is_unit(c[1]) : is_unit(gcd(c[1], c[0])))
      return {Tri::yes, h.str() + " is primitive of degree 1 in " + ring->name(x)};
  }
  for (auto x : h.variables_used()) {
    const Poly cont = content_in(h, x);
    if (!is_unit(cont)) return {Tri::no, h.str() + " has the factor " + cont.str()};
    const Poly g = gcd(h, h.partial(x));
    if (!is_unit(g)) return {Tri::no, h.str() + " has the repeated factor " + g.str()};
  }
  return {Tri::unknown, "no decision for " + h.str()};
}

namespace {

void gj_rec(const std::vector<std::uint32_t>& weights, std::size_t pos, std::uint32_t rest,
            std::vector<std::uint32_t>& cur, std::vector<std::vector<std::uint32_t>>& out) {
  if (pos == weights.size()) {
    if (rest == 0) out.push_back(cur);
    return;
  }
  for (std::uint32_t e = rest / weights[pos] + 1; e-- > 0;) {
    cur[pos] = e;
    gj_rec(weights, pos + 1, rest - e * weights[pos], cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_gj(const GjSpec& spec) {
  std::vector<std::uint32_t> weights(spec.slices, 1);
  for (auto w : spec.u) {
    if (w == 0) throw DomainError("variable weights u_l must be at least 1");
    weights.push_back(w);
  }
  std::vector<std::vector<std::uint32_t>> out;
  if (weights.empty()) {
    if (spec.j == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> cur(weights.size(), 0);
  gj_rec(weights, 0, spec.j, cur, out);
  return out;
}

}  // namespace lnd
