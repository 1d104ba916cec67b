#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "lnd/polyring.hpp"

namespace lnd {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::no:
      return "false";
    case Tri::yes:
      return "true";
    case Tri::unknown:
      return "unknown";
  }
  return "unknown";
}

PolyRing::PolyRing(std::vector<std::string> params, std::vector<std::string> vars)
    : params_(std::move(params)), vars_(std::move(vars)) {
  if (vars_.empty()) throw DomainError("a polynomial ring needs at least one main variable");
  std::set<std::string> seen;
  auto check = [&](const std::string& n) {
    if (n.empty()) throw DomainError("empty variable name");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  };
  for (const auto& n : params_) check(n);
  for (const auto& n : vars_) check(n);
}

std::shared_ptr<const PolyRing> PolyRing::make(std::vector<std::string> params,
                                               std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(std::move(params), std::move(vars));
}

const std::string& PolyRing::name(std::size_t index) const {
  if (index < params_.size()) return params_[index];
  return vars_.at(index - params_.size());
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == name) return i;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return params_.size() + i;
  return std::nullopt;
}

std::size_t PolyRing::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw DomainError("unknown variable '" + std::string(name) + "'");
  return *idx;
}

std::uint32_t total_degree(const Exponent& e) noexcept {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const noexcept {
  const auto da = lnd::total_degree(a);
  const auto db = lnd::total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// --- Poly ---------------------------------------------------------------------

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("polynomial without a ring");
}

Poly::Poly(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw DomainError("polynomial without a ring");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != ring_->arity()) throw DomainError("exponent vector arity mismatch");
    if (sgn(it->second) == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(std::move(ring));
  if (sgn(c) != 0) p.terms_.emplace(Exponent(p.ring_->arity(), 0), c);
  return p;
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
  const auto idx = ring->require_index(name);
  return variable(std::move(ring), idx);
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  Exponent e(ring->arity(), 0);
  e.at(index) = 1;
  return monomial(std::move(ring), std::move(e));
}

Poly Poly::monomial(RingPtr ring, Exponent e, const Rational& c) {
  Poly p(std::move(ring));
  if (e.size() != p.ring_->arity()) throw DomainError("exponent vector arity mismatch");
  if (sgn(c) != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

bool Poly::is_constant() const noexcept {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && lnd::total_degree(terms_.begin()->first) == 0;
}

Rational Poly::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& [e, c] = *terms_.begin();
  return lnd::total_degree(e) == 0 ? c : Rational(0);
}

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Exponent& Poly::leading_exponent() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.rbegin()->second;
}

std::uint32_t Poly::total_degree() const noexcept {
  return terms_.empty() ? 0 : lnd::total_degree(terms_.rbegin()->first);
}

std::uint32_t Poly::degree_in(std::size_t index) const noexcept {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[index]);
  return d;
}

std::uint32_t Poly::param_degree() const noexcept {
  std::uint32_t d = 0;
  const auto k = ring_->num_params();
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.begin() + static_cast<long>(k), std::uint32_t{0}));
  return d;
}

std::uint32_t Poly::var_degree() const noexcept {
  std::uint32_t d = 0;
  const auto k = ring_->num_params();
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin() + static_cast<long>(k), e.end(), std::uint32_t{0}));
  return d;
}

bool Poly::involves(std::size_t index) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[index] > 0; });
}

bool Poly::in_coefficient_ring() const noexcept {
  for (std::size_t i = ring_->num_params(); i < ring_->arity(); ++i)
    if (involves(i)) return false;
  return true;
}

std::vector<std::size_t> Poly::variables_used() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_->arity(); ++i)
    if (involves(i)) out.push_back(i);
  return out;
}

void Poly::require_same_ring(const Poly& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
    throw RingMismatch("operands belong to different polynomial rings");
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_ring(b);
  Poly out(a.ring_);
  Exponent e(a.ring_->arity());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

bool Poly::operator==(const Poly& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) return false;
  return terms_ == other.terms_;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::partial(std::size_t index) const {
  if (index >= ring_->arity()) throw DomainError("variable index out of range");
  Poly out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent d = e;
    d[index] -= 1;
    out.terms_.emplace(std::move(d), c * e[index]);
  }
  return out;
}

Poly Poly::partial(std::string_view name) const { return partial(ring_->require_index(name)); }

Poly Poly::shift(std::size_t index, std::uint32_t e) const {
  Poly out(ring_);
  for (const auto& [ex, c] : terms_) {
    Exponent d = ex;
    d[index] += e;
    out.terms_.emplace(std::move(d), c);
  }
  return out;
}

Poly Poly::substitute(std::size_t index, const Poly& value) const {
  require_same_ring(value);
  const auto coeffs = coefficients_in(index);
  // Horner in the substituted value.
  Poly out(ring_);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    out *= value;
    out += *it;
  }
  return out;
}

Poly Poly::embed(const RingPtr& target) const {
  if (*target == *ring_) return Poly(target, terms_);
  std::vector<std::optional<std::size_t>> map(ring_->arity());
  for (std::size_t i = 0; i < ring_->arity(); ++i) map[i] = target->index_of(ring_->name(i));
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Exponent d(target->arity(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!map[i])
        throw RingMismatch("variable '" + ring_->name(i) + "' does not exist in the target ring");
      d[*map[i]] = e[i];
    }
    out.add_term(d, c);
  }
  return out;
}

std::vector<Poly> Poly::coefficients_in(std::size_t index) const {
  std::vector<Poly> out(degree_in(index) + (terms_.empty() ? 0 : 1), Poly(ring_));
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    const auto k = d[index];
    d[index] = 0;
    out[k].terms_.emplace(std::move(d), c);
  }
  return out;
}

Poly Poly::from_coefficients(const RingPtr& ring, std::size_t index,
                             std::span<const Poly> coefficients) {
  Poly out(ring);
  for (std::size_t k = 0; k < coefficients.size(); ++k) out += coefficients[k].shift(index, static_cast<std::uint32_t>(k));
  return out;
}

std::map<Exponent, Poly, GrlexLess> Poly::coefficients_over_params() const {
  std::map<Exponent, Poly, GrlexLess> out;
  const auto k = ring_->num_params();
  for (const auto& [e, c] : terms_) {
    Exponent key = e;
    Exponent coeff = e;
    std::fill(key.begin(), key.begin() + static_cast<long>(k), 0u);
    std::fill(coeff.begin() + static_cast<long>(k), coeff.end(), 0u);
    auto it = out.try_emplace(key, Poly(ring_)).first;
    it->second.terms_.emplace(std::move(coeff), c);
  }
  return out;
}

namespace {

std::string monomial_str(const PolyRing& ring, const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const auto mono = monomial_str(*ring_, e);
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly map_variables(const Poly& p, const RingPtr& target, const std::vector<Poly>& images) {
  if (images.size() != p.ring()->arity()) throw DomainError("one image per variable is required");
  for (const auto& img : images)
    if (!(*img.ring() == *target)) throw RingMismatch("variable image lives outside the target ring");
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Poly out(target);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= power(i, e[i]);
    out += term;
  }
  return out;
}

namespace {

void compositions(std::size_t first, std::size_t last, std::uint32_t budget, Exponent& cur,
                  std::vector<Exponent>& out) {
  if (first == last) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t e = 0; e <= budget; ++e) {
    cur[first] = e;
    compositions(first + 1, last, budget - e, cur, out);
  }
  cur[first] = 0;
}

}  // namespace

std::vector<Exponent> monomials_within(const PolyRing& ring, std::uint32_t param_bound,
                                       std::uint32_t var_bound) {
  const std::size_t k = ring.num_params();
  Exponent cur(ring.arity(), 0);
  std::vector<Exponent> params;
  compositions(0, k, param_bound, cur, params);
  std::vector<Exponent> out;
  for (const auto& p : params) {
    Exponent e = p;
    std::vector<Exponent> vs;
    compositions(k, ring.arity(), var_bound, e, vs);
    out.insert(out.end(), vs.begin(), vs.end());
  }
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

bool canonical_less(const Poly& a, const Poly& b) {
  auto ia = a.terms().rbegin();
  auto ib = b.terms().rbegin();
  GrlexLess less;
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return true;
    if (less(ib->first, ia->first)) return false;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().rend() && ib != b.terms().rend();
}

}  // namespace lnd
