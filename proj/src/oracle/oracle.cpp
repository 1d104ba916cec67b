#include <algorithm>

#include "lnd/oracle.hpp"

namespace lnd::oracle {

DegreeSlice::DegreeSlice(RingPtr ring, Bounds bounds)
    : ring_(std::move(ring)), bounds_(bounds), basis_(monomials_within(*ring_, bounds.param, bounds.var)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> DegreeSlice::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool DegreeSlice::contains(const Poly& p) const {
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) { return index_.count(t.first) > 0; });
}

std::optional<linalg::Vector> DegreeSlice::coords(const Poly& p) const {
  if (!(*p.ring() == *ring_)) throw RingMismatch("polynomial and slice live in different rings");
  linalg::Vector v(dim(), Rational(0));
  for (const auto& [e, c] : p.terms()) {
    auto idx = index_of(e);
    if (!idx) return std::nullopt;
    v[*idx] = c;
  }
  return v;
}

Poly DegreeSlice::poly(const linalg::Vector& v) const {
  if (v.size() != dim()) throw DomainError("coordinate vector does not match the slice");
  Poly::TermMap terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) terms.emplace(basis_[i], v[i]);
  return Poly(ring_, std::move(terms));
}

DegreeSlice slice_basis(const RingPtr& ring, std::uint32_t param_bound, std::uint32_t var_bound) {
  return DegreeSlice(ring, {param_bound, var_bound});
}

Bounds degree_growth(const Derivation& d) {
  Bounds g;
  std::uint32_t var_growth = 0;
  for (const auto& img : d.images()) {
    if (img.is_zero()) continue;
    g.param = std::max(g.param, img.param_degree());
    var_growth = std::max(var_growth, img.var_degree());
  }
  g.var = var_growth > 0 ? var_growth - 1 : 0;
  return g;
}

namespace {

linalg::SparseColumn to_column(const DegreeSlice& slice, const Poly& p) {
  linalg::SparseColumn col;
  col.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    auto idx = slice.index_of(e);
    if (!idx) throw Error("image leaves the target slice");
    col.emplace_back(*idx, c);
  }
  std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return col;
}

}  // namespace

LinearMapMatrix matrix_of_power(const Derivation& d, std::size_t n, const DegreeSlice& source) {
  if (!(*source.ring() == *d.ring())) throw RingMismatch("slice and derivation live in different rings");
  const Bounds g = degree_growth(d);
  const auto k = static_cast<std::uint32_t>(n);
  DegreeSlice target(source.ring(), {source.bounds().param + k * g.param, source.bounds().var + k * g.var});
  linalg::SparseMatrix m;
  m.rows = target.dim();
  m.columns.resize(source.dim());
  const auto count = static_cast<long>(source.dim());
#pragma omp parallel for schedule(dynamic, 8)
  for (long c = 0; c < count; ++c) {
    const Poly mono = Poly::monomial(source.ring(), source.basis()[static_cast<std::size_t>(c)]);
    m.columns[static_cast<std::size_t>(c)] = to_column(target, d.iterate(mono, n));
  }
  return {source, std::move(target), std::move(m)};
}

KernelImage kernel_and_image_basis(const Derivation& d, std::size_t n, const DegreeSlice& source,
                                   const linalg::Config& cfg) {
  if (n == 0) throw DomainError("image ideals are computed for n >= 1");
  const LinearMapMatrix mn = matrix_of_power(d, n, source);
  const LinearMapMatrix mn1 = matrix_of_power(d, n + 1, source);
  const LinearMapMatrix on_target = matrix_of_power(d, 1, mn.target);

  KernelImage out{mn.target, {}, {}};
  for (const auto& v : linalg::nullspace(on_target.entries, cfg)) out.kernel.push_back(mn.target.poly(v));

  // D^n x lies in A exactly when D^{n+1} x = 0.
  std::vector<linalg::Vector> images;
  for (const auto& x : linalg::nullspace(mn1.entries, cfg)) {
    auto y = mn.entries.apply(x);
    if (std::any_of(y.begin(), y.end(), [](const Rational& r) { return sgn(r) != 0; })) images.push_back(std::move(y));
  }
  // Pivot on the highest monomials so each basis element has the smallest
  // possible support below its leading term.
  for (auto& y : images) std::reverse(y.begin(), y.end());
  for (auto& v : linalg::row_basis(images, mn.target.dim(), cfg)) {
    std::reverse(v.begin(), v.end());
    out.image.push_back(mn.target.poly(v));
  }
  std::sort(out.image.begin(), out.image.end(), canonical_less);
  return out;
}

namespace {

Membership principal_membership(const Poly& g, const Poly& h) {
  Membership m;
  auto [q, r] = divide(h, g);
  if (r.is_zero()) {
    m.value = Tri::yes;
    m.cofactors = {q};
    m.reason = "exact division";
  } else {
    m.value = Tri::no;
    m.reason = "division by " + g.str() + " leaves remainder " + r.str();
  }
  return m;
}

/// Solves sum_{i,k} x_{ik} * (mult_k * gens_i) = h for each h; columns are
/// the products.
std::vector<Membership> span_membership(const std::vector<Poly>& gens, const std::vector<Poly>& mults,
                                        const std::vector<Poly>& hs, const linalg::Config& cfg) {
  const auto& ring = gens.front().ring();
  const std::size_t cols = gens.size() * mults.size();
  std::vector<Poly> products(cols, Poly(ring));
  const auto count = static_cast<long>(cols);
#pragma omp parallel for schedule(dynamic, 4)
  for (long c = 0; c < count; ++c) {
    const auto i = static_cast<std::size_t>(c) / mults.size();
    const auto k = static_cast<std::size_t>(c) % mults.size();
    products[static_cast<std::size_t>(c)] = gens[i] * mults[k];
  }
  std::map<Exponent, std::size_t, GrlexLess> row_of;
  for (const auto& p : products)
    for (const auto& t : p.terms()) row_of.emplace(t.first, 0);
  for (const auto& h : hs)
    for (const auto& t : h.terms()) row_of.emplace(t.first, 0);
  std::size_t r = 0;
  for (auto& [e, idx] : row_of) idx = r++;

  auto column_of = [&](const Poly& p) {
    linalg::SparseColumn col;
    for (const auto& [e, c] : p.terms()) col.emplace_back(row_of.at(e), c);
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return col;
  };
  linalg::SparseMatrix m;
  m.rows = row_of.size();
  for (const auto& p : products) m.columns.push_back(column_of(p));
  std::vector<linalg::Vector> rhs;
  for (const auto& h : hs) {
    linalg::Vector v(m.rows, Rational(0));
    for (const auto& [e, c] : h.terms()) v[row_of.at(e)] = c;
    rhs.push_back(std::move(v));
  }
  const auto sols = linalg::solve(m, rhs, cfg);

  std::vector<Membership> out(hs.size());
  for (std::size_t q = 0; q < hs.size(); ++q) {
    if (!sols[q]) {
      out[q].value = Tri::unknown;
      out[q].reason = "no cofactors within the bounds";
      continue;
    }
    std::vector<Poly> cof(gens.size(), Poly(ring));
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& x = (*sols[q])[c];
      if (sgn(x) != 0) cof[c / mults.size()] += mults[c % mults.size()] * x;
    }
    Poly check(ring);
    for (std::size_t i = 0; i < gens.size(); ++i) check += cof[i] * gens[i];
    if (!(check == hs[q])) throw Error("membership certificate does not re-verify");
    out[q].value = Tri::yes;
    out[q].cofactors = std::move(cof);
    out[q].reason = "cofactors found";
  }
  return out;
}

std::vector<Poly> nonzero(const std::vector<Poly>& gens) {
  std::vector<Poly> out;
  for (const auto& g : gens)
    if (!g.is_zero()) out.push_back(g);
  if (out.empty()) throw DomainError("membership in an ideal without nonzero generators");
  return out;
}

}  // namespace

Membership ideal_membership_bounded(const std::vector<Poly>& gens_in, const Poly& h, Bounds cofactor_bound,
                                    const linalg::Config& cfg) {
  const auto gens = nonzero(gens_in);
  if (gens.size() == 1) return principal_membership(gens.front(), h);
  const DegreeSlice slice(gens.front().ring(), cofactor_bound);
  std::vector<Poly> mults;
  for (const auto& e : slice.basis()) mults.push_back(Poly::monomial(slice.ring(), e));
  return span_membership(gens, mults, {h}, cfg).front();
}

std::vector<Membership> kernel_membership(const std::vector<Poly>& gens_in, const std::vector<Poly>& hs,
                                          const std::vector<Poly>& multipliers, const linalg::Config& cfg) {
  const auto gens = nonzero(gens_in);
  if (hs.empty()) return {};
  if (gens.size() == 1) {
    std::vector<Membership> out;
    for (const auto& h : hs) out.push_back(principal_membership(gens.front(), h));
    return out;
  }
  const auto unit = std::find_if(gens.begin(), gens.end(), [](const Poly& g) { return is_unit(g); });
  if (unit != gens.end()) {
    std::vector<Membership> out;
    for (const auto& h : hs) {
      Membership m;
      m.value = Tri::yes;
      m.cofactors.assign(gens.size(), Poly(h.ring()));
      m.cofactors[static_cast<std::size_t>(unit - gens.begin())] = h * (Rational(1) / unit->constant_term());
      m.reason = "the ideal contains a unit";
      out.push_back(std::move(m));
    }
    return out;
  }
  if (multipliers.empty()) return std::vector<Membership>(hs.size(), Membership{Tri::unknown, {}, "no multipliers"});
  return span_membership(gens, multipliers, hs, cfg);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

VerifyReport verify_image_ideal(const Derivation& d, std::size_t n, const std::vector<Poly>& predicted, Bounds bounds,
                                const std::vector<Poly>& probes, const linalg::Config& cfg) {
  if (predicted.empty()) throw DomainError("no predicted generators");
  VerifyReport rep;
  rep.source = bounds;
  for (const auto& g : predicted) {
    if (!verify_kernel_element(d, g)) {
      rep.forward = rep.overall = Verdict::fail;
      rep.witnesses.push_back(g);
      rep.notes.push_back("predicted generator " + g.str() + " is not in the kernel");
      return rep;
    }
  }
  const DegreeSlice source(d.ring(), bounds);
  const LinearMapMatrix mn = matrix_of_power(d, n, source);
  rep.target = mn.target.bounds();

  // Forward: preimages of the predicted generators and the probes.
  std::vector<Poly> wanted = predicted;
  wanted.insert(wanted.end(), probes.begin(), probes.end());
  std::vector<linalg::Vector> rhs;
  std::vector<std::size_t> rhs_of;
  for (std::size_t i = 0; i < wanted.size(); ++i) {
    if (auto v = mn.target.coords(wanted[i])) {
      rhs_of.push_back(i);
      rhs.push_back(std::move(*v));
    }
  }
  std::vector<std::optional<Poly>> preimage(wanted.size());
  const auto sols = linalg::solve(mn.entries, rhs, cfg);
  for (std::size_t q = 0; q < rhs.size(); ++q) {
    if (!sols[q]) continue;
    Poly x = source.poly(*sols[q]);
    if (!(d.iterate(x, n) == wanted[rhs_of[q]])) throw Error("preimage does not re-verify");
    preimage[rhs_of[q]] = std::move(x);
  }
  rep.preimages.assign(preimage.begin(), preimage.begin() + static_cast<long>(predicted.size()));
  rep.forward = std::all_of(rep.preimages.begin(), rep.preimages.end(), [](const auto& p) { return p.has_value(); })
                    ? Verdict::pass
                    : Verdict::inconclusive;
  for (std::size_t i = 0; i < predicted.size(); ++i)
    if (!rep.preimages[i]) rep.notes.push_back("no preimage of " + predicted[i].str() + " within the bounds");

  // Backward: certified probes first, then the oracle basis of I_n on the slice.
  const KernelImage ki = kernel_and_image_basis(d, n, source, cfg);
  rep.kernel_dim = ki.kernel.size();
  rep.image_dim = ki.image.size();
  std::vector<Poly> hs;
  for (std::size_t i = predicted.size(); i < wanted.size(); ++i) {
    if (preimage[i] && verify_kernel_element(d, wanted[i]))
      hs.push_back(wanted[i]);
    else
      rep.notes.push_back("probe " + wanted[i].str() + " is not certified in I_n within the bounds");
  }
  hs.insert(hs.end(), ki.image.begin(), ki.image.end());
  const auto members = kernel_membership(predicted, hs, ki.kernel, cfg);
  bool any_no = false, all_yes = true;
  for (std::size_t q = 0; q < hs.size(); ++q) {
    if (members[q].value == Tri::no) {
      any_no = true;
      rep.witnesses.push_back(hs[q]);
    } else if (members[q].value == Tri::unknown) {
      rep.undecided.push_back(hs[q]);
    }
    all_yes = all_yes && members[q].value == Tri::yes;
  }
  rep.backward = any_no ? Verdict::fail : (all_yes ? Verdict::pass : Verdict::inconclusive);
  if (rep.forward == Verdict::fail || rep.backward == Verdict::fail)
    rep.overall = Verdict::fail;
  else if (rep.forward == Verdict::pass && rep.backward == Verdict::pass)
    rep.overall = Verdict::pass;
  else
    rep.overall = Verdict::inconclusive;
  return rep;
}

}  // namespace lnd::oracle
