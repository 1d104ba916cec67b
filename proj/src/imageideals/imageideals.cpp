#include <algorithm>
#include <functional>
#include <map>

#include "lnd/imageideals.hpp"

namespace lnd {

namespace {

std::string fresh_name(const std::vector<std::string>& taken, const std::string& base) {
  std::string name = base;
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
  return name;
}

Rational factorial(std::size_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

bool all_images_in_r(const Derivation& d) {
  return std::all_of(d.images().begin(), d.images().end(), [](const Poly& p) { return p.in_coefficient_ring(); });
}

Poly var(const Derivation& d, std::size_t i) { return Poly::variable(d.ring(), d.ring()->var_index(i)); }

}  // namespace

KernelPresentation kernel_generator(const Derivation& d) {
  const auto rep = classify(d);
  KernelPresentation out;
  if (rep.nice2) {
    out.generators.push_back(d.image(1) * var(d, 0) - d.image(0) * var(d, 1));
  } else if (rep.quasi) {
    const auto& q = *rep.quasi;
    out.generators.push_back(q.b * var(d, q.second) + q.f);
  } else {
    throw Unsupported("kernel generators are computed for two-variable nice or quasi-nice derivations only");
  }
  out.certified = std::all_of(out.generators.begin(), out.generators.end(),
                              [&](const Poly& g) { return verify_kernel_element(d, g); });
  if (!out.certified) throw Error("kernel generator does not re-verify");
  return out;
}

std::uint32_t min_exponent(std::uint32_t j, std::uint32_t d) {
  if (d == 0) throw DomainError("min_exponent needs d >= 1");
  return j - j / d;
}

const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::trivial:
      return "trivial";
    case Theorem::slice:
      return "slice";
    case Theorem::inice:
      return "inice";
    case Theorem::quasi2var:
      return "2varquasi";
    case Theorem::quasi2var_pid:
      return "2varquasi_PID";
    case Theorem::pid3var:
      return "pid-3var";
    case Theorem::oracle_only:
      return "oracle-only";
  }
  return "oracle-only";
}

const char* to_string(StrictnessKind k) {
  switch (k) {
    case StrictnessKind::nice_able:
      return "nice-able";
    case StrictnessKind::strictly_1_quasi:
      return "strictly-1-quasi";
    case StrictnessKind::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

bool ImageIdealResult::fully_certified() const {
  return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.holds == Tri::yes; });
}

// --- strictness -------------------------------------------------------------------

StrictnessResult strictness_decompose(const Derivation& d, bool assert_irreducible) {
  const auto rep = classify(d);
  if (!rep.quasi) throw Unsupported("strictness is decided for the two-variable quasi-nice shape only");
  const auto& q = *rep.quasi;
  const auto& ring = d.ring();
  const std::size_t x1 = ring->var_index(q.first);
  StrictnessResult out{StrictnessKind::undetermined, Poly(ring), Poly(ring), std::nullopt, false, {}};
  if (is_unit(q.b)) {
    out.v = q.f * (Rational(1) / q.b.constant_term());
  } else {
    const auto coeffs = q.f.coefficients_in(x1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      const auto e = static_cast<std::uint32_t>(k);
      if (ring->num_params() <= 1) {
        auto [quot, rem] = divide(coeffs[k], q.b);
        out.u += rem.shift(x1, e);
        out.v += quot.shift(x1, e);
      } else if (auto quot = divide_exact(coeffs[k], q.b)) {
        out.v += quot->shift(x1, e);
      } else {
        out.u += coeffs[k].shift(x1, e);
      }
    }
  }
  if (!(out.u + q.b * out.v == q.f)) throw Error("strictness decomposition does not re-verify");
  if (out.u.degree_in(x1) <= 1) {
    Poly x2p = var(d, q.second) + out.v;
    if (!d.iterate(x2p, 2).is_zero()) throw Error("nice coordinate does not re-verify");
    out.kind = StrictnessKind::nice_able;
    out.new_coordinate = std::move(x2p);
    out.certified = true;
    out.reason = "deg u <= 1; D is nice in the coordinates (" + ring->name(x1) + ", " +
                 out.new_coordinate->str() + ")";
    return out;
  }
  const bool b_prime = ring->num_params() <= 1 || assert_irreducible || q.b.total_degree() == 1;
  if (b_prime) {
    out.kind = StrictnessKind::strictly_1_quasi;
    out.certified = true;
    out.reason = "deg u = " + std::to_string(out.u.degree_in(x1)) + " >= 2";
  } else {
    out.kind = StrictnessKind::undetermined;
    out.reason = "deg u >= 2 but " + q.b.str() + " is not known to be irreducible; the decomposition is heuristic";
  }
  return out;
}

// --- slices -----------------------------------------------------------------------

std::optional<Poly> slice_construct(const Derivation& d, oracle::Bounds bounds, const FpfOptions& fpf) {
  Tri free = Tri::unknown;
  try {
    free = is_fixed_point_free(d, fpf).value;
  } catch (const Error&) {
    free = Tri::unknown;
  }
  if (free == Tri::no) throw DomainError("derivation is not fixed point free");
  const auto& ring = d.ring();
  if (all_images_in_r(d)) {
    const auto u = unit_ideal_in_coefficients(d.images(), fpf.bezout_degree);
    if (u.value == Tri::yes) {
      Poly s(ring);
      for (std::size_t i = 0; i < d.num_vars(); ++i) s += u.bezout[i] * var(d, i);
      if (!(d.apply(s) == Poly::constant(ring, 1))) throw Error("slice does not re-verify");
      return s;
    }
  }
  const oracle::DegreeSlice source(ring, bounds);
  const auto m = oracle::matrix_of_power(d, 1, source);
  const auto rhs = m.target.coords(Poly::constant(ring, 1));
  const auto sol = linalg::solve(m.entries, {*rhs});
  if (!sol.front()) return std::nullopt;
  Poly s = source.poly(*sol.front());
  if (!(d.apply(s) == Poly::constant(ring, 1))) throw Error("slice does not re-verify");
  return s;
}

// --- three variables over a PID ------------------------------------------------------

Poly Nice3Reduction::to_original(const Poly& p) const {
  const auto& target = coordinates[0].ring();
  std::vector<Poly> images;
  const auto& r2 = *reduced_ring;
  for (std::size_t i = 0; i + 1 < r2.num_params(); ++i) images.push_back(Poly::variable(target, r2.params()[i]));
  images.push_back(coordinates[0]);
  images.push_back(coordinates[1]);
  images.push_back(coordinates[2]);
  return map_variables(p, target, images);
}

namespace {

std::uint32_t max_param_degree(const std::array<Poly, 3>& v) {
  std::uint32_t m = 0;
  for (const auto& p : v) m = std::max(m, p.param_degree());
  return m;
}

std::optional<std::array<Poly, 3>> find_syzygy(const Derivation& d, std::uint32_t deg) {
  const auto& ring = d.ring();
  const auto monos = monomials_within(*ring, deg, 0);
  std::vector<Poly> products;
  for (std::size_t i = 0; i < 3; ++i)
    for (const auto& mono : monos) products.push_back(Poly::monomial(ring, mono) * d.image(i));
  std::map<Exponent, std::size_t, GrlexLess> row_of;
  for (const auto& p : products)
    for (const auto& t : p.terms()) row_of.emplace(t.first, 0);
  std::size_t r = 0;
  for (auto& [e, idx] : row_of) idx = r++;
  linalg::SparseMatrix m;
  m.rows = row_of.size();
  for (const auto& p : products) {
    linalg::SparseColumn col;
    for (const auto& [e, c] : p.terms()) col.emplace_back(row_of.at(e), c);
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    m.columns.push_back(std::move(col));
  }
  std::optional<std::array<Poly, 3>> best;
  for (const auto& v : linalg::nullspace(m)) {
    std::array<Poly, 3> s{Poly(ring), Poly(ring), Poly(ring)};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < monos.size(); ++k)
        if (sgn(v[i * monos.size() + k]) != 0) s[i] += Poly::monomial(ring, monos[k], v[i * monos.size() + k]);
    std::vector<Poly> nz;
    for (const auto& p : s)
      if (!p.is_zero()) nz.push_back(p);
    const Poly g = multivariate_gcd(nz);
    for (auto& p : s) p = *divide_exact(p, g);
    if (!best || max_param_degree(s) < max_param_degree(*best)) best = s;
  }
  return best;
}

Poly det3(const std::array<std::array<Poly, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

Nice3Reduction nice3var_reduce(const Derivation& d, std::uint32_t degree_cap) {
  const auto& ring = d.ring();
  if (d.num_vars() != 3) throw Unsupported("nice3var_reduce needs three variables");
  if (ring->num_params() > 1) throw Unsupported("nice3var_reduce needs a coefficient ring with at most one parameter");
  for (std::size_t i = 0; i < 3; ++i)
    if (!d.iterate(d.image(i), 1).is_zero()) throw Unsupported("derivation is not nice");
  if (!is_unit(multivariate_gcd(d.images()))) throw DomainError("derivation is not irreducible");

  std::uint32_t start = 1;
  for (const auto& img : d.images()) start = std::max(start, img.param_degree());
  std::optional<std::array<Poly, 3>> syz;
  for (std::uint32_t deg = start;; deg = std::min(deg * 2, degree_cap)) {
    syz = find_syzygy(d, deg);
    if (syz || deg >= degree_cap) break;
  }
  if (!syz) throw Unsupported("no syzygy within degree " + std::to_string(degree_cap));
  const auto& [a, b, c] = *syz;
  if (!(a * d.image(0) + b * d.image(1) + c * d.image(2)).is_zero()) throw Error("syzygy does not re-verify");

  const Poly one = Poly::constant(ring, 1);
  const Poly zero(ring);
  std::array<std::array<Poly, 3>, 3> mat{{{a, b, c}, {zero, one, zero}, {zero, zero, one}}};
  if (b.is_zero() && c.is_zero()) {
    if (!is_unit(a)) throw DomainError("syzygy is not unimodular");
  } else {
    const auto bc = extended_euclid(b, c);
    const Poly& g = bc.gcd;
    const auto ag = extended_euclid(a, g);
    if (!is_unit(ag.gcd)) throw DomainError("syzygy is not unimodular");
    const Poly gamma = ag.alpha * (Rational(1) / ag.gcd.constant_term());
    const Poly delta = ag.beta * (Rational(1) / ag.gcd.constant_term());
    mat[1] = {-delta, gamma * *divide_exact(b, g), gamma * *divide_exact(c, g)};
    mat[2] = {zero, -bc.beta, bc.alpha};
  }
  const Poly det = det3(mat);
  if (!is_unit(det)) throw DomainError("completed matrix is not invertible over R");
  const Rational inv_det = Rational(1) / det.constant_term();
  // inverse = adjugate / det
  std::array<std::array<Poly, 3>, 3> inv{{{zero, zero, zero}, {zero, zero, zero}, {zero, zero, zero}}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (mat[r0][c0] * mat[r1][c1] - mat[r0][c1] * mat[r1][c0]) * inv_det;
    }
  }

  std::array<Poly, 3> coords{zero, zero, zero};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t k = 0; k < 3; ++k) coords[r] += mat[r][k] * var(d, k);

  std::vector<std::string> taken = ring->params();
  taken.insert(taken.end(), ring->vars().begin(), ring->vars().end());
  const auto un = fresh_name(taken, "U");
  taken.push_back(un);
  const auto vn = fresh_name(taken, "V");
  taken.push_back(vn);
  const auto wn = fresh_name(taken, "W");
  std::vector<std::string> params2 = ring->params();
  params2.push_back(un);
  auto ring2 = PolyRing::make(params2, {vn, wn});

  // X_i = sum_j inv[i][j] * (U, V, W)_j in the reduced ring.
  std::vector<Poly> to_reduced;
  for (const auto& p : ring->params()) to_reduced.push_back(Poly::variable(ring2, p));
  const std::array<Poly, 3> uvw{Poly::variable(ring2, un), Poly::variable(ring2, vn), Poly::variable(ring2, wn)};
  for (std::size_t i = 0; i < 3; ++i) {
    Poly x(ring2);
    for (std::size_t j = 0; j < 3; ++j) x += inv[i][j].embed(ring2) * uvw[j];
    to_reduced.push_back(std::move(x));
  }
  const Poly f = map_variables(d.apply(coords[1]), ring2, to_reduced);
  const Poly g = map_variables(d.apply(coords[2]), ring2, to_reduced);
  if (!f.in_coefficient_ring() || !g.in_coefficient_ring())
    throw DomainError("DV and DW do not lie in R[U]; the reduction failed");
  if (!is_unit(gcd(f, g))) throw DomainError("DV and DW have a common factor in R[U]");

  Nice3Reduction out{*syz, mat, coords, ring2, Derivation(ring2, {f, g}), {}};
  const Poly kernel2 = g * uvw[1] - f * uvw[2];
  out.kernel.generators = {coords[0], out.to_original(kernel2)};
  out.kernel.certified = std::all_of(out.kernel.generators.begin(), out.kernel.generators.end(),
                                     [&](const Poly& p) { return verify_kernel_element(d, p); });
  if (!out.kernel.certified) throw Error("kernel generators do not re-verify");
  return out;
}

// --- image ideals -------------------------------------------------------------------

namespace {

/// Certificates from the top degree ideal of (S_1 - X, S_2 - Y, Z - u) with
/// u = f_2 X - f_1 Y.
void inice_certificate(const Poly& f1, const Poly& f2, const std::vector<std::string>& names,
                       ImageIdealResult& res) {
  const auto& params = f1.ring()->params();
  std::vector<std::string> taken = params;
  taken.insert(taken.end(), names.begin(), names.end());
  const auto s1 = fresh_name(taken, "S1");
  taken.push_back(s1);
  const auto s2 = fresh_name(taken, "S2");
  taken.push_back(s2);
  const auto z = fresh_name(taken, "Z");
  auto ring = PolyRing::make(params, {names[0], names[1], s1, s2, z});
  const Poly x = Poly::variable(ring, names[0]), y = Poly::variable(ring, names[1]);
  const Poly u = f2.embed(ring) * x - f1.embed(ring) * y;
  const std::vector<Poly> gens{Poly::variable(ring, s1) - x, Poly::variable(ring, s2) - y,
                               Poly::variable(ring, z) - u};
  const WeightedDegree lambda(ring, {{names[0], 1}, {names[1], 1}, {s1, 1}, {s2, 1}, {z, 0}});
  try {
    const auto top = top_degree_ideal(lambda, gens);
    std::string shown;
    for (const auto& g : top.ideal.generators) shown += (shown.empty() ? "" : ", ") + g.str();
    res.certificates.push_back({"top-degree-ideal", Tri::yes, "(" + shown + ")"});
    const auto prime = prime_after_elimination(top.ideal.generators);
    res.certificates.push_back({"primality", prime.value, prime.reason});
  } catch (const DomainError& e) {
    res.certificates.push_back({"top-degree-ideal", Tri::unknown, e.what()});
  }
}

/// Certificates from the top degree ideal of (S - X_1, Z - bX_2 - f(X_1)).
void quasi_certificate(const Derivation& d, const QuasiData& q, ImageIdealResult& res) {
  const auto& ring = d.ring();
  const auto& n1 = ring->vars()[q.first];
  const auto& n2 = ring->vars()[q.second];
  std::vector<std::string> taken = ring->params();
  taken.insert(taken.end(), ring->vars().begin(), ring->vars().end());
  const auto s = fresh_name(taken, "S");
  taken.push_back(s);
  const auto z = fresh_name(taken, "Z");
  auto cring = PolyRing::make(ring->params(), {n1, n2, s, z});
  const Poly x1 = Poly::variable(cring, n1), x2 = Poly::variable(cring, n2);
  const std::vector<Poly> gens{Poly::variable(cring, s) - x1,
                               Poly::variable(cring, z) - q.b.embed(cring) * x2 - q.f.embed(cring)};
  const WeightedDegree lambda(cring, {{n1, 1}, {n2, q.d}, {s, 1}, {z, 0}});
  try {
    const auto top = top_degree_ideal(lambda, gens);
    std::string shown;
    for (const auto& g : top.ideal.generators) shown += (shown.empty() ? "" : ", ") + g.str();
    res.certificates.push_back({"top-degree-ideal", Tri::yes, "(" + shown + ")"});
    const auto prime = prime_after_elimination(top.ideal.generators);
    res.certificates.push_back({"primality", prime.value, prime.reason});
  } catch (const DomainError& e) {
    res.certificates.push_back({"top-degree-ideal", Tri::unknown, e.what()});
  }
}

/// Nice two-variable formula in coordinates (x, y) of B with Dx = f1, Dy = f2 in the
/// coefficient ring: generators f1^i f2^(n-i), preimages x^i y^(n-i).
void nice2_generators(const Poly& x, const Poly& y, const Poly& f1, const Poly& f2,
                      std::size_t n, ImageIdealResult& res) {
  for (std::size_t i = n + 1; i-- > 0;) {
    res.generators.push_back(f1.pow(static_cast<unsigned>(i)) * f2.pow(static_cast<unsigned>(n - i)));
    res.preimages.push_back(x.pow(static_cast<unsigned>(i)) * y.pow(static_cast<unsigned>(n - i)));
    res.factors.push_back(factorial(n));
  }
}

void slice_branch(const Derivation& d, std::size_t n, const ImageIdealOptions& opts, ImageIdealResult& res,
                  std::optional<Poly> s = std::nullopt) {
  res.theorem = Theorem::slice;
  res.generators = {Poly::constant(d.ring(), 1)};
  if (!s) {
    FpfOptions fo;
    fo.factored_b = opts.factored_b;
    fo.bezout_degree = opts.bezout_degree;
    fo.assert_irreducible = opts.assert_irreducible;
    s = slice_construct(d, opts.bounds, fo);
  }
  if (s) {
    res.certificates.push_back({"slice", Tri::yes, "Ds = 1 for s = " + s->str()});
    res.preimages = {s->pow(static_cast<unsigned>(n)) * (Rational(1) / factorial(n))};
    res.factors = {Rational(1)};
  } else {
    res.certificates.push_back({"slice", Tri::unknown, "no slice found within the bounds"});
  }
}

void oracle_only(const Derivation& d, std::size_t n, const ImageIdealOptions& opts, ImageIdealResult& res) {
  res.theorem = Theorem::oracle_only;
  const oracle::DegreeSlice source(d.ring(), opts.bounds);
  const auto ki = oracle::kernel_and_image_basis(d, n, source, opts.la);
  std::vector<Poly> basis;
  for (const auto& p : ki.image) basis.push_back(normalize_unit(p));
  std::sort(basis.begin(), basis.end(), canonical_less);
  std::vector<Poly> kept;
  for (const auto& h : basis) {
    if (!kept.empty() && oracle::kernel_membership(kept, {h}, ki.kernel, opts.la).front().value == Tri::yes) continue;
    kept.push_back(h);
  }
  if (kept.empty()) throw Unsupported("the oracle found no element of I_n within the bounds");
  res.generators = std::move(kept);
  res.notes.push_back("generators read off the oracle slice at bounds (" + std::to_string(opts.bounds.param) + "," +
                      std::to_string(opts.bounds.var) + "); a lower approximation of I_n");
}

void finalize(const Derivation& d, const ImageIdealOptions& opts, ImageIdealResult& res) {
  // normalize, keeping preimage factors consistent
  const bool with_pre = res.preimages.size() == res.generators.size();
  std::vector<std::size_t> order(res.generators.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
    const Rational c = normalization_factor(res.generators[i]);
    res.generators[i] *= c;
    if (with_pre) res.factors[i] /= c;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return canonical_less(res.generators[x], res.generators[y]); });
  std::vector<Poly> gens;
  std::vector<Poly> pres;
  std::vector<Rational> facs;
  for (auto i : order) {
    if (!gens.empty() && gens.back() == res.generators[i]) continue;
    gens.push_back(res.generators[i]);
    if (with_pre) {
      pres.push_back(res.preimages[i]);
      facs.push_back(res.factors[i]);
    }
  }
  res.generators = std::move(gens);
  res.preimages = std::move(pres);
  res.factors = std::move(facs);

  for (const auto& g : res.generators)
    if (!verify_kernel_element(d, g)) throw Error("image ideal generator " + g.str() + " is not in the kernel");
  for (std::size_t i = 0; i < res.preimages.size(); ++i)
    if (!(d.iterate(res.preimages[i], res.n) == res.generators[i] * res.factors[i]))
      throw Error("preimage identity fails for " + res.generators[i].str());

  if (res.theorem == Theorem::oracle_only || !res.fully_certified()) {
    // Refine the slice while the preimage search is the open direction.
    oracle::Bounds b = opts.bounds;
    for (std::size_t step = 0;; ++step, ++b.var) {
      try {
        res.oracle = oracle::verify_image_ideal(d, res.n, res.generators, b, {}, opts.la);
      } catch (const DimensionCapExceeded& e) {
        if (!res.oracle) throw;
        res.notes.push_back(std::string("oracle refinement stopped: ") + e.what());
        break;
      }
      if (res.oracle->overall != oracle::Verdict::inconclusive || res.oracle->forward == oracle::Verdict::pass ||
          step >= 2 * res.n)
        break;
    }
    if (res.theorem != Theorem::oracle_only) {
      if (res.oracle->overall == oracle::Verdict::pass) {
        res.notes.push_back("not every hypothesis was machine-checked; the formula is confirmed by the oracle");
      } else {
        res.notes.push_back(std::string("not every hypothesis was machine-checked and the oracle reports ") +
                            oracle::to_string(res.oracle->overall) + "; " + to_string(res.theorem) +
                            " downgraded to oracle-only");
        res.theorem = Theorem::oracle_only;
      }
    }
  }
}

void quasi_dispatch(const Derivation& d, const StructureReport& rep, std::size_t n, const ImageIdealOptions& opts,
                    ImageIdealResult& res) {
  const auto& q = *rep.quasi;
  const auto& ring = d.ring();
  const auto sd = strictness_decompose(d, opts.assert_irreducible);
  res.certificates.push_back({"strictness", sd.kind == StrictnessKind::undetermined ? Tri::unknown : Tri::yes,
                              std::string(to_string(sd.kind)) + ": " + sd.reason});
  if (sd.kind == StrictnessKind::nice_able) {
    const Poly x = var(d, q.first);
    const Poly& y = *sd.new_coordinate;
    const Poly f1 = d.apply(x), f2 = d.apply(y);
    const auto u = unit_ideal_in_coefficients({f1, f2}, opts.bezout_degree);
    if (u.value == Tri::yes) {
      slice_branch(d, n, opts, res, u.bezout[0] * x + u.bezout[1] * y);
      return;
    }
    res.certificates.push_back({"not fixed point free", u.value == Tri::no ? Tri::yes : Tri::unknown, u.reason});
    res.theorem = Theorem::inice;
    res.kernel = KernelPresentation{{f2 * x - f1 * y}, verify_kernel_element(d, f2 * x - f1 * y)};
    nice2_generators(x, y, f1, f2, n, res);
    inice_certificate(f1, f2, {ring->vars()[q.first], ring->vars()[q.second]}, res);
    return;
  }
  if (sd.kind == StrictnessKind::undetermined) throw Unsupported("strictness undetermined: " + sd.reason);
  res.kernel = kernel_generator(d);
  res.d = q.d;
  res.m = min_exponent(static_cast<std::uint32_t>(n), q.d);
  const std::size_t k = ring->num_params();
  if (k == 1) {
    std::vector<PrimePower> factors;
    if (opts.factored_b) {
      factors = *opts.factored_b;
    } else if (auto f = factor_smalldeg(q.b)) {
      factors = *f;
      res.notes.push_back("factorization of " + q.b.str() + " computed by the rational-root test");
    } else {
      throw DomainError("missing factorization of " + q.b.str());
    }
    validate_factorization(q.b, factors);
    std::string shown;
    for (const auto& f : factors)
      shown += (shown.empty() ? "" : " * ") + ("(" + f.prime.str() + ")^" + std::to_string(f.multiplicity)) +
               (f.asserted_irreducible ? " [asserted]" : "");
    res.certificates.push_back({"factorization", Tri::yes, shown});
    Poly prod = Poly::constant(ring, 1);
    for (const auto& f : factors) {
      if (!localized_fpf(d, f.prime)) {
        res.failing_primes.push_back(normalize_unit(f.prime));
        prod *= f.prime.pow(f.multiplicity);
      }
    }
    if (res.failing_primes.empty()) {
      res.m.reset();
      res.d.reset();
      slice_branch(d, n, opts, res);
      return;
    }
    res.theorem = Theorem::quasi2var_pid;
    res.certificates.push_back({"not fixed point free", Tri::yes, "D_p is not fixed point free for " +
                                                                      std::to_string(res.failing_primes.size()) +
                                                                      " prime(s)"});
    res.generators = {prod.pow(*res.m)};
  } else {
    const bool b_prime = opts.assert_irreducible || q.b.total_degree() == 1;
    if (!b_prime) throw Unsupported(q.b.str() + " must be irreducible; assert it explicitly");
    res.theorem = Theorem::quasi2var;
    res.certificates.push_back({"irreducible b", Tri::yes,
                                opts.assert_irreducible ? "asserted by the caller" : "total degree 1"});
    res.generators = {q.b.pow(*res.m)};
  }
  quasi_certificate(d, q, res);
}

}  // namespace

ImageIdealResult image_ideal(const Derivation& d, std::size_t n, const ImageIdealOptions& opts) {
  ImageIdealResult res;
  res.n = n;
  const auto& ring = d.ring();
  if (n == 0) {
    res.theorem = Theorem::trivial;
    res.generators = {Poly::constant(ring, 1)};
    res.preimages = {Poly::constant(ring, 1)};
    res.factors = {Rational(1)};
    return res;
  }
  const auto rep = classify(d, opts.iteration_cap);
  if (rep.lnd == Tri::no) throw Unsupported("derivation is not locally nilpotent");
  if (rep.lnd == Tri::unknown) throw Unsupported("local nilpotence undecided within the iteration cap");
  res.certificates.push_back({"lnd", Tri::yes, "deg_D of every variable is finite"});
  if (!rep.irreducible) throw DomainError("derivation is not irreducible: images share the factor " + rep.images_gcd->str());
  res.certificates.push_back({"irreducible", Tri::yes, "gcd of the images is 1"});

  const std::size_t nv = d.num_vars();
  if (all_images_in_r(d) && rep.classification == Classification::nice) {
    const auto u = unit_ideal_in_coefficients(d.images(), opts.bezout_degree);
    if (u.value == Tri::yes) {
      Poly s(ring);
      for (std::size_t i = 0; i < nv; ++i) s += u.bezout[i] * var(d, i);
      slice_branch(d, n, opts, res, s);
      finalize(d, opts, res);
      return res;
    }
    if (nv == 2) {
      res.certificates.push_back({"not fixed point free", u.value == Tri::no ? Tri::yes : Tri::unknown, u.reason});
      res.theorem = Theorem::inice;
      res.kernel = kernel_generator(d);
      nice2_generators(var(d, 0), var(d, 1), d.image(0), d.image(1), n, res);
      inice_certificate(d.image(0), d.image(1), ring->vars(), res);
      finalize(d, opts, res);
      return res;
    }
  }
  if (nv == 2 && rep.quasi) {
    quasi_dispatch(d, rep, n, opts, res);
    finalize(d, opts, res);
    return res;
  }
  if (nv == 3 && rep.classification == Classification::nice) {
    if (ring->num_params() >= 2) {
      res.notes.push_back("the three-variable formula needs a principal ideal domain as coefficient ring");
      oracle_only(d, n, opts, res);
      finalize(d, opts, res);
      return res;
    }
    const auto red = nice3var_reduce(d, opts.syzygy_degree_cap);
    res.kernel = red.kernel;
    std::string shown;
    for (const auto& p : red.syzygy) shown += (shown.empty() ? "" : ", ") + p.str();
    res.certificates.push_back({"syzygy", Tri::yes, "(" + shown + ")"});
    res.certificates.push_back({"unimodular completion", Tri::yes,
                                "U = " + red.coordinates[0].str() + ", V = " + red.coordinates[1].str() +
                                    ", W = " + red.coordinates[2].str()});
    const Poly& f = red.reduced.image(0);
    const Poly& g = red.reduced.image(1);
    const auto& r2 = red.reduced_ring;
    const Poly v = Poly::variable(r2, r2->vars()[0]), w = Poly::variable(r2, r2->vars()[1]);
    const auto u = unit_ideal_in_coefficients({f, g}, opts.bezout_degree);
    if (u.value == Tri::yes) {
      slice_branch(d, n, opts, res, red.to_original(u.bezout[0] * v + u.bezout[1] * w));
      finalize(d, opts, res);
      return res;
    }
    res.certificates.push_back({"not fixed point free", u.value == Tri::no ? Tri::yes : Tri::unknown, u.reason});
    res.theorem = Theorem::pid3var;
    for (std::size_t i = n + 1; i-- > 0;) {
      const auto e1 = static_cast<unsigned>(i), e2 = static_cast<unsigned>(n - i);
      res.generators.push_back(red.to_original(f.pow(e1) * g.pow(e2)));
      res.preimages.push_back(red.to_original(v.pow(e1) * w.pow(e2)));
      res.factors.push_back(factorial(n));
    }
    inice_certificate(f, g, r2->vars(), res);
    finalize(d, opts, res);
    return res;
  }
  throw Unsupported(std::string("no image ideal formula for a derivation classified as ") +
                    to_string(rep.classification) + " in " + std::to_string(nv) + " variables");
}

}  // namespace lnd
