#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "lnd/cli.hpp"
#include "lnd/imageideals.hpp"

namespace lnd::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::inconclusive: return "INCONCLUSIVE";
    case Status::unsupported: return "UNSUPPORTED";
    case Status::input_error: return "INPUT-ERROR";
  }
  return "INCONCLUSIVE";
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::inconclusive:
    case Status::unsupported: return 2;
    case Status::input_error: return 3;
  }
  return 2;
}

namespace {

Status from_verdict(oracle::Verdict v) {
  switch (v) {
    case oracle::Verdict::pass: return Status::pass;
    case oracle::Verdict::fail: return Status::fail;
    case oracle::Verdict::inconclusive: return Status::inconclusive;
  }
  return Status::inconclusive;
}

std::string bounds_str(const oracle::Bounds& b) { return std::to_string(b.param) + "," + std::to_string(b.var); }

ImageIdealOptions image_options(const ProblemSpec& spec, const Problem& prob, const RunOptions& opts) {
  ImageIdealOptions o;
  o.factored_b = prob.factored_b;
  o.assert_irreducible = opts.assert_irreducible;
  if (opts.bounds) o.bounds = *opts.bounds;
  else if (spec.bounds) o.bounds = *spec.bounds;
  if (spec.iteration_cap) o.iteration_cap = *spec.iteration_cap;
  if (opts.cap) o.la.entry_cap = *opts.cap;
  else if (spec.dimension_cap) o.la.entry_cap = *spec.dimension_cap;
  return o;
}

void add(Report& r, std::string key, std::string value) { r.fields.emplace_back(std::move(key), std::move(value)); }

void run_check(const Problem& prob, const ImageIdealOptions& o, Report& r) {
  const auto& d = prob.derivation;
  const auto rep = classify(d, o.iteration_cap);
  add(r, "lnd", to_string(rep.lnd));
  for (std::size_t i = 0; i < d.num_vars(); ++i) add(r, "deg_D(" + d.ring()->vars()[i] + ")", rep.degrees[i].str());
  add(r, "irreducible", rep.irreducible ? "yes" : "no");
  if (rep.images_gcd) add(r, "images_gcd", rep.images_gcd->str());
  std::string nice;
  for (auto i : rep.nice_set) nice += (nice.empty() ? "" : " ") + d.ring()->vars()[i];
  add(r, "nice_set", nice);
  add(r, "classification", to_string(rep.classification));
  if (rep.quasi) {
    add(r, "b", rep.quasi->b.str());
    add(r, "f", rep.quasi->f.str());
    add(r, "d", std::to_string(rep.quasi->d));
  }
  if (rep.lnd == Tri::yes && d.num_vars() == 2 && (rep.quasi || rep.nice2)) {
    try {
      const auto v = is_fixed_point_free(d, {prob.factored_b, o.bezout_degree, o.assert_irreducible});
      add(r, "fixed_point_free", to_string(v.value));
      r.notes.push_back("fixed point freeness: " + v.reason);
    } catch (const Error& e) {
      r.notes.push_back(std::string("fixed point freeness not decided: ") + e.what());
    }
  }
  r.status = rep.lnd == Tri::yes ? Status::pass : rep.lnd == Tri::no ? Status::unsupported : Status::inconclusive;
  if (rep.lnd == Tri::no) r.notes.push_back("the derivation is not locally nilpotent");
}

void run_kernel(const Problem& prob, const ImageIdealOptions& o, Report& r) {
  const auto& d = prob.derivation;
  const auto rep = classify(d, o.iteration_cap);
  if (rep.lnd != Tri::yes) throw Unsupported("the derivation is not known to be locally nilpotent");
  const auto nv = d.num_vars();
  std::optional<KernelPresentation> k;
  if (nv == 2 && (rep.nice2 || rep.quasi)) {
    k = kernel_generator(d);
  } else if (nv == 3 && rep.classification == Classification::nice && d.ring()->num_params() <= 1) {
    const auto red = nice3var_reduce(d, o.syzygy_degree_cap);
    k = red.kernel;
    add(r, "U", red.coordinates[0].str());
    add(r, "V", red.coordinates[1].str());
    add(r, "W", red.coordinates[2].str());
  }
  if (k) {
    for (const auto& g : k->generators) r.generators.push_back(g.str());
    r.certificates.push_back({"D kills every generator", k->certified ? "yes" : "no", ""});
    r.status = k->certified ? Status::pass : Status::fail;
    return;
  }
  const auto slice = oracle::kernel_and_image_basis(d, 1, oracle::DegreeSlice(d.ring(), o.bounds), o.la);
  for (const auto& g : slice.kernel) r.generators.push_back(g.str());
  add(r, "slice", bounds_str(slice.target.bounds()));
  r.notes.push_back("no structural kernel presentation; listing a basis of the kernel within the degree slice");
  r.status = Status::inconclusive;
}

void run_image_ideal(const Problem& prob, const ImageIdealOptions& o, std::size_t n, Report& r) {
  const auto res = image_ideal(prob.derivation, n, o);
  for (const auto& g : res.generators) r.generators.push_back(g.str());
  for (const auto& c : res.certificates) r.certificates.push_back({c.name, to_string(c.holds), c.detail});
  add(r, "n", std::to_string(n));
  add(r, "theorem", to_string(res.theorem));
  if (res.m) add(r, "m", std::to_string(*res.m));
  if (res.d) add(r, "d", std::to_string(*res.d));
  for (const auto& p : res.failing_primes) add(r, "failing_prime", p.str());
  if (res.kernel)
    for (const auto& g : res.kernel->generators) add(r, "kernel_generator", g.str());
  for (std::size_t i = 0; i < res.preimages.size(); ++i)
    add(r, "preimage", "D^" + std::to_string(n) + "(" + res.preimages[i].str() + ") = " + res.factors[i].get_str() +
                           " * (" + res.generators[i].str() + ")");
  r.notes.insert(r.notes.end(), res.notes.begin(), res.notes.end());
  if (res.oracle) {
    add(r, "oracle", oracle::to_string(res.oracle->overall));
    add(r, "oracle_bounds", bounds_str(res.oracle->source));
    for (const auto& w : res.oracle->witnesses) r.witnesses.push_back(w.str());
  }
  if (res.oracle && res.oracle->overall == oracle::Verdict::fail) r.status = Status::fail;
  else if (res.fully_certified() || (res.oracle && res.oracle->overall == oracle::Verdict::pass)) r.status = Status::pass;
  else r.status = Status::inconclusive;
}

void run_verify(const ProblemSpec& spec, const Problem& prob, const ImageIdealOptions& o, const RunOptions& opts,
                Report& r) {
  const auto& d = prob.derivation;
  std::vector<Poly> predicted;
  if (opts.predicted) {
    for (const auto& s : *opts.predicted) predicted.push_back(parse_poly(d.ring(), s));
  } else {
    for (const auto& g : image_ideal(d, opts.n, o).generators) predicted.push_back(g);
  }
  const oracle::Bounds b = opts.bounds ? *opts.bounds : spec.bounds ? *spec.bounds : oracle::Bounds{2, 2};
  const auto rep = oracle::verify_image_ideal(d, opts.n, predicted, b, {}, o.la);
  for (const auto& g : predicted) r.generators.push_back(g.str());
  for (const auto& w : rep.witnesses) r.witnesses.push_back(w.str());
  add(r, "n", std::to_string(opts.n));
  add(r, "source_bounds", bounds_str(rep.source));
  add(r, "target_bounds", bounds_str(rep.target));
  add(r, "forward", oracle::to_string(rep.forward));
  add(r, "backward", oracle::to_string(rep.backward));
  add(r, "kernel_dim", std::to_string(rep.kernel_dim));
  add(r, "image_dim", std::to_string(rep.image_dim));
  for (std::size_t i = 0; i < rep.preimages.size(); ++i)
    if (rep.preimages[i]) add(r, "preimage", predicted[i].str() + " <- " + rep.preimages[i]->str());
  for (const auto& u : rep.undecided) r.notes.push_back("membership undecided for " + u.str());
  r.notes.insert(r.notes.end(), rep.notes.begin(), rep.notes.end());
  r.status = from_verdict(rep.overall);
}

std::string field(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.fields)
    if (k == key) return v;
  return "";
}

}  // namespace

Report run(const std::string& command, const ProblemSpec& spec, const RunOptions& opts) {
  Report r;
  r.command = command;
  r.spec_echo = print_problem(spec);
  try {
    const Problem prob = build_problem(spec);
    const auto o = image_options(spec, prob, opts);
    if (command == "check") run_check(prob, o, r);
    else if (command == "kernel") run_kernel(prob, o, r);
    else if (command == "image-ideal") run_image_ideal(prob, o, opts.n, r);
    else if (command == "verify") run_verify(spec, prob, o, opts, r);
    else throw std::invalid_argument("unknown command '" + command + "'");
  } catch (const ParseError&) {
    throw;
  } catch (const DimensionCapExceeded& e) {
    r.status = Status::inconclusive;
    r.notes.push_back(e.what());
  } catch (const Error& e) {
    r.status = Status::unsupported;
    r.notes.push_back(e.what());
  }
  return r;
}

Report run_examples(const RunOptions& opts) {
  Report r;
  r.command = "examples";
  std::vector<const Fixture*> chosen;
  if (opts.name.empty()) {
    for (const auto& f : fixtures()) chosen.push_back(&f);
  } else {
    try {
      chosen.push_back(&fixture(opts.name));
    } catch (const std::out_of_range& e) {
      r.status = Status::input_error;
      r.notes.push_back(e.what());
      return r;
    }
  }
  bool all_ok = true;
  for (const auto* f : chosen) {
    RunOptions fo = opts;
    fo.n = f->n;
    fo.name.clear();
    Report child = run(f->command, parse_problem(f->text), fo);
    child.command = f->name + ": " + f->command;
    std::vector<std::string> problems;
    if (exit_code(child.status) != f->exit_code)
      problems.push_back("exit code " + std::to_string(exit_code(child.status)) + ", expected " +
                         std::to_string(f->exit_code));
    if (!f->generators.empty() && child.generators != f->generators) problems.push_back("generators differ from expectation");
    if (!f->theorem.empty() && field(child, "theorem") != f->theorem)
      problems.push_back("theorem " + field(child, "theorem") + ", expected " + f->theorem);
    add(child, "expectation", problems.empty() ? "met" : "not met");
    for (auto& p : problems) child.notes.push_back(p);
    all_ok = all_ok && problems.empty();
    r.children.push_back(std::move(child));
  }
  r.status = all_ok ? Status::pass : Status::fail;
  return r;
}

namespace {

void render_into(const Report& r, std::ostringstream& os, const std::string& indent) {
  os << indent << "command: " << r.command << "\n";
  os << indent << "verdict: " << to_string(r.status) << "\n";
  for (const auto& [k, v] : r.fields) os << indent << k << ": " << v << "\n";
  if (!r.generators.empty()) {
    os << indent << "generators:\n";
    for (const auto& g : r.generators) os << indent << "  " << g << "\n";
  }
  if (!r.certificates.empty()) {
    os << indent << "certificates:\n";
    for (const auto& c : r.certificates)
      os << indent << "  " << c.name << ": " << c.holds << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  }
  if (!r.witnesses.empty()) {
    os << indent << "witnesses:\n";
    for (const auto& w : r.witnesses) os << indent << "  " << w << "\n";
  }
  for (const auto& n : r.notes) os << indent << "note: " << n << "\n";
  for (const auto& c : r.children) {
    os << "\n";
    render_into(c, os, indent + "  ");
  }
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["spec-echo"] = r.spec_echo;
  j["verdict"] = to_string(r.status);
  j["generators"] = r.generators;
  j["certificates"] = nlohmann::json::array();
  for (const auto& c : r.certificates) j["certificates"].push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
  j["witnesses"] = r.witnesses;
  nlohmann::json fields = nlohmann::json::array();
  for (const auto& [k, v] : r.fields) fields.push_back({{"key", k}, {"value", v}});
  j["results"] = fields;
  j["notes"] = r.notes;
  if (!r.children.empty()) {
    j["fixtures"] = nlohmann::json::array();
    for (const auto& c : r.children) j["fixtures"].push_back(to_json(c));
  }
  return j;
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  render_into(r, os, "");
  return os.str();
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace lnd::cli
