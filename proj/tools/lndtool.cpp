// lndtool: image ideals of locally nilpotent derivations.
//
//   lndtool check problem.lnd
//   lndtool image-ideal problem.lnd --n 2 --json
//   lndtool verify problem.lnd --n 1 --bounds 2,2
//   lndtool examples --name tparam
//
// Exit codes: 0 PASS, 1 FAIL, 2 INCONCLUSIVE or unsupported, 3 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lnd/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

lnd::oracle::Bounds parse_bounds(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--bounds expects p,v");
  std::size_t used = 0;
  const auto p = std::stoul(s.substr(0, comma), &used);
  if (used != comma) throw std::invalid_argument("--bounds expects p,v");
  const auto rest = s.substr(comma + 1);
  const auto v = std::stoul(rest, &used);
  if (used != rest.size()) throw std::invalid_argument("--bounds expects p,v");
  return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(v)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Image ideals of locally nilpotent derivations"};
  app.require_subcommand(1);

  std::string file;
  std::size_t n = 1;
  std::string bounds;
  std::size_t cap = 0;
  bool json = false;
  std::uint64_t seed = 0;
  bool assert_irreducible = false;
  std::vector<std::string> predicted;
  std::string name;

  auto common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("file", file, "problem file, '-' for stdin")->required();
    sub->add_option("--n", n, "power of D");
    sub->add_option("--bounds", bounds, "oracle degree bounds p,v");
    sub->add_option("--cap", cap, "entry cap of a single elimination block");
    sub->add_flag("--json", json, "machine-readable report");
    sub->add_option("--seed", seed, "accepted for uniformity; every command is deterministic");
    sub->add_flag("--assert-irreducible", assert_irreducible, "treat DX1 as irreducible");
  };
  auto* check = app.add_subcommand("check", "lnd, degrees and classification");
  auto* kernel = app.add_subcommand("kernel", "kernel generators");
  auto* image = app.add_subcommand("image-ideal", "generators of I_n with certificates");
  auto* verify = app.add_subcommand("verify", "oracle check of predicted generators of I_n");
  auto* examples = app.add_subcommand("examples", "run built-in fixtures end to end");
  for (auto* s : {check, kernel, image, verify}) common(s, true);
  common(examples, false);
  verify->add_option("--predict", predicted, "predicted generator (repeatable); default from image-ideal");
  examples->add_option("--name", name, "fixture name; all fixtures when omitted");
  auto* list = examples->add_flag("--list", "list fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  lnd::cli::RunOptions opts;
  opts.n = n;
  opts.assert_irreducible = assert_irreducible;
  if (cap) opts.cap = cap;
  if (!predicted.empty()) opts.predicted = predicted;
  opts.name = name;

  try {
    if (!bounds.empty()) opts.bounds = parse_bounds(bounds);
    lnd::cli::Report report;
    if (examples->parsed()) {
      if (list->count()) {
        for (const auto& f : lnd::cli::fixtures()) std::cout << f.name << "  " << f.description << "\n";
        return 0;
      }
      report = lnd::cli::run_examples(opts);
    } else {
      const auto spec = lnd::cli::parse_problem(read_input(file));
      report = lnd::cli::run(app.get_subcommands().front()->get_name(), spec, opts);
    }
    std::cout << (json ? lnd::cli::render_json(report) : lnd::cli::render_text(report));
    return lnd::cli::exit_code(report.status);
  } catch (const lnd::ParseError& e) {
    std::cerr << (file.empty() ? "" : file + ":") << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 3;
}
