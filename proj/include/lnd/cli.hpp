#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/oracle.hpp"

namespace lnd::cli {

struct FactorSpec {
  std::string poly;
  unsigned multiplicity = 1;
  bool irreducible = false;
  bool operator==(const FactorSpec&) const = default;
};

/// A problem file. Polynomial texts are kept in canonical printed form.
///
///   # comment
///   param t
///   var X1 X2
///   D X1 = t*(1 - t)
///   D X2 = -t*X1 + 1 - t
///   factor t mult 1
///   factor 1 - t mult 1 irreducible
///   bounds 2 2
///   cap iter 64
///   cap dim 20000
struct ProblemSpec {
  std::vector<std::string> params;
  std::vector<std::string> vars;
  std::vector<std::pair<std::string, std::string>> derivation;  ///< in the order of `vars`
  std::optional<std::vector<FactorSpec>> factored_b;
  std::optional<oracle::Bounds> bounds;
  std::optional<std::size_t> iteration_cap;
  std::optional<std::size_t> dimension_cap;
  bool operator==(const ProblemSpec&) const = default;
};

/// Throws ParseError with the line and column of the offending token.
ProblemSpec parse_problem(std::string_view text);
std::string print_problem(const ProblemSpec& spec);

struct Problem {
  RingPtr ring;
  Derivation derivation;
  std::optional<std::vector<PrimePower>> factored_b;
};

Problem build_problem(const ProblemSpec& spec);

// --- built-in fixtures ----------------------------------------------------------

struct Fixture {
  std::string name;
  std::string description;
  std::string text;
  std::string command;                  ///< command exercised by `examples`
  std::size_t n = 1;
  std::vector<std::string> generators;  ///< expected generators, canonical text
  std::string theorem;                  ///< expected theorem tag
  int exit_code = 0;                    ///< expected exit code of `command`
};

const std::vector<Fixture>& fixtures();
const Fixture& fixture(std::string_view name);

// --- commands -------------------------------------------------------------------

enum class Status { pass, fail, inconclusive, unsupported, input_error };
const char* to_string(Status s);
int exit_code(Status s);

struct RunOptions {
  std::size_t n = 1;
  std::optional<oracle::Bounds> bounds;
  std::optional<std::size_t> cap;  ///< elimination entry cap
  bool assert_irreducible = false;
  std::optional<std::vector<std::string>> predicted;  ///< `verify` generators; default from image-ideal
  std::string name;                                   ///< `examples` fixture, empty for all
};

struct CertificateLine {
  std::string name;
  std::string holds;
  std::string detail;
};

struct Report {
  std::string command;
  std::string spec_echo;
  Status status = Status::inconclusive;
  std::vector<std::string> generators;
  std::vector<CertificateLine> certificates;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, std::string>> fields;  ///< further key/value results
  std::vector<std::string> notes;
  std::vector<Report> children;  ///< per fixture for `examples`
};

/// Runs one command. Errors of the mathematics surface as reports with status
/// unsupported or inconclusive; only ParseError propagates.
Report run(const std::string& command, const ProblemSpec& spec, const RunOptions& opts);
/// `examples`: runs one fixture (opts.name) or all of them end to end.
Report run_examples(const RunOptions& opts);

std::string render_text(const Report& r);
std::string render_json(const Report& r);

}  // namespace lnd::cli
