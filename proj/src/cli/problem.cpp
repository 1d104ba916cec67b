#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "lnd/cli.hpp"

namespace lnd::cli {
namespace {

struct Word {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
  std::vector<Word> words;
};

std::vector<Word> split_words(const std::string& s, std::size_t from = 0) {
  std::vector<Word> out;
  std::size_t i = from;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::size_t parse_count(const Word& w, std::size_t line) {
  std::size_t v = 0;
  const auto* end = w.text.data() + w.text.size();
  const auto [p, ec] = std::from_chars(w.text.data(), end, v);
  if (ec != std::errc() || p != end) throw ParseError("expected a non-negative integer, got '" + w.text + "'", line, w.column);
  return v;
}

/// Parses `text`, which starts at 1-based column `column` of `line`.
Poly parse_at(const RingPtr& ring, const std::string& text, std::size_t line, std::size_t column) {
  if (text.find_first_not_of(" \t") == std::string::npos) throw ParseError("missing polynomial", line, column);
  try {
    return parse_poly(ring, text, line);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), line, e.column() + column - 1);
  }
}

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string s(text.substr(pos, nl - pos));
    ++number;
    pos = nl + 1;
    if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    if (!s.empty() && s.back() == '\r') s.pop_back();
    auto words = split_words(s);
    if (!words.empty()) lines.push_back({number, s, std::move(words)});
  }

  ProblemSpec spec;
  std::set<std::string> names;
  std::map<std::string, std::pair<std::size_t, std::size_t>> var_site;
  for (const auto& l : lines) {
    const auto& kw = l.words[0].text;
    if (kw != "param" && kw != "var") continue;
    if (l.words.size() == 1) throw ParseError("'" + kw + "' needs at least one name", l.number, l.words[0].column);
    for (std::size_t i = 1; i < l.words.size(); ++i) {
      const auto& w = l.words[i];
      if (!is_identifier(w.text)) throw ParseError("invalid name '" + w.text + "'", l.number, w.column);
      if (!names.insert(w.text).second) throw ParseError("duplicate name '" + w.text + "'", l.number, w.column);
      if (kw == "param") {
        spec.params.push_back(w.text);
      } else {
        spec.vars.push_back(w.text);
        var_site[w.text] = {l.number, w.column};
      }
    }
  }
  if (spec.vars.empty()) throw ParseError("no main variables declared", number, 1);
  const auto ring = PolyRing::make(spec.params, spec.vars);

  std::map<std::string, std::string> images;
  for (const auto& l : lines) {
    const auto& kw = l.words[0];
    if (kw.text == "param" || kw.text == "var") continue;
    if (kw.text == "factor") {
      auto words = l.words;
      FactorSpec f;
      if (words.size() > 1 && words.back().text == "irreducible") {
        f.irreducible = true;
        words.pop_back();
      }
      if (words.size() > 2 && words[words.size() - 2].text == "mult") {
        const auto m = parse_count(words.back(), l.number);
        if (m == 0) throw ParseError("multiplicity must be positive", l.number, words.back().column);
        f.multiplicity = static_cast<unsigned>(m);
        words.resize(words.size() - 2);
      }
      if (words.size() == 1) throw ParseError("missing polynomial", l.number, kw.column + kw.text.size());
      const std::size_t from = words[1].column;
      const std::size_t to = words.back().column + words.back().text.size();
      const Poly p = parse_at(ring, l.text.substr(from - 1, to - from), l.number, from);
      if (!p.in_coefficient_ring())
        throw ParseError("factor must lie in the coefficient ring", l.number, from);
      if (p.is_zero()) throw ParseError("factor must be nonzero", l.number, from);
      f.poly = p.str();
      if (!spec.factored_b) spec.factored_b.emplace();
      spec.factored_b->push_back(std::move(f));
    } else if (kw.text == "bounds") {
      if (l.words.size() != 3) throw ParseError("expected 'bounds <param> <var>'", l.number, kw.column);
      spec.bounds = oracle::Bounds{static_cast<std::uint32_t>(parse_count(l.words[1], l.number)),
                                   static_cast<std::uint32_t>(parse_count(l.words[2], l.number))};
    } else if (kw.text == "cap") {
      if (l.words.size() != 3 || (l.words[1].text != "iter" && l.words[1].text != "dim"))
        throw ParseError("expected 'cap iter <n>' or 'cap dim <n>'", l.number, kw.column);
      const auto v = parse_count(l.words[2], l.number);
      (l.words[1].text == "iter" ? spec.iteration_cap : spec.dimension_cap) = v;
    } else if (kw.text[0] == 'D') {
      const auto eq = l.text.find('=');
      if (eq == std::string::npos) throw ParseError("expected '=' in derivation line", l.number, kw.column + kw.text.size());
      std::string lhs = l.text.substr(kw.column, eq - kw.column);
      auto lw = split_words(lhs);
      if (lw.size() != 1) throw ParseError("expected 'D <var> = <poly>'", l.number, kw.column);
      const auto& name = lw[0].text;
      const std::size_t name_col = kw.column + lw[0].column;
      if (!var_site.count(name)) {
        if (std::find(spec.params.begin(), spec.params.end(), name) != spec.params.end())
          throw ParseError("'" + name + "' is a coefficient parameter; D is R-linear", l.number, name_col);
        throw ParseError("unknown variable '" + name + "'", l.number, name_col);
      }
      if (images.count(name)) throw ParseError("duplicate image for '" + name + "'", l.number, name_col);
      images[name] = parse_at(ring, l.text.substr(eq + 1), l.number, eq + 2).str();
    } else {
      throw ParseError("unknown keyword '" + kw.text + "'", l.number, kw.column);
    }
  }
  for (const auto& v : spec.vars) {
    auto it = images.find(v);
    if (it == images.end()) {
      const auto [ln, col] = var_site[v];
      throw ParseError("missing image for variable '" + v + "'", ln, col);
    }
    spec.derivation.emplace_back(v, it->second);
  }
  return spec;
}

std::string print_problem(const ProblemSpec& spec) {
  std::string out;
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += " " + x;
    return s;
  };
  if (!spec.params.empty()) out += "param" + join(spec.params) + "\n";
  out += "var" + join(spec.vars) + "\n";
  for (const auto& [v, p] : spec.derivation) out += "D " + v + " = " + p + "\n";
  if (spec.factored_b)
    for (const auto& f : *spec.factored_b)
      out += "factor " + f.poly + " mult " + std::to_string(f.multiplicity) + (f.irreducible ? " irreducible" : "") + "\n";
  if (spec.bounds) out += "bounds " + std::to_string(spec.bounds->param) + " " + std::to_string(spec.bounds->var) + "\n";
  if (spec.iteration_cap) out += "cap iter " + std::to_string(*spec.iteration_cap) + "\n";
  if (spec.dimension_cap) out += "cap dim " + std::to_string(*spec.dimension_cap) + "\n";
  return out;
}

Problem build_problem(const ProblemSpec& spec) {
  const auto ring = PolyRing::make(spec.params, spec.vars);
  std::vector<Poly> images;
  for (const auto& [v, p] : spec.derivation) images.push_back(parse_poly(ring, p));
  Problem out{ring, Derivation(ring, std::move(images)), std::nullopt};
  if (spec.factored_b) {
    out.factored_b.emplace();
    for (const auto& f : *spec.factored_b)
      out.factored_b->push_back({parse_poly(ring, f.poly), f.multiplicity, f.irreducible});
  }
  return out;
}

}  // namespace lnd::cli
