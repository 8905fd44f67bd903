#pragma once

#include <array>
#include <bitset>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trilogic/formula.hpp"
#include "trilogic/logic_spec.hpp"
#include "trilogic/parser.hpp"
#include "trilogic/semantics.hpp"

namespace trilogic {

/// An equivalence law `lhs == rhs` over metavariables A, B, C. The
/// metavariables are atoms named "A", "B", "C"; bi-implications are already
/// expanded.
struct LawSchema {
  std::string name;
  Formula lhs;
  Formula rhs;
};

/// Values assigned to metavariables.
using MetaAssignment = Valuation;

/// Least assignment on which the two sides of a law differ.
struct LawCounterexample {
  MetaAssignment assignment;
  TruthValue lhs_value;
  TruthValue rhs_value;
};

inline constexpr std::size_t builtin_law_count = 23;

namespace detail {
inline void check_metavariables(const LawSchema& law) {
  const auto vars = atoms_of_all(std::array<Formula, 2>{law.lhs, law.rhs});
  for (const auto& v : vars)
    if (v != "A" && v != "B" && v != "C")
      throw std::invalid_argument("law " + law.name + " uses '" + v + "'; only A, B, C are metavariables");
}
}  // namespace detail

inline LawSchema make_law(std::string name, std::string_view lhs, std::string_view rhs) {
  LawSchema law{std::move(name), parse_formula(lhs, AtomSyntax::metavariable),
                parse_formula(rhs, AtomSyntax::metavariable)};
  detail::check_metavariables(law);
  return law;
}

/// Laws (1)-(23) in their standard numbering; law k is element k-1 and is
/// named "Lk". (1)-(12) distinguish LP, (13)-(20) are further laws LP
/// satisfies, (21)-(23) are classical laws LP does not satisfy.
inline const std::vector<LawSchema>& builtin_laws() {
  static const std::vector<LawSchema> laws = [] {
    const std::array<std::array<const char*, 2>, builtin_law_count> text = {{
        {"A & F", "F"},
        {"A | T", "T"},
        {"A & T", "A"},
        {"A | F", "A"},
        {"A & A", "A"},
        {"A | A", "A"},
        {"A & B", "B & A"},
        {"A | B", "B | A"},
        {"~~A", "A"},
        {"(A | ~A) -> B", "B"},
        {"(A -> B) & (A -> C)", "A -> B & C"},
        {"(A -> C) & (B -> C)", "A | B -> C"},
        {"(A & B) & C", "A & (B & C)"},
        {"(A | B) | C", "A | (B | C)"},
        {"A & (B | C)", "(A & B) | (A & C)"},
        {"A | (B & C)", "(A | B) & (A | C)"},
        {"~(A & B)", "~A | ~B"},
        {"~(A | B)", "~A & ~B"},
        {"~(A -> B)", "A & ~B"},
        {"A -> (B -> C)", "A & B -> C"},
        {"A -> B", "~A | B"},
        {"A & ~A", "F"},
        {"A | ~A", "T"},
    }};
    std::vector<LawSchema> out;
    for (std::size_t i = 0; i < text.size(); ++i)
      out.push_back(make_law("L" + std::to_string(i + 1), text[i][0], text[i][1]));
    return out;
  }();
  return laws;
}

/// Law (number), 1-based.
inline const LawSchema& builtin_law(int number) {
  if (number < 1 || number > static_cast<int>(builtin_law_count))
    throw std::out_of_range("law number must be in [1, 23], got " + std::to_string(number));
  return builtin_laws()[static_cast<std::size_t>(number - 1)];
}

/// Both sides compiled over the law's metavariables, for repeated checks
/// against many logics.
class CompiledLaw {
 public:
  explicit CompiledLaw(const LawSchema& law)
      : vars_(atoms_of_all(std::array<Formula, 2>{law.lhs, law.rhs})), lhs_(law.lhs, vars_), rhs_(law.rhs, vars_) {}

  /// Checking a law over value assignments decides it for all formula
  /// instances, since every connective is a function of its arguments'
  /// values.
  std::optional<LawCounterexample> counterexample(const LogicSpec& logic) const {
    std::optional<LawCounterexample> out;
    for_each_assignment(vars_.size(), all_values, [&](std::span<const TruthValue> values) {
      const TruthValue l = lhs_.run(values, logic), r = rhs_.run(values, logic);
      if (l == r) return true;
      out = LawCounterexample{make_valuation(vars_, values), l, r};
      return false;
    });
    return out;
  }

  bool holds(const LogicSpec& logic) const { return !counterexample(logic); }

 private:
  std::vector<std::string> vars_;
  CompiledFormula lhs_;
  CompiledFormula rhs_;
};

inline std::optional<LawCounterexample> counterexample(const LawSchema& law, const LogicSpec& logic) {
  return CompiledLaw(law).counterexample(logic);
}

inline bool check_law(const LawSchema& law, const LogicSpec& logic) { return CompiledLaw(law).holds(logic); }

/// Which of laws (1)-(23) a logic satisfies.
class LawProfile {
 public:
  LawProfile() = default;
  explicit LawProfile(std::bitset<builtin_law_count> bits) : bits_(bits) {}

  /// `number` is 1-based.
  bool satisfies(int number) const { return bits_.test(bit(number)); }
  void set(int number, bool value = true) { bits_.set(bit(number), value); }

  bool satisfies_all(const std::vector<int>& numbers) const {
    for (int n : numbers)
      if (!satisfies(n)) return false;
    return true;
  }

  /// 23 characters of '0'/'1', law (1) first.
  std::string str() const {
    std::string s(builtin_law_count, '0');
    for (std::size_t i = 0; i < builtin_law_count; ++i)
      if (bits_.test(i)) s[i] = '1';
    return s;
  }

  static LawProfile from_string(const std::string& s) {
    if (s.size() != builtin_law_count) throw std::invalid_argument("law profile needs 23 characters: '" + s + "'");
    LawProfile p;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("law profile must be 0/1 characters: '" + s + "'");
      p.bits_.set(i, s[i] == '1');
    }
    return p;
  }

  std::size_t count() const { return bits_.count(); }
  const std::bitset<builtin_law_count>& bits() const { return bits_; }

  friend bool operator==(const LawProfile&, const LawProfile&) = default;

 private:
  static std::size_t bit(int number) {
    if (number < 1 || number > static_cast<int>(builtin_law_count))
      throw std::out_of_range("law number must be in [1, 23], got " + std::to_string(number));
    return static_cast<std::size_t>(number - 1);
  }

  std::bitset<builtin_law_count> bits_;
};

inline LawProfile law_profile(const LogicSpec& logic) {
  static const std::vector<CompiledLaw> compiled = [] {
    std::vector<CompiledLaw> out;
    for (const LawSchema& law : builtin_laws()) out.emplace_back(law);
    return out;
  }();
  LawProfile p;
  for (std::size_t i = 0; i < compiled.size(); ++i) p.set(static_cast<int>(i + 1), compiled[i].holds(logic));
  return p;
}

// Hilbert-style axiomatization ------------------------------------------------

struct AxiomSchema {
  std::string name;
  Formula formula;  // over metavariables A, B, C
};

/// The fifteen axiom schemas: the positive classical fragment with falsum
/// (Ax1-Ax10), negation-pushing equivalences (Ax11-Ax14) and excluded
/// middle (Ax15).
inline const std::vector<AxiomSchema>& axiom_schemas() {
  static const std::vector<AxiomSchema> axioms = [] {
    const std::array<const char*, 15> text = {
        "A -> (B -> A)",
        "((A -> B) -> A) -> A",
        "(A -> (B -> C)) -> ((A -> B) -> (A -> C))",
        "F -> A",
        "A & B -> A",
        "A & B -> B",
        "A -> (B -> A & B)",
        "A -> A | B",
        "B -> A | B",
        "(A -> C) -> ((B -> C) -> (A | B -> C))",
        "~~A <-> A",
        "~(A -> B) <-> A & ~B",
        "~(A & B) <-> ~A | ~B",
        "~(A | B) <-> ~A & ~B",
        "A | ~A",
    };
    std::vector<AxiomSchema> out;
    for (std::size_t i = 0; i < text.size(); ++i)
      out.push_back({"Ax" + std::to_string(i + 1), parse_formula(text[i], AtomSyntax::metavariable)});
    return out;
  }();
  return axioms;
}

/// ~A -> (A -> B). Adding it to the axioms yields classical logic.
inline AxiomSchema classical_collapse_schema() {
  return {"collapse", parse_formula("~A -> (A -> B)", AtomSyntax::metavariable)};
}

struct SchemaVerdict {
  std::string name;
  Formula formula;
  bool valid = true;
  std::optional<MetaAssignment> counterexample;
  TruthValue counterexample_value = TruthValue::t;  // value of the schema there
};

/// A schema is valid iff it is designated under every metavariable
/// assignment.
inline SchemaVerdict check_schema(const AxiomSchema& schema, const LogicSpec& logic) {
  const auto vars = atoms_of(schema.formula);
  const CompiledFormula c(schema.formula, vars);
  SchemaVerdict v{schema.name, schema.formula, true, std::nullopt};
  for_each_assignment(vars.size(), all_values, [&](std::span<const TruthValue> values) {
    const TruthValue r = c.run(values, logic);
    if (is_designated(r)) return true;
    v.valid = false;
    v.counterexample = make_valuation(vars, values);
    v.counterexample_value = r;
    return false;
  });
  return v;
}

inline std::vector<SchemaVerdict> check_axiom_schemas(const LogicSpec& logic) {
  std::vector<SchemaVerdict> out;
  for (const AxiomSchema& a : axiom_schemas()) out.push_back(check_schema(a, logic));
  return out;
}

/// Modus ponens preserves designation: x and x->y designated imply y
/// designated.
inline bool check_mp_preservation(const LogicSpec& logic) {
  for (TruthValue x : all_values)
    for (TruthValue y : all_values)
      if (is_designated(x) && is_designated(logic.imp(x, y)) && !is_designated(y)) return false;
  return true;
}

// Law files -----------------------------------------------------------------

class law_file_error : public std::runtime_error {
 public:
  law_file_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Parses one `NAME: LHS == RHS` line.
inline LawSchema parse_law(const std::string& line) {
  const std::size_t colon = line.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("expected 'NAME: LHS == RHS'");
  std::string name = line.substr(0, colon);
  name.erase(0, name.find_first_not_of(" \t"));
  name.erase(name.find_last_not_of(" \t") + 1);
  if (name.empty()) throw std::invalid_argument("law name is empty");
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
      throw std::invalid_argument("bad character in law name '" + name + "'");
  const std::string body = line.substr(colon + 1);
  const std::size_t eq = body.find("==");
  if (eq == std::string::npos) throw std::invalid_argument("expected '==' between the two sides");
  if (body.find("==", eq + 2) != std::string::npos) throw std::invalid_argument("more than one '=='");
  return make_law(name, body.substr(0, eq), body.substr(eq + 2));
}

/// Reads laws one per line. Blank lines and lines starting with '#' are
/// skipped.
inline std::vector<LawSchema> read_laws(std::istream& in) {
  std::vector<LawSchema> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_law(line));
    } catch (const std::exception& e) {
      throw law_file_error(number, e.what());
    }
  }
  return out;
}

}  // namespace trilogic
