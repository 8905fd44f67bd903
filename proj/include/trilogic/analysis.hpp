#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trilogic/family.hpp"
#include "trilogic/formula.hpp"
#include "trilogic/laws.hpp"
#include "trilogic/logic_spec.hpp"
#include "trilogic/parser.hpp"
#include "trilogic/semantics.hpp"

namespace trilogic {

/// Law profiles of all family members, indexed by id. Computed once.
inline const std::vector<LawProfile>& family_profiles() {
  static const std::vector<LawProfile> profiles =
      map_family([](LogicId, const LogicSpec& logic) { return law_profile(logic); });
  return profiles;
}

namespace detail {
inline void check_law_numbers(const std::vector<int>& laws) {
  for (int n : laws)
    if (n < 1 || n > static_cast<int>(builtin_law_count))
      throw std::out_of_range("law number must be in [1, 23], got " + std::to_string(n));
}
}  // namespace detail

/// Parses a law set such as "1-8,10-12" into sorted, distinct numbers.
inline std::vector<int> parse_law_set(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  auto number = [&](const std::string& s) {
    std::size_t pos = 0;
    int n = 0;
    try {
      n = std::stoi(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw std::invalid_argument("bad law number '" + s + "' in '" + text + "'");
    return n;
  };
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    const std::size_t dash = item.find('-', 1);
    if (dash == std::string::npos) {
      out.insert(number(item));
    } else {
      const int lo = number(item.substr(0, dash)), hi = number(item.substr(dash + 1));
      if (lo > hi) throw std::invalid_argument("empty law range '" + item + "'");
      for (int n = lo; n <= hi; ++n) out.insert(n);
    }
  }
  std::vector<int> laws(out.begin(), out.end());
  detail::check_law_numbers(laws);
  return laws;
}

/// Family members satisfying every listed law, in id order.
inline std::vector<LogicId> count_satisfying(const std::vector<int>& laws) {
  detail::check_law_numbers(laws);
  const auto& profiles = family_profiles();
  std::vector<LogicId> ids;
  for (std::size_t id = 0; id < profiles.size(); ++id)
    if (profiles[id].satisfies_all(laws)) ids.push_back(static_cast<LogicId>(id));
  return ids;
}

// Staged uniqueness argument --------------------------------------------------

/// Order in which connectives get fixed: conjunction, disjunction,
/// negation, implication.
inline constexpr std::array<Connective, 4> stage_order = {Connective::conjunction, Connective::disjunction,
                                                          Connective::negation, Connective::implication};

class stage_precondition_error : public std::invalid_argument {
 public:
  stage_precondition_error(const std::string& law, Connective used, Connective staged)
      : std::invalid_argument("law " + law + " depends on " + std::string(connective_name(used)) +
                              ", which is not fixed before the " + std::string(connective_name(staged)) + " stage"),
        law_(law) {}
  const std::string& law() const noexcept { return law_; }

 private:
  std::string law_;
};

struct StageResult {
  Connective connective;
  std::size_t candidates = 0;  // tables allowed by the family constraints
  std::size_t compatible = 0;  // of those, tables satisfying the laws
  std::vector<std::string> compatible_tables;
};

/// Enumerates every table for `connective` (27 for negation, 19683 for a
/// binary connective) with all other connectives at their LP tables, keeps
/// the family members, then keeps those satisfying `laws`. Laws may depend
/// only on the staged connective and the ones fixed before it; connectives
/// applied to closed subterms do not count.
inline StageResult stage_analysis(Connective connective, const std::vector<int>& laws) {
  detail::check_law_numbers(laws);
  std::set<Connective> allowed;
  for (Connective c : stage_order) {
    allowed.insert(c);
    if (c == connective) break;
  }
  std::vector<CompiledLaw> compiled;
  for (int n : laws) {
    const LawSchema& law = builtin_law(n);
    for (const Formula* side : {&law.lhs, &law.rhs})
      for (NodeKind k : open_connectives(*side))
        if (!allowed.count(connective_of(k))) throw stage_precondition_error(law.name, connective_of(k), connective);
    compiled.emplace_back(law);
  }

  StageResult result{connective, 0, 0, {}};
  const bool unary = connective == Connective::negation;
  const std::size_t cells = unary ? 3 : 9;
  std::size_t tables = 1;
  for (std::size_t i = 0; i < cells; ++i) tables *= 3;

  LogicSpec logic = lp_logic();
  for (std::size_t code = 0; code < tables; ++code) {
    std::size_t rest = code;
    for (std::size_t cell = cells; cell-- > 0;) {
      const TruthValue v = all_values[rest % 3];
      rest /= 3;
      if (unary)
        logic.neg.set(all_values[cell], v);
      else
        logic.set(connective, all_values[cell / 3], all_values[cell % 3], v);
    }
    if (!satisfies_family_constraints(logic)) continue;
    ++result.candidates;
    const bool ok = std::all_of(compiled.begin(), compiled.end(), [&](const CompiledLaw& l) { return l.holds(logic); });
    if (ok) {
      ++result.compatible;
      result.compatible_tables.push_back(unary ? logic.neg.str()
                                               : (connective == Connective::conjunction   ? logic.conj.str()
                                                  : connective == Connective::disjunction ? logic.disj.str()
                                                                                          : logic.imp.str()));
    }
  }
  return result;
}

// Internalized consistency and equivalence -----------------------------------

/// Values of (A -> F) | (~A -> F) for A = t, f, b.
inline std::array<TruthValue, 3> internalized_consistency_values(const LogicSpec& logic) {
  static const Formula schema = parse_formula("(A -> F) | (~A -> F)", AtomSyntax::metavariable);
  static const std::vector<std::string> vars = {"A"};
  const CompiledFormula c(schema, vars);
  std::array<TruthValue, 3> out{};
  for (TruthValue x : all_values) out[index(x)] = c.run(std::array{x}, logic);
  return out;
}

/// (A -> F) | (~A -> F) is designated exactly at the consistent values t, f.
inline bool check_internalized_consistency(const LogicSpec& logic) {
  const auto values = internalized_consistency_values(logic);
  for (TruthValue x : all_values)
    if (is_designated(values[index(x)]) != (x != TruthValue::b)) return false;
  return true;
}

/// Value of (A <-> B) & (~A <-> ~B) at A = x, B = y.
inline TruthValue internalized_equivalence_value(const LogicSpec& logic, TruthValue x, TruthValue y) {
  static const Formula schema = parse_formula("(A <-> B) & (~A <-> ~B)", AtomSyntax::metavariable);
  static const std::vector<std::string> vars = {"A", "B"};
  const CompiledFormula c(schema, vars);
  return c.run(std::array{x, y}, logic);
}

/// (A <-> B) & (~A <-> ~B) is designated exactly when A and B have the
/// same value.
inline bool check_internalized_equivalence(const LogicSpec& logic) {
  for (TruthValue x : all_values)
    for (TruthValue y : all_values)
      if (is_designated(internalized_equivalence_value(logic, x, y)) != (x == y)) return false;
  return true;
}

/// Every connective agrees with its classical table on classical arguments,
/// checked by evaluating p, ~p, p & q, p | q, p -> q under all two-valued
/// valuations against the classical evaluator.
inline bool agrees_classically(const LogicSpec& logic) {
  static const std::array<Formula, 4> probes = {negation(atom("p")), conjunction(atom("p"), atom("q")),
                                                disjunction(atom("p"), atom("q")), implication(atom("p"), atom("q"))};
  for (const Formula& f : probes)
    for (TruthValue x : classical_values)
      for (TruthValue y : classical_values) {
        const Valuation v{{"p", x}, {"q", y}};
        if (eval(f, v, logic) != classical_eval(f, v)) return false;
      }
  return true;
}

/// {p, ~p} |= q fails.
inline EntailmentResult paraconsistency_probe(const LogicSpec& logic) {
  return entails({atom("p"), negation(atom("p"))}, atom("q"), logic);
}

// Tautology coincidence -------------------------------------------------------

inline constexpr std::size_t max_scan_depth = 4;
inline constexpr std::size_t max_scan_atoms = 2;
/// Upper bound on formulas a scan may visit.
inline constexpr std::uint64_t scan_budget = 200'000'000;

namespace detail {
inline std::vector<std::string> scan_atoms(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('p' + i)));
  return out;
}

inline std::uint64_t saturating(std::uint64_t x) {
  return std::min<std::uint64_t>(x, std::numeric_limits<std::uint64_t>::max() / 8);
}

/// Number of formulas of depth <= d over n atoms plus F.
inline std::uint64_t formula_count(std::size_t depth, std::size_t atoms) {
  std::uint64_t count = atoms + 1;
  for (std::size_t d = 0; d < depth; ++d) {
    if (count > 3'000'000'000ULL) return std::numeric_limits<std::uint64_t>::max() / 8;
    count = saturating(atoms + 1 + count + 3 * count * count);
  }
  return count;
}

inline void check_scan_bounds(std::size_t depth, std::size_t atoms) {
  if (depth > max_scan_depth) throw std::invalid_argument("formula depth must be at most 4");
  if (atoms < 1 || atoms > max_scan_atoms) throw std::invalid_argument("atom count must be 1 or 2");
  if (formula_count(depth, atoms) > scan_budget)
    throw std::invalid_argument("depth " + std::to_string(depth) + " over " + std::to_string(atoms) +
                                " atoms exceeds the scan budget of " + std::to_string(scan_budget) + " formulas");
}

}  // namespace detail

/// Every formula over atoms p (and q) plus F with depth <= max_depth, sorted
/// by size, then constructor order (atom < F < ~ < & < | < ->), then
/// operands. Meant for small bounds.
inline std::vector<Formula> enumerate_formulas(std::size_t max_depth, std::size_t atom_count) {
  detail::check_scan_bounds(max_depth, atom_count);
  if (detail::formula_count(max_depth, atom_count) > 2'000'000)
    throw std::invalid_argument("too many formulas to materialize; use tautology_coincidence_scan");
  const auto atoms = detail::scan_atoms(atom_count);
  std::vector<Formula> level;
  for (const auto& a : atoms) level.push_back(atom(a));
  level.push_back(falsum());
  for (std::size_t d = 0; d < max_depth; ++d) {
    std::vector<Formula> next;
    for (const auto& a : atoms) next.push_back(atom(a));
    next.push_back(falsum());
    for (const Formula& f : level) next.push_back(negation(f));
    for (NodeKind k : {NodeKind::conjunction, NodeKind::disjunction, NodeKind::implication})
      for (const Formula& l : level)
        for (const Formula& r : level) next.push_back(binary(k, l, r));
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), FormulaLess{});
  return level;
}

struct ScanResult {
  std::uint64_t scanned = 0;
  std::uint64_t tautologies = 0;  // tautologies of both logics
  std::vector<Formula> mismatches;  // sorted like enumerate_formulas
};

/// Compares tautologyhood in `logic` with classical tautologyhood for every
/// formula of depth <= max_depth over 1 or 2 atoms plus F. Each formula's
/// value vector under all valuations is computed from its operands' vectors,
/// so deep levels are visited without building trees.
inline ScanResult tautology_coincidence_scan(std::size_t max_depth, std::size_t atom_count,
                                            const LogicSpec& logic = lp_logic()) {
  detail::check_scan_bounds(max_depth, atom_count);
  static const LogicSpec classical = classical_tables();
  const auto atoms = detail::scan_atoms(atom_count);
  const std::size_t lp_rows = atom_count == 1 ? 3 : 9;
  const std::size_t cl_rows = atom_count == 1 ? 2 : 4;

  struct Sem {
    std::array<TruthValue, 9> lp{};
    std::array<TruthValue, 4> cl{};
  };
  struct Entry {
    Sem sem;
    Formula formula;
  };

  auto leaf = [&](const Formula& f) {
    Sem s;
    std::size_t row = 0;
    for_each_assignment(atom_count, all_values, [&](std::span<const TruthValue> v) {
      s.lp[row++] = eval(f, make_valuation(atoms, v), logic);
      return true;
    });
    row = 0;
    for_each_assignment(atom_count, classical_values, [&](std::span<const TruthValue> v) {
      s.cl[row++] = classical_eval(f, make_valuation(atoms, v));
      return true;
    });
    return s;
  };

  auto apply = [&](Connective c, const Sem& a, const Sem& b) {
    Sem s;
    for (std::size_t i = 0; i < lp_rows; ++i) s.lp[i] = logic.apply(c, a.lp[i], b.lp[i]);
    for (std::size_t i = 0; i < cl_rows; ++i) s.cl[i] = classical.apply(c, a.cl[i], b.cl[i]);
    return s;
  };

  ScanResult result;
  auto visit = [&](const Sem& s, auto&& make_formula) {
    ++result.scanned;
    bool lp_taut = true, cl_taut = true;
    for (std::size_t i = 0; i < lp_rows; ++i) lp_taut = lp_taut && is_designated(s.lp[i]);
    for (std::size_t i = 0; i < cl_rows; ++i) cl_taut = cl_taut && s.cl[i] == TruthValue::t;
    if (lp_taut && cl_taut) ++result.tautologies;
    if (lp_taut != cl_taut) result.mismatches.push_back(make_formula());
  };

  std::vector<Entry> leaves;
  for (const auto& a : atoms) leaves.push_back({leaf(atom(a)), atom(a)});
  leaves.push_back({leaf(falsum()), falsum()});

  // `level` holds every formula of depth <= d. Trees are only kept for the
  // levels that are materialized; the last level is visited on the fly.
  std::vector<Entry> level = leaves;
  for (std::size_t d = 0; d < max_depth; ++d) {
    const bool last = d + 1 == max_depth;
    std::vector<Entry> next;
    if (!last) next = leaves;
    auto emit = [&](Sem s, auto&& make_formula) {
      if (last)
        visit(s, make_formula);
      else
        next.push_back({s, make_formula()});
    };
    if (last)
      for (const Entry& e : leaves) visit(e.sem, [&] { return e.formula; });
    for (const Entry& e : level)
      emit(apply(Connective::negation, e.sem, e.sem), [&] { return negation(e.formula); });
    for (Connective c : {Connective::conjunction, Connective::disjunction, Connective::implication}) {
      const NodeKind k = c == Connective::conjunction   ? NodeKind::conjunction
                         : c == Connective::disjunction ? NodeKind::disjunction
                                                        : NodeKind::implication;
      for (const Entry& l : level)
        for (const Entry& r : level) emit(apply(c, l.sem, r.sem), [&] { return binary(k, l.formula, r.formula); });
    }
    if (!last) level = std::move(next);
  }
  if (max_depth == 0)
    for (const Entry& e : leaves) visit(e.sem, [&] { return e.formula; });

  std::sort(result.mismatches.begin(), result.mismatches.end(), FormulaLess{});
  return result;
}

}  // namespace trilogic
