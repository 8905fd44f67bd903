#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trilogic/formula.hpp"
#include "trilogic/logic_spec.hpp"
#include "trilogic/truth_value.hpp"

namespace trilogic {

/// Assignment of values to atom names.
using Valuation = std::map<std::string, TruthValue>;

class missing_atom_error : public std::out_of_range {
 public:
  explicit missing_atom_error(const std::string& atom)
      : std::out_of_range("valuation does not assign atom '" + atom + "'"), atom_(atom) {}
  const std::string& atom() const noexcept { return atom_; }

 private:
  std::string atom_;
};

class non_classical_valuation_error : public std::invalid_argument {
 public:
  explicit non_classical_valuation_error(const std::string& atom)
      : std::invalid_argument("classical valuation assigns b to atom '" + atom + "'") {}
};

/// Value of `f` under `v`, interpreting connectives by `logic`.
inline TruthValue eval(const Formula& f, const Valuation& v, const LogicSpec& logic) {
  switch (f.kind()) {
    case NodeKind::atom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw missing_atom_error(f.name());
      return it->second;
    }
    case NodeKind::falsum: return TruthValue::f;
    case NodeKind::negation: return logic.neg(eval(f.left(), v, logic));
    default: {
      const TruthValue l = eval(f.left(), v, logic);
      const TruthValue r = eval(f.right(), v, logic);
      return logic.apply(connective_of(f.kind()), l, r);
    }
  }
}

inline TruthValue classical_eval(const Formula& f, const Valuation& v) {
  for (const auto& [name, value] : v)
    if (!is_classical(value)) throw non_classical_valuation_error(name);
  static const LogicSpec classical = classical_tables();
  return eval(f, v, classical);
}

/// A formula flattened to a step list over numbered atom slots, for the
/// loops that evaluate one formula under many valuations.
class CompiledFormula {
 public:
  /// `slots` names the atom in each slot; every atom of `f` must appear.
  CompiledFormula(const Formula& f, std::span<const std::string> slots) {
    std::vector<std::string> names(slots.begin(), slots.end());
    compile(f, names);
  }

  TruthValue run(std::span<const TruthValue> values, const LogicSpec& logic) const {
    constexpr std::size_t inline_capacity = 64;
    if (steps_.size() <= inline_capacity) {
      std::array<TruthValue, inline_capacity> buf;
      return run_into(values, logic, buf.data());
    }
    std::vector<TruthValue> buf(steps_.size());
    return run_into(values, logic, buf.data());
  }

 private:
  struct Step {
    NodeKind kind;
    std::uint32_t a = 0;  // atom slot, or operand step
    std::uint32_t b = 0;
  };

  std::uint32_t compile(const Formula& f, const std::vector<std::string>& names) {
    Step s{f.kind()};
    switch (f.kind()) {
      case NodeKind::atom: {
        auto it = std::find(names.begin(), names.end(), f.name());
        if (it == names.end()) throw missing_atom_error(f.name());
        s.a = static_cast<std::uint32_t>(it - names.begin());
        break;
      }
      case NodeKind::falsum: break;
      case NodeKind::negation: s.a = compile(f.left(), names); break;
      default:
        s.a = compile(f.left(), names);
        s.b = compile(f.right(), names);
    }
    steps_.push_back(s);
    return static_cast<std::uint32_t>(steps_.size() - 1);
  }

  TruthValue run_into(std::span<const TruthValue> values, const LogicSpec& logic, TruthValue* out) const {
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const Step& s = steps_[i];
      switch (s.kind) {
        case NodeKind::atom: out[i] = values[s.a]; break;
        case NodeKind::falsum: out[i] = TruthValue::f; break;
        case NodeKind::negation: out[i] = logic.neg(out[s.a]); break;
        case NodeKind::conjunction: out[i] = logic.conj(out[s.a], out[s.b]); break;
        case NodeKind::disjunction: out[i] = logic.disj(out[s.a], out[s.b]); break;
        case NodeKind::implication: out[i] = logic.imp(out[s.a], out[s.b]); break;
      }
    }
    return out[steps_.size() - 1];
  }

  std::vector<Step> steps_;
};

/// Visits every assignment of `domain` values to `arity` slots in
/// lexicographic order (slot 0 most significant). Stops early when `fn`
/// returns false; returns whether the visit ran to completion.
template <class Fn>
bool for_each_assignment(std::size_t arity, std::span<const TruthValue> domain, Fn&& fn) {
  std::vector<std::size_t> digits(arity, 0);
  std::vector<TruthValue> values(arity, domain.front());
  for (;;) {
    if (!fn(std::span<const TruthValue>(values))) return false;
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++digits[i] < domain.size()) {
        values[i] = domain[digits[i]];
        break;
      }
      digits[i] = 0;
      values[i] = domain.front();
      if (i == 0) return true;
    }
    if (arity == 0) return true;
  }
}

inline Valuation make_valuation(std::span<const std::string> atoms, std::span<const TruthValue> values) {
  Valuation v;
  for (std::size_t i = 0; i < atoms.size(); ++i) v.emplace(atoms[i], values[i]);
  return v;
}

/// Outcome of a consequence or equivalence query. A witness is present
/// exactly when the relation fails.
struct EntailmentResult {
  bool holds = true;
  std::optional<Valuation> witness;

  explicit operator bool() const noexcept { return holds; }
};

struct EquivalenceResult {
  bool holds = true;
  std::optional<Valuation> witness;
  // Values of the two sides under the witness.
  TruthValue left_value = TruthValue::t;
  TruthValue right_value = TruthValue::t;

  explicit operator bool() const noexcept { return holds; }
};

namespace detail {
inline EntailmentResult entails_over(std::span<const Formula> premises, const Formula& conclusion,
                                     const LogicSpec& logic, std::span<const TruthValue> domain) {
  std::vector<Formula> all(premises.begin(), premises.end());
  all.push_back(conclusion);
  const std::vector<std::string> atoms = atoms_of_all(all);
  std::vector<CompiledFormula> compiled;
  compiled.reserve(premises.size());
  for (const Formula& p : premises) compiled.emplace_back(p, atoms);
  const CompiledFormula goal(conclusion, atoms);

  EntailmentResult result;
  for_each_assignment(atoms.size(), domain, [&](std::span<const TruthValue> values) {
    for (const CompiledFormula& p : compiled)
      if (p.run(values, logic) == TruthValue::f) return true;
    if (is_designated(goal.run(values, logic))) return true;
    result.holds = false;
    result.witness = make_valuation(atoms, values);
    return false;
  });
  return result;
}
}  // namespace detail

/// premises |= conclusion: every valuation over the atoms involved either
/// makes some premise f or makes the conclusion designated. On failure the
/// witness is the least refuting valuation (atoms by name, values t < f < b).
inline EntailmentResult entails(std::span<const Formula> premises, const Formula& conclusion,
                                const LogicSpec& logic) {
  return detail::entails_over(premises, conclusion, logic, all_values);
}

inline EntailmentResult entails(std::initializer_list<Formula> premises, const Formula& conclusion,
                                const LogicSpec& logic) {
  return entails(std::span<const Formula>(premises.begin(), premises.size()), conclusion, logic);
}

/// Two-valued consequence.
inline bool classical_entails(std::span<const Formula> premises, const Formula& conclusion) {
  static const LogicSpec classical = classical_tables();
  return detail::entails_over(premises, conclusion, classical, classical_values).holds;
}

inline bool classical_entails(std::initializer_list<Formula> premises, const Formula& conclusion) {
  return classical_entails(std::span<const Formula>(premises.begin(), premises.size()), conclusion);
}

/// Logical equivalence: identical values under every valuation.
inline EquivalenceResult equivalent(const Formula& a, const Formula& b, const LogicSpec& logic) {
  const std::vector<std::string> atoms = atoms_of_all(std::array<Formula, 2>{a, b});
  const CompiledFormula ca(a, atoms), cb(b, atoms);
  EquivalenceResult result;
  for_each_assignment(atoms.size(), all_values, [&](std::span<const TruthValue> values) {
    const TruthValue l = ca.run(values, logic), r = cb.run(values, logic);
    if (l == r) return true;
    result = {false, make_valuation(atoms, values), l, r};
    return false;
  });
  return result;
}

/// True iff no valuation gives `f` the value b.
inline bool is_consistent(const Formula& f, const LogicSpec& logic) {
  const std::vector<std::string> atoms = atoms_of(f);
  const CompiledFormula c(f, atoms);
  return for_each_assignment(atoms.size(), all_values, [&](std::span<const TruthValue> values) {
    return c.run(values, logic) != TruthValue::b;
  });
}

/// Whether `f` is designated under every valuation.
inline bool is_valid(const Formula& f, const LogicSpec& logic) { return entails({}, f, logic).holds; }

inline std::string to_string(const Valuation& v) {
  std::string s;
  for (const auto& [name, value] : v) {
    if (!s.empty()) s += ',';
    s += name;
    s += '=';
    s += to_char(value);
  }
  return s;
}

/// Parses "p=t,q=b".
inline Valuation parse_valuation(const std::string& text) {
  Valuation v;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw std::invalid_argument("expected name=value, got '" + item + "'");
      std::string name = item.substr(0, eq);
      name.erase(name.find_last_not_of(" \t") + 1);
      std::string value = item.substr(eq + 1);
      value.erase(0, value.find_first_not_of(" \t"));
      if (!v.emplace(name, parse_value(value)).second)
        throw std::invalid_argument("atom '" + name + "' assigned twice");
    }
    start = end + 1;
  }
  return v;
}

}  // namespace trilogic
