#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "trilogic/formula.hpp"
#include "trilogic/truth_value.hpp"

namespace trilogic {

enum class Connective : unsigned char { negation, conjunction, disjunction, implication };

inline constexpr std::array<Connective, 4> all_connectives = {Connective::negation, Connective::conjunction,
                                                              Connective::disjunction, Connective::implication};

constexpr std::string_view connective_name(Connective c) noexcept {
  switch (c) {
    case Connective::negation: return "neg";
    case Connective::conjunction: return "and";
    case Connective::disjunction: return "or";
    case Connective::implication: return "imp";
  }
  return "?";
}

inline Connective parse_connective(std::string_view s) {
  for (Connective c : all_connectives)
    if (connective_name(c) == s) return c;
  throw std::invalid_argument("unknown connective '" + std::string(s) + "' (expected neg, and, or, imp)");
}

constexpr Connective connective_of(NodeKind k) {
  switch (k) {
    case NodeKind::negation: return Connective::negation;
    case NodeKind::conjunction: return Connective::conjunction;
    case NodeKind::disjunction: return Connective::disjunction;
    case NodeKind::implication: return Connective::implication;
    default: break;
  }
  throw std::invalid_argument("node kind is not a connective");
}

class UnaryTable {
 public:
  constexpr UnaryTable() = default;
  constexpr UnaryTable(TruthValue at_t, TruthValue at_f, TruthValue at_b) : cells_{at_t, at_f, at_b} {}

  constexpr TruthValue operator()(TruthValue x) const noexcept { return cells_[index(x)]; }
  constexpr void set(TruthValue x, TruthValue v) noexcept { cells_[index(x)] = v; }

  /// Cells for arguments t, f, b, e.g. "fbt".
  std::string str() const { return {to_char(cells_[0]), to_char(cells_[1]), to_char(cells_[2])}; }

  friend constexpr bool operator==(const UnaryTable&, const UnaryTable&) = default;

 private:
  std::array<TruthValue, 3> cells_{};
};

/// Binary truth table, rows indexed by the left argument.
class BinaryTable {
 public:
  constexpr BinaryTable() = default;
  constexpr explicit BinaryTable(const std::array<TruthValue, 9>& cells) : cells_(cells) {}

  constexpr TruthValue operator()(TruthValue x, TruthValue y) const noexcept {
    return cells_[index(x) * 3 + index(y)];
  }
  constexpr void set(TruthValue x, TruthValue y, TruthValue v) noexcept { cells_[index(x) * 3 + index(y)] = v; }

  /// Row-major cells, rows and columns in value order t, f, b.
  std::string str() const {
    std::string s;
    for (TruthValue v : cells_) s += to_char(v);
    return s;
  }

  friend constexpr bool operator==(const BinaryTable&, const BinaryTable&) = default;

 private:
  std::array<TruthValue, 9> cells_{};
};

/// One complete three-valued interpretation of the connectives. Falsum is
/// always f and is not part of the spec.
struct LogicSpec {
  UnaryTable neg;
  BinaryTable conj;
  BinaryTable disj;
  BinaryTable imp;

  constexpr TruthValue apply(Connective c, TruthValue x, TruthValue y = TruthValue::t) const noexcept {
    switch (c) {
      case Connective::negation: return neg(x);
      case Connective::conjunction: return conj(x, y);
      case Connective::disjunction: return disj(x, y);
      case Connective::implication: return imp(x, y);
    }
    return TruthValue::f;
  }

  constexpr void set(Connective c, TruthValue x, TruthValue y, TruthValue v) noexcept {
    switch (c) {
      case Connective::negation: neg.set(x, v); break;
      case Connective::conjunction: conj.set(x, y, v); break;
      case Connective::disjunction: disj.set(x, y, v); break;
      case Connective::implication: imp.set(x, y, v); break;
    }
  }

  friend constexpr bool operator==(const LogicSpec&, const LogicSpec&) = default;
};

namespace detail {
inline BinaryTable table_from_string(std::string_view cells) {
  std::array<TruthValue, 9> out{};
  if (cells.size() != 9) throw std::invalid_argument("binary table needs 9 cells, got '" + std::string(cells) + "'");
  for (std::size_t i = 0; i < 9; ++i) {
    auto v = value_from_char(cells[i]);
    if (!v) throw std::invalid_argument("bad table cell '" + std::string(1, cells[i]) + "'");
    out[i] = *v;
  }
  return BinaryTable(out);
}

inline UnaryTable unary_from_string(std::string_view cells) {
  if (cells.size() != 3) throw std::invalid_argument("negation table needs 3 cells, got '" + std::string(cells) + "'");
  std::array<TruthValue, 3> v{};
  for (std::size_t i = 0; i < 3; ++i) {
    auto c = value_from_char(cells[i]);
    if (!c) throw std::invalid_argument("bad table cell '" + std::string(1, cells[i]) + "'");
    v[i] = *c;
  }
  return {v[0], v[1], v[2]};
}
}  // namespace detail

/// Builds a spec from the textual cell strings used by the catalog. Does not
/// check family membership.
inline LogicSpec logic_from_tables(std::string_view neg, std::string_view conj, std::string_view disj,
                                   std::string_view imp) {
  return {detail::unary_from_string(neg), detail::table_from_string(conj), detail::table_from_string(disj),
          detail::table_from_string(imp)};
}

/// The logic of paradox extended with falsum and a deduction-theorem
/// implication.
///
///   ~ : t->f, f->t, b->b
///   & : t iff both t; f if either f; b otherwise
///   | : t if either t; f iff both f; b otherwise
///  -> : t if the antecedent is f; the consequent's value otherwise
inline LogicSpec lp_logic() {
  // rows/columns t, f, b
  return logic_from_tables("ftb", "tfbfffbfb", "ttttfbtbb", "tfbttttfb");
}

/// Classical two-valued tables. Cells involving b are never consulted and
/// are set to f.
inline LogicSpec classical_tables() { return logic_from_tables("ftf", "tffffffff", "ttftfffff", "tffttffff"); }

}  // namespace trilogic
