#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "trilogic/logic_spec.hpp"
#include "trilogic/truth_value.hpp"

namespace trilogic {

/// Packed identity of a family member, in [0, family_size).
using LogicId = std::uint16_t;

inline constexpr std::size_t family_size = 8192;
inline constexpr std::size_t free_cell_count = 13;

/// A table cell whose value is not forced by the family constraints; it may
/// be t or b. For negation `right` is unused.
struct FreeCell {
  Connective connective;
  TruthValue left;
  TruthValue right;
};

/// Free cells in identity order. Cell i is bit (12 - i) of a LogicId, so the
/// binary spelling of an id reads the cells left to right; bit 0 means t and
/// bit 1 means b.
inline constexpr std::array<FreeCell, free_cell_count> free_cells = {{
    {Connective::conjunction, TruthValue::t, TruthValue::b},
    {Connective::conjunction, TruthValue::b, TruthValue::t},
    {Connective::conjunction, TruthValue::b, TruthValue::b},
    {Connective::disjunction, TruthValue::t, TruthValue::b},
    {Connective::disjunction, TruthValue::b, TruthValue::t},
    {Connective::disjunction, TruthValue::b, TruthValue::b},
    {Connective::disjunction, TruthValue::b, TruthValue::f},
    {Connective::disjunction, TruthValue::f, TruthValue::b},
    {Connective::negation, TruthValue::b, TruthValue::t},
    {Connective::implication, TruthValue::t, TruthValue::b},
    {Connective::implication, TruthValue::b, TruthValue::t},
    {Connective::implication, TruthValue::b, TruthValue::b},
    {Connective::implication, TruthValue::f, TruthValue::b},
}};

/// Result of checking arbitrary tables against the family constraints.
struct ConstraintReport {
  bool ok = true;
  // Filled in for the first violation only.
  Connective connective = Connective::negation;
  TruthValue left = TruthValue::t;
  TruthValue right = TruthValue::t;
  std::string constraint;

  explicit operator bool() const noexcept { return ok; }

  std::string describe() const {
    if (ok) return "ok";
    std::ostringstream os;
    os << connective_name(connective) << '(' << left;
    if (connective != Connective::negation) os << ',' << right;
    os << "): " << constraint;
    return os.str();
  }
};

namespace detail {
// Whether the value at a cell must be designated, given the arguments.
inline bool designation_required(Connective c, TruthValue x, TruthValue y) {
  switch (c) {
    case Connective::negation: return true;  // only consulted for x = b
    case Connective::conjunction: return is_designated(x) && is_designated(y);
    case Connective::disjunction: return is_designated(x) || is_designated(y);
    case Connective::implication: return !is_designated(x) || is_designated(y);
  }
  return false;
}

inline const char* designation_rule(Connective c) {
  switch (c) {
    case Connective::negation: return "negation of b must be designated";
    case Connective::conjunction: return "A&B designated iff A and B designated";
    case Connective::disjunction: return "A|B designated iff A or B designated";
    case Connective::implication: return "A->B designated iff A undesignated or B designated";
  }
  return "";
}
}  // namespace detail

/// Checks classical agreement on {t, f} and the designation conditions
/// that make conjunction, disjunction and implication behave properly and
/// keep the logic paraconsistent. Cells are visited per connective (neg,
/// and, or, imp) in value order; the first violation is reported.
inline ConstraintReport satisfies_family_constraints(const LogicSpec& logic) {
  static const LogicSpec classical = classical_tables();
  for (Connective c : all_connectives) {
    const bool unary = c == Connective::negation;
    for (TruthValue x : all_values) {
      for (TruthValue y : all_values) {
        if (unary && y != TruthValue::t) continue;
        const TruthValue v = logic.apply(c, x, y);
        ConstraintReport r{false, c, x, y, {}};
        if (is_classical(x) && (unary || is_classical(y))) {
          if (v != classical.apply(c, x, y)) {
            r.constraint = std::string("must agree with the classical table (expected ") +
                           to_char(classical.apply(c, x, y)) + ", got " + to_char(v) + ")";
            return r;
          }
        } else if (is_designated(v) != detail::designation_required(c, x, y)) {
          r.constraint = std::string(detail::designation_rule(c)) + " (got " + to_char(v) + ")";
          return r;
        }
      }
    }
  }
  return {};
}

namespace detail {
// Every forced cell set, free cells at t.
inline LogicSpec forced_cells() {
  LogicSpec s = lp_logic();
  for (const FreeCell& cell : free_cells) s.set(cell.connective, cell.left, cell.right, TruthValue::t);
  return s;
}
}  // namespace detail

inline LogicSpec decode(std::size_t id) {
  if (id >= family_size) throw std::out_of_range("logic id out of range [0, 8191]: " + std::to_string(id));
  static const LogicSpec base = detail::forced_cells();
  LogicSpec s = base;
  for (std::size_t i = 0; i < free_cell_count; ++i) {
    if ((id >> (free_cell_count - 1 - i)) & 1U) {
      const FreeCell& cell = free_cells[i];
      s.set(cell.connective, cell.left, cell.right, TruthValue::b);
    }
  }
  return s;
}

inline LogicId encode(const LogicSpec& logic) {
  if (auto r = satisfies_family_constraints(logic); !r)
    throw std::invalid_argument("tables are not a family member: " + r.describe());
  unsigned id = 0;
  for (const FreeCell& cell : free_cells) {
    id <<= 1;
    if (logic.apply(cell.connective, cell.left, cell.right) == TruthValue::b) id |= 1U;
  }
  return static_cast<LogicId>(id);
}

/// All family members in increasing id order.
inline std::vector<LogicSpec> enumerate_logics() {
  std::vector<LogicSpec> out;
  out.reserve(family_size);
  for (std::size_t id = 0; id < family_size; ++id) out.push_back(decode(id));
  return out;
}

/// Parses "lp" or a decimal id.
inline LogicSpec logic_by_name(const std::string& name) {
  if (name == "lp" || name == "LP") return lp_logic();
  std::size_t pos = 0;
  unsigned long id = 0;
  try {
    id = std::stoul(name, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != name.size()) throw std::invalid_argument("expected 'lp' or a logic id, got '" + name + "'");
  return decode(id);
}

/// Worker count for family-wide fan-out: TRILOGIC_THREADS if set to a
/// positive integer, else the hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("TRILOGIC_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(std::min<long>(n, 256));
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Computes fn(id, decode(id)) for every member. Results are indexed by id;
/// workers own disjoint index ranges.
template <class Fn>
auto map_family(Fn fn) -> std::vector<std::invoke_result_t<Fn&, LogicId, const LogicSpec&>> {
  using R = std::invoke_result_t<Fn&, LogicId, const LogicSpec&>;
  // vector<bool> packs bits, so concurrent writes to neighbours would race.
  using Slot = std::conditional_t<std::is_same_v<R, bool>, unsigned char, R>;
  std::vector<Slot> slots(family_size);
  const unsigned workers = std::min<unsigned>(worker_count(), 64);
  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t id = lo; id < hi; ++id) slots[id] = fn(static_cast<LogicId>(id), decode(id));
  };
  if (workers <= 1) {
    run(0, family_size);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (family_size + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk, hi = std::min(family_size, lo + chunk);
      if (lo < hi) pool.emplace_back(run, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  if constexpr (std::is_same_v<R, bool>)
    return std::vector<bool>(slots.begin(), slots.end());
  else
    return slots;
}

}  // namespace trilogic
