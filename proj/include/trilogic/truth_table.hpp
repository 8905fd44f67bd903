#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trilogic/formula.hpp"
#include "trilogic/logic_spec.hpp"
#include "trilogic/semantics.hpp"

namespace trilogic {

inline constexpr std::size_t max_table_atoms = 4;

/// One row per valuation in lexicographic order (atoms sorted, values
/// t < f < b). Designated results carry a trailing '*'.
///
///   p  q  | p -> q
///   t  t  | t *
///   t  f  | f
inline std::string render_truth_table(const Formula& f, const LogicSpec& logic) {
  const auto atoms = atoms_of(f);
  if (atoms.size() > max_table_atoms)
    throw std::invalid_argument("truth tables are limited to " + std::to_string(max_table_atoms) + " atoms, formula has " +
                                std::to_string(atoms.size()));
  std::vector<std::size_t> widths;
  std::ostringstream os;
  for (const auto& a : atoms) {
    widths.push_back(a.size());
    os << a << "  ";
  }
  os << "| " << f << '\n';
  const CompiledFormula c(f, atoms);
  for_each_assignment(atoms.size(), all_values, [&](std::span<const TruthValue> values) {
    for (std::size_t i = 0; i < values.size(); ++i) os << values[i] << std::string(widths[i] + 1, ' ');
    const TruthValue r = c.run(values, logic);
    os << "| " << r << (is_designated(r) ? " *" : "") << '\n';
    return true;
  });
  return os.str();
}

}  // namespace trilogic
