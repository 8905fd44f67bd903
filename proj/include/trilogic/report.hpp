#pragma once

#include <algorithm>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "trilogic/analysis.hpp"
#include "trilogic/family.hpp"
#include "trilogic/laws.hpp"

namespace trilogic {

struct Claim {
  std::string label;
  std::string expected;
  std::string computed;
  bool match = false;
  std::vector<std::string> witnesses;
};

inline Claim make_claim(std::string label, std::string expected, std::string computed,
                        std::vector<std::string> witnesses = {}) {
  const bool match = expected == computed;
  return {std::move(label), std::move(expected), std::move(computed), match, std::move(witnesses)};
}

struct ReplicationReport {
  std::vector<Claim> claims;

  bool all_match() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.match; });
  }
  std::size_t mismatches() const {
    return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [](const Claim& c) { return !c.match; }));
  }
};

namespace detail {
inline std::vector<std::string> id_strings(const std::vector<LogicId>& ids) {
  std::vector<std::string> out;
  for (LogicId id : ids) out.push_back(std::to_string(id));
  return out;
}

inline std::string describe(const LawCounterexample& c) {
  return to_string(c.assignment) + " lhs=" + to_char(c.lhs_value) + " rhs=" + to_char(c.rhs_value);
}

inline std::string describe_law_range(const LogicSpec& logic, int lo, int hi, std::vector<std::string>& failing) {
  for (int n = lo; n <= hi; ++n)
    if (auto c = counterexample(builtin_law(n), logic)) failing.push_back(builtin_law(n).name + ": " + describe(*c));
  return failing.empty() ? "all hold" : std::to_string(failing.size()) + " fail";
}

template <class Pred>
Claim family_wide(std::string label, Pred pred) {
  const auto flags = map_family([&](LogicId, const LogicSpec& logic) { return static_cast<bool>(pred(logic)); });
  std::vector<std::string> failing;
  for (std::size_t id = 0; id < flags.size(); ++id)
    if (!flags[id] && failing.size() < 8) failing.push_back(std::to_string(id));
  const auto holding = static_cast<std::size_t>(std::count(flags.begin(), flags.end(), true));
  return make_claim(std::move(label), std::to_string(family_size), std::to_string(holding), failing);
}
}  // namespace detail

/// Recomputes each reference result and pairs it with its expected value.
inline ReplicationReport replicate_report() {
  ReplicationReport report;
  auto add = [&](Claim c) { report.claims.push_back(std::move(c)); };
  const LogicSpec lp = lp_logic();
  const LogicId lp_id = encode(lp);

  // Family size: distinct valid members.
  {
    std::set<LogicId> ids;
    std::size_t valid = 0;
    for (const LogicSpec& logic : enumerate_logics()) {
      if (!satisfies_family_constraints(logic)) continue;
      ++valid;
      ids.insert(encode(logic));
    }
    add(make_claim("family size (distinct members satisfying (a)-(b))", "8192",
                   std::to_string(std::min(valid, ids.size()))));
  }

  // Staged proof of uniqueness.
  const std::array<std::pair<Connective, const char*>, 4> stages = {{{Connective::conjunction, "1,3,5,7"},
                                                                      {Connective::disjunction, "2,4,6,8"},
                                                                      {Connective::negation, "9"},
                                                                      {Connective::implication, "10-12"}}};
  const std::array<const char*, 4> candidate_counts = {"8", "32", "2", "16"};
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const auto [c, laws] = stages[i];
    const StageResult r = stage_analysis(c, parse_law_set(laws));
    const std::string name(connective_name(c));
    add(make_claim("stage " + name + ": candidate tables", candidate_counts[i], std::to_string(r.candidates)));
    add(make_claim("stage " + name + ": tables compatible with laws " + laws, "1", std::to_string(r.compatible),
                   r.compatible_tables));
  }

  {
    std::vector<std::string> failing;
    std::string computed = detail::describe_law_range(lp, 1, 12, failing);
    add(make_claim("LP satisfies laws 1-12", "all hold", computed, failing));
  }
  {
    std::vector<std::string> failing;
    std::string computed = detail::describe_law_range(lp, 13, 20, failing);
    add(make_claim("LP satisfies laws 13-20", "all hold", computed, failing));
  }
  const std::array<std::pair<int, const char*>, 3> failures = {
      {{21, "A=b,B=f lhs=f rhs=b"}, {22, "A=b lhs=b rhs=f"}, {23, "A=b lhs=b rhs=t"}}};
  for (const auto& [n, witness] : failures) {
    const auto c = counterexample(builtin_law(n), lp);
    add(make_claim("LP violates law " + std::to_string(n), witness, c ? detail::describe(*c) : "holds"));
  }

  {
    const auto ids = count_satisfying(parse_law_set("1-12"));
    add(make_claim("logics satisfying laws 1-12", "1", std::to_string(ids.size()), detail::id_strings(ids)));
    const bool is_lp = ids.size() == 1 && decode(ids.front()) == lp;
    add(make_claim("the unique logic satisfying laws 1-12 is LP", "true", is_lp ? "true" : "false"));
  }
  {
    const auto ids = count_satisfying(parse_law_set("1-9"));
    add(make_claim("logics satisfying laws 1-9", "16", std::to_string(ids.size())));
  }
  {
    const auto ids = count_satisfying(parse_law_set("1-8"));
    add(make_claim("logics satisfying laws 1-8", "32", std::to_string(ids.size())));
  }
  {
    const auto ids = count_satisfying(parse_law_set("1-8,10-12"));
    add(make_claim("logics satisfying laws 1-8 and 10-12", "4", std::to_string(ids.size()), detail::id_strings(ids)));
    const bool has_lp = std::find(ids.begin(), ids.end(), lp_id) != ids.end();
    add(make_claim("LP is among the logics satisfying laws 1-8 and 10-12", "true", has_lp ? "true" : "false"));
  }

  add(detail::family_wide("members satisfying the designation constraints",
                          [](const LogicSpec& l) { return satisfies_family_constraints(l).ok; }));
  add(detail::family_wide("members agreeing with classical logic on {t,f}", agrees_classically));
  add(detail::family_wide("members where modus ponens preserves designation", check_mp_preservation));
  add(detail::family_wide("members with internalized consistency", check_internalized_consistency));
  add(detail::family_wide("members with internalized equivalence", check_internalized_equivalence));
  add(detail::family_wide("members refuting {p, ~p} |= q", [](const LogicSpec& l) {
    const auto r = paraconsistency_probe(l);
    return !r.holds && r.witness == Valuation{{"p", TruthValue::b}, {"q", TruthValue::f}};
  }));

  {
    std::size_t valid = 0;
    std::vector<std::string> invalid;
    for (const SchemaVerdict& v : check_axiom_schemas(lp)) {
      if (v.valid)
        ++valid;
      else
        invalid.push_back(v.name + ": " + to_string(*v.counterexample));
    }
    add(make_claim("axiom schemas valid under LP", "15", std::to_string(valid), invalid));
    const SchemaVerdict collapse = check_schema(classical_collapse_schema(), lp);
    add(make_claim("~A -> (A -> B) is refuted under LP", "A=b,B=f",
                   collapse.valid ? "valid" : to_string(*collapse.counterexample)));
  }

  {
    const ScanResult scan = tautology_coincidence_scan(3, 2, lp);
    std::vector<std::string> shown;
    for (std::size_t i = 0; i < scan.mismatches.size() && i < 8; ++i) shown.push_back(to_string(scan.mismatches[i]));
    add(make_claim("LP and classical tautologies differ (depth <= 3, atoms p, q; " + std::to_string(scan.scanned) +
                       " formulas)",
                   "0", std::to_string(scan.mismatches.size()), shown));
  }
  return report;
}

inline void print_report(std::ostream& os, const ReplicationReport& report) {
  for (const Claim& c : report.claims) {
    os << (c.match ? "[ok]   " : "[FAIL] ") << c.label << ": expected " << c.expected << ", computed " << c.computed
       << '\n';
    for (const std::string& w : c.witnesses) os << "         " << w << '\n';
  }
  os << report.claims.size() - report.mismatches() << '/' << report.claims.size() << " claims match\n";
}

}  // namespace trilogic
