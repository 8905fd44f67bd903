#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"

using namespace trilogic;
using TV = TruthValue;

namespace {

const LogicSpec lp = lp_logic();
const Formula p = atom("p"), q = atom("q");

Formula parse(const char* s) { return parse_formula(s); }

// Brute force over all valuations with the reference evaluator.
bool reference_entails(const std::vector<Formula>& premises, const Formula& conclusion) {
  std::vector<Formula> all = premises;
  all.push_back(conclusion);
  const auto atoms = atoms_of_all(all);
  return for_each_assignment(atoms.size(), all_values, [&](std::span<const TV> values) {
    const Valuation v = make_valuation(atoms, values);
    for (const Formula& f : premises)
      if (!is_designated(testing::reference::lp_eval(f, v))) return true;
    return is_designated(testing::reference::lp_eval(conclusion, v));
  });
}

}  // namespace

TEST_CASE("LP tables", "[semantics]") {
  CHECK(lp.neg(TV::b) == TV::b);
  CHECK(lp.imp(TV::b, TV::b) == TV::b);
  CHECK(lp.disj(TV::b, TV::f) == TV::b);
  CHECK(lp.neg.str() == "ftb");
  CHECK(lp.conj.str() == "tfbfffbfb");
  CHECK(lp.disj.str() == "ttttfbtbb");
  CHECK(lp.imp.str() == "tfbttttfb");
}

TEST_CASE("eval", "[semantics]") {
  CHECK(eval(parse("~p"), {{"p", TV::b}}, lp) == TV::b);
  CHECK(eval(parse("p -> q"), {{"p", TV::f}, {"q", TV::b}}, lp) == TV::t);
  CHECK(eval(parse("p & F"), {{"p", TV::b}}, lp) == TV::f);
  CHECK(eval(parse("T"), {}, lp) == TV::t);
  try {
    eval(parse("p & q"), {{"p", TV::t}}, lp);
    FAIL("no exception");
  } catch (const missing_atom_error& e) {
    CHECK(e.atom() == "q");
  }
}

TEST_CASE("eval agrees with the reference evaluator and with compiled evaluation", "[semantics][property]") {
  testing::FormulaGen gen(11);
  const std::vector<std::string> slots = {"p", "q", "r"};
  for (int i = 0; i < 3000; ++i) {
    const Formula f = gen.formula(7);
    const Valuation v = gen.valuation(slots);
    const std::array<TV, 3> values = {v.at("p"), v.at("q"), v.at("r")};
    INFO(to_string(f) << " at " << to_string(v));
    const TV expected = testing::reference::lp_eval(f, v);
    CHECK(eval(f, v, lp) == expected);
    CHECK(CompiledFormula(f, slots).run(values, lp) == expected);
  }
}

TEST_CASE("compiled evaluation handles formulas beyond the inline buffer", "[semantics]") {
  Formula f = p;
  for (int i = 0; i < 200; ++i) f = (i % 2) ? conjunction(f, negation(q)) : implication(q, f);
  const std::vector<std::string> slots = {"p", "q"};
  testing::FormulaGen gen(5);
  for (int i = 0; i < 50; ++i) {
    const Valuation v = gen.valuation(slots);
    const std::array<TV, 2> values = {v.at("p"), v.at("q")};
    CHECK(CompiledFormula(f, slots).run(values, lp) == eval(f, v, lp));
  }
}

TEST_CASE("entails", "[semantics]") {
  const auto r = entails({p, negation(p)}, q, lp);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(*r.witness == Valuation{{"p", TV::b}, {"q", TV::f}});
  CHECK(entails({}, parse("p | ~p"), lp).holds);
  CHECK(entails({p}, p, lp).holds);
  CHECK_FALSE(entails({p}, p, lp).witness);
  CHECK(entails({p, parse("p -> q")}, q, lp).holds);
  CHECK(entails({q}, parse("p -> q"), lp).holds);
  CHECK(is_valid(parse("p -> p"), lp));
  CHECK_FALSE(is_valid(parse("~(p & ~p) -> q | ~q -> p"), lp));
}

TEST_CASE("witnesses are the least refuting valuation", "[semantics]") {
  // p -> q fails at p=t,q=f first.
  const auto r = entails({}, parse("p -> q"), lp);
  REQUIRE(r.witness);
  CHECK(to_string(*r.witness) == "p=t,q=f");
  const auto e = equivalent(parse("p -> q"), parse("~p | q"), lp);
  CHECK_FALSE(e.holds);
  CHECK(to_string(*e.witness) == "p=b,q=f");
  CHECK(e.left_value == TV::f);
  CHECK(e.right_value == TV::b);
}

TEST_CASE("equivalent", "[semantics]") {
  CHECK(equivalent(parse("p & q"), parse("q & p"), lp).holds);
  CHECK(equivalent(p, p, lp).holds);
  CHECK(equivalent(parse("~~p"), p, lp).holds);
  CHECK_FALSE(equivalent(parse("p & ~p"), falsum(), lp).holds);
}

TEST_CASE("is_consistent", "[semantics]") {
  CHECK_FALSE(is_consistent(p, lp));
  CHECK(is_consistent(falsum(), lp));
  CHECK(is_consistent(parse("(p -> F) | (~p -> F)"), lp));
}

TEST_CASE("classical evaluation and consequence", "[semantics]") {
  CHECK(classical_entails({}, parse("p | ~p")));
  CHECK(classical_entails({p, negation(p)}, q));
  CHECK_FALSE(classical_entails({p}, q));
  CHECK(classical_eval(parse("p -> q"), {{"p", TV::t}, {"q", TV::f}}) == TV::f);
  CHECK_THROWS_AS(classical_eval(p, {{"p", TV::b}}), non_classical_valuation_error);
}

TEST_CASE("valuation text", "[semantics]") {
  CHECK(parse_valuation("p=t, q = b") == Valuation{{"p", TV::t}, {"q", TV::b}});
  CHECK(parse_valuation("").empty());
  CHECK_THROWS_AS(parse_valuation("p"), std::invalid_argument);
  CHECK_THROWS_AS(parse_valuation("p=t,p=f"), std::invalid_argument);
  CHECK_THROWS_AS(parse_valuation("p=x"), std::invalid_argument);
  CHECK(to_string(parse_valuation("q=f,p=b")) == "p=b,q=f");
}

TEST_CASE("for_each_assignment visits in lexicographic order", "[semantics]") {
  std::vector<std::string> seen;
  CHECK(for_each_assignment(2, all_values, [&](std::span<const TV> v) {
    seen.push_back({to_char(v[0]), to_char(v[1])});
    return true;
  }));
  CHECK(seen == std::vector<std::string>{"tt", "tf", "tb", "ft", "ff", "fb", "bt", "bf", "bb"});
  int calls = 0;
  CHECK(for_each_assignment(0, all_values, [&](std::span<const TV>) { return ++calls, true; }));
  CHECK(calls == 1);
  calls = 0;
  CHECK_FALSE(for_each_assignment(3, all_values, [&](std::span<const TV>) { return ++calls < 4; }));
  CHECK(calls == 4);
}

TEST_CASE("entailment properties on generated queries", "[semantics][property]") {
  testing::FormulaGen gen(23);
  for (int i = 0; i < 600; ++i) {
    std::vector<Formula> premises;
    const std::size_t n = gen.pick(3);
    for (std::size_t k = 0; k < n; ++k) premises.push_back(gen.formula(3));
    const Formula goal = gen.formula(3);
    INFO("goal " << to_string(goal));
    const auto r = entails(premises, goal, lp);
    CHECK(r.holds == reference_entails(premises, goal));
    if (r.holds) {
      // Monotonicity: extra premises keep the consequence.
      std::vector<Formula> more = premises;
      more.push_back(gen.formula(2));
      CHECK(entails(more, goal, lp).holds);
    } else {
      REQUIRE(r.witness);
      for (const Formula& f : premises) CHECK(is_designated(eval(f, *r.witness, lp)));
      CHECK(eval(goal, *r.witness, lp) == TV::f);
    }
    // Reflexivity.
    if (!premises.empty()) CHECK(entails(premises, premises.front(), lp).holds);
  }
}

TEST_CASE("equivalence is an equivalence relation", "[semantics][property]") {
  testing::FormulaGen gen(29, {"p", "q"});
  std::vector<Formula> pool;
  for (int i = 0; i < 60; ++i) pool.push_back(gen.formula(3));
  for (const Formula& a : pool) CHECK(equivalent(a, a, lp).holds);
  for (const Formula& a : pool)
    for (const Formula& b : pool) {
      const bool ab = equivalent(a, b, lp).holds;
      CHECK(ab == equivalent(b, a, lp).holds);
      if (!ab) continue;
      for (const Formula& c : pool)
        if (equivalent(b, c, lp).holds) CHECK(equivalent(a, c, lp).holds);
    }
}
