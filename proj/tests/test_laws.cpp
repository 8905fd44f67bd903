#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "support/generators.hpp"

using namespace trilogic;
using TV = TruthValue;

namespace {

const LogicSpec lp = lp_logic();

std::map<std::string, Formula> atoms_for_metavariables() {
  return {{"A", atom("a")}, {"B", atom("b")}, {"C", atom("c")}};
}

}  // namespace

TEST_CASE("built-in laws", "[laws]") {
  REQUIRE(builtin_laws().size() == 23);
  CHECK(builtin_law(1).lhs == parse_formula("A & F", AtomSyntax::metavariable));
  CHECK(builtin_law(1).rhs == falsum());
  CHECK(builtin_law(17).lhs == parse_formula("~(A & B)", AtomSyntax::metavariable));
  CHECK(builtin_law(17).rhs == parse_formula("~A | ~B", AtomSyntax::metavariable));
  CHECK(builtin_law(22).lhs == parse_formula("A & ~A", AtomSyntax::metavariable));
  CHECK(builtin_law(22).rhs == falsum());
  CHECK(builtin_law(23).name == "L23");
  CHECK_THROWS_AS(builtin_law(0), std::out_of_range);
  CHECK_THROWS_AS(builtin_law(24), std::out_of_range);
}

TEST_CASE("laws under LP", "[laws]") {
  CHECK(check_law(builtin_law(1), lp));
  CHECK_FALSE(check_law(builtin_law(23), lp));
  CHECK_FALSE(counterexample(builtin_law(1), lp));

  auto c = counterexample(builtin_law(23), lp);
  REQUIRE(c);
  CHECK(c->assignment == MetaAssignment{{"A", TV::b}});
  CHECK(c->lhs_value == TV::b);
  CHECK(c->rhs_value == TV::t);

  c = counterexample(builtin_law(21), lp);
  REQUIRE(c);
  CHECK(c->assignment == MetaAssignment{{"A", TV::b}, {"B", TV::f}});
  CHECK(c->lhs_value == TV::f);
  CHECK(c->rhs_value == TV::b);

  c = counterexample(builtin_law(22), lp);
  REQUIRE(c);
  CHECK(c->assignment == MetaAssignment{{"A", TV::b}});
  CHECK(c->lhs_value == TV::b);
  CHECK(c->rhs_value == TV::f);
}

TEST_CASE("~(A -> B) == A & ~B fails under LP at A=b, B=f", "[laws]") {
  // b -> f is f, so the left side is t; b & ~f is b.
  const auto c = counterexample(builtin_law(19), lp);
  REQUIRE(c);
  CHECK(c->assignment == MetaAssignment{{"A", TV::b}, {"B", TV::f}});
  CHECK(c->lhs_value == TV::t);
  CHECK(c->rhs_value == TV::b);
}

TEST_CASE("LP law profile", "[laws]") {
  const LawProfile p = law_profile(lp);
  for (int n = 1; n <= 18; ++n) CHECK(p.satisfies(n));
  CHECK_FALSE(p.satisfies(19));
  CHECK(p.satisfies(20));
  for (int n = 21; n <= 23; ++n) CHECK_FALSE(p.satisfies(n));
  CHECK(p.str() == "11111111111111111101000");
  CHECK(LawProfile::from_string(p.str()) == p);
  CHECK(p.count() == 19);
  CHECK_THROWS_AS(LawProfile::from_string("101"), std::invalid_argument);
  CHECK_THROWS_AS(LawProfile::from_string(std::string(22, '1') + "x"), std::invalid_argument);
}

TEST_CASE("double negation fails whenever neg(b) = t", "[laws]") {
  for (const LogicSpec& l : enumerate_logics()) {
    if (l.neg(TV::b) != TV::t) continue;
    const auto c = counterexample(builtin_law(9), l);
    REQUIRE(c);
    CHECK(c->assignment == MetaAssignment{{"A", TV::b}});
    CHECK(c->lhs_value == TV::f);
  }
}

TEST_CASE("value-level checks agree with formula-level substitution", "[laws][property]") {
  testing::FormulaGen gen(53, {"p", "q"});
  for (int i = 0; i < 500; ++i) {
    const LogicSpec l = decode(gen.logic_id());
    const LawSchema& law = builtin_law(static_cast<int>(gen.pick(23)) + 1);
    const std::map<std::string, Formula> sub = {
        {"A", gen.formula(2)}, {"B", gen.formula(2)}, {"C", gen.formula(2)}};
    const Formula lhs = substitute(law.lhs, sub), rhs = substitute(law.rhs, sub);
    INFO(law.name << " instance " << to_string(lhs) << " == " << to_string(rhs));
    const bool holds = check_law(law, l);
    if (holds) CHECK(equivalent(lhs, rhs, l).holds);
    // Fresh atoms for the metavariables give the generic instance.
    const auto generic = atoms_for_metavariables();
    CHECK(holds == equivalent(substitute(law.lhs, generic), substitute(law.rhs, generic), l).holds);
  }
}

TEST_CASE("counterexamples are genuine", "[laws][property]") {
  testing::FormulaGen gen(59);
  for (int i = 0; i < 300; ++i) {
    const LogicSpec l = decode(gen.logic_id());
    for (const LawSchema& law : builtin_laws()) {
      const auto c = counterexample(law, l);
      if (!c) continue;
      CHECK(eval(law.lhs, c->assignment, l) == c->lhs_value);
      CHECK(eval(law.rhs, c->assignment, l) == c->rhs_value);
      CHECK(c->lhs_value != c->rhs_value);
    }
  }
}

TEST_CASE("axiom schemas", "[laws]") {
  REQUIRE(axiom_schemas().size() == 15);
  for (const SchemaVerdict& v : check_axiom_schemas(lp)) {
    INFO(v.name << ": " << to_string(v.formula));
    CHECK(v.valid);
  }
  const SchemaVerdict collapse = check_schema(classical_collapse_schema(), lp);
  CHECK_FALSE(collapse.valid);
  REQUIRE(collapse.counterexample);
  CHECK(*collapse.counterexample == MetaAssignment{{"A", TV::b}, {"B", TV::f}});
  CHECK(collapse.counterexample_value == TV::f);

  const AxiomSchema ex_falso{"ex-falso", parse_formula("F -> A", AtomSyntax::metavariable)};
  for (const LogicSpec& l : enumerate_logics()) CHECK(check_schema(ex_falso, l).valid);
}

TEST_CASE("modus ponens preserves designation", "[laws]") {
  CHECK(check_mp_preservation(lp));
  for (const LogicSpec& l : enumerate_logics()) CHECK(check_mp_preservation(l));
  LogicSpec bad = lp;
  bad.imp.set(TV::b, TV::f, TV::b);
  CHECK_FALSE(check_mp_preservation(bad));
}

TEST_CASE("law definitions", "[laws]") {
  const LawSchema law = parse_law("dm: ~(A & B) == ~A | ~B");
  CHECK(law.name == "dm");
  CHECK(check_law(law, lp));
  CHECK_THROWS_AS(parse_law("no colon A == A"), std::invalid_argument);
  CHECK_THROWS_AS(parse_law("x: A"), std::invalid_argument);
  CHECK_THROWS_AS(parse_law("x: A == B == C"), std::invalid_argument);
  CHECK_THROWS_AS(parse_law(": A == A"), std::invalid_argument);
  CHECK_THROWS_AS(parse_law("x: A == D"), parse_error);
  CHECK_THROWS_AS(make_law("x", "A", "q"), parse_error);
}

TEST_CASE("law files", "[laws]") {
  std::istringstream in(
      "# comment\n"
      "\n"
      "comm: A & B == B & A\r\n"
      "  # indented comment\n"
      "lem: A | ~A == T\n");
  const auto laws = read_laws(in);
  REQUIRE(laws.size() == 2);
  CHECK(laws[0].name == "comm");
  CHECK(laws[1].rhs == verum());

  std::istringstream bad("ok: A == A\n\nbroken: A & == A\n");
  try {
    read_laws(bad);
    FAIL("no exception");
  } catch (const law_file_error& e) {
    CHECK(e.line() == 3);
  }
}
