#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "testutil.hpp"
#include "unifint/finalg.hpp"
#include "unifint/terms.hpp"

using namespace unifint;
using testutil::ba2;
using testutil::bdl2;
using testutil::chain3;

namespace {

Signature lattice_sig() {
  return Signature("bdl", {{"meet", 2}, {"join", 2}, {"bot", 0}, {"top", 0}});
}

Term random_term(std::mt19937_64& rng, const Signature& sig,
                 const std::vector<std::string>& vars, int depth) {
  std::uniform_int_distribution<int> coin(0, 1);
  if (depth == 0 || coin(rng) == 0) {
    if (coin(rng) == 0) {
      std::uniform_int_distribution<size_t> pick(0, vars.size() - 1);
      return Term::variable(vars[pick(rng)]);
    }
    // a constant
    std::vector<int> consts;
    for (int op = 0; op < sig.op_count(); ++op)
      if (sig.arity(op) == 0) consts.push_back(op);
    std::uniform_int_distribution<size_t> pick(0, consts.size() - 1);
    return Term::app(sig.symbol(consts[pick(rng)]));
  }
  std::uniform_int_distribution<int> pick_op(0, sig.op_count() - 1);
  int op = pick_op(rng);
  std::vector<Term> args;
  for (int i = 0; i < sig.arity(op); ++i)
    args.push_back(random_term(rng, sig, vars, depth - 1));
  return Term::app(sig.symbol(op), std::move(args));
}

}  // namespace

TEST_CASE("signature invariants") {
  CHECK_THROWS_AS(Signature("bad", {{"f", 2}, {"f", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Signature("noconst", {{"f", 2}}), std::invalid_argument);
  Signature escape("noconst", {{"f", 2}}, /*allow_no_constants=*/true);
  CHECK(escape.op_count() == 1);
  CHECK_THROWS(escape.require_constant("free algebra on no generators"));
}

TEST_CASE("parse_term grammar cases") {
  Signature sig = lattice_sig();
  std::set<std::string> vars{"x", "y"};

  Term t = parse_term("meet(x, join(y, top))", sig, vars);
  CHECK(t.head == "meet");
  REQUIRE(t.args.size() == 2);
  CHECK(t.args[0] == Term::variable("x"));
  CHECK(t.args[1].head == "join");
  CHECK(t.args[1].args[1] == Term::app("top"));

  CHECK(parse_term("top", sig, vars) == Term::app("top"));
  CHECK(parse_term("  meet ( x ,y ) ", sig, vars) ==
        Term::app("meet", {Term::variable("x"), Term::variable("y")}));

  CHECK_THROWS_AS(parse_term("meet(x)", sig, vars), ParseError);
  CHECK_THROWS_AS(parse_term("unknown(x, y)", sig, vars), ParseError);
  CHECK_THROWS_AS(parse_term("meet(x, y) trailing", sig, vars), ParseError);
  // a variable identifier clashing with an operation symbol is a parse error
  CHECK_THROWS_AS(parse_term("meet(meet, y)", sig, vars), ParseError);
}

TEST_CASE("parse errors carry positions") {
  Signature sig = lattice_sig();
  try {
    parse_term("meet(x", sig, {"x"});
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position >= 6);
  }
}

TEST_CASE("substitute") {
  Substitution s{{"x", Term::app("meet", {Term::variable("y"), Term::variable("z")})}};
  CHECK(substitute(Term::variable("x"), s) == s.at("x"));
  Term m = Term::app("meet", {Term::variable("x"), Term::variable("y")});
  CHECK(substitute(m, {}) == m);
  Term mm = Term::app("meet", {Term::variable("x"), Term::variable("x")});
  Term expected = Term::app("meet", {Term::app("top"), Term::app("top")});
  CHECK(substitute(mm, {{"x", Term::app("top")}}) == expected);
}

TEST_CASE("evaluate") {
  FiniteAlgebra L = bdl2();
  Signature sig = L.sig();
  std::set<std::string> vars{"x", "y"};
  Term m = parse_term("meet(x, y)", sig, vars);
  CHECK(evaluate(m, L, {{"x", 1}, {"y", 0}}) == 0);
  CHECK(evaluate(parse_term("top", sig, vars), L, {}) == 1);
  // absorption: join(x, meet(x,y)) = x
  Term a = parse_term("join(x, meet(x, y))", sig, vars);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      CHECK(evaluate(a, L, {{"x", x}, {"y", y}}) == x);
  CHECK_THROWS(evaluate(m, L, {{"x", 1}}));
}

TEST_CASE("parse/print round-trip on random terms") {
  Signature sig = lattice_sig();
  std::vector<std::string> vars{"x", "y1", "y2"};
  std::set<std::string> var_set(vars.begin(), vars.end());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Term t = random_term(rng, sig, vars, 6);
    CHECK(parse_term(to_string(t), sig, var_set) == t);
  }
}

TEST_CASE("substitution lemma") {
  // evaluate(substitute(t,s), A, f) = evaluate(t, A, g), g(x) = evaluate(s(x), A, f)
  FiniteAlgebra A = chain3();
  Signature sig = A.sig();
  std::vector<std::string> vars{"x", "y"};
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Term t = random_term(rng, sig, vars, 3);
    Substitution s{{"x", random_term(rng, sig, vars, 2)},
                   {"y", random_term(rng, sig, vars, 2)}};
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        std::map<std::string, int> f{{"x", x}, {"y", y}};
        std::map<std::string, int> g{{"x", evaluate(s.at("x"), A, f)},
                                     {"y", evaluate(s.at("y"), A, f)}};
        CHECK(evaluate(substitute(t, s), A, f) == evaluate(t, A, g));
      }
  }
}

TEST_CASE("equation set files") {
  Signature sig = lattice_sig();
  std::string text =
      "# premises\n"
      "vars: x, y1, y2\n"
      "\n"
      "x = meet(y1, y2)\n"
      "join(x, y1) = y1  # comment\n";
  EquationSet es = parse_equation_set(text, sig);
  CHECK(es.vars == std::vector<std::string>{"x", "y1", "y2"});
  REQUIRE(es.equations.size() == 2);
  CHECK(to_string(es.equations[0]) == "x = meet(y1, y2)");
  es.check(sig);

  // undeclared variable
  CHECK_THROWS(parse_equation_set("vars: x\nx = y\n", sig));
  // missing header
  CHECK_THROWS(parse_equation_set("x = x\n", sig));
}

TEST_CASE("collect_variables first-occurrence order") {
  Signature sig = lattice_sig();
  Term t = parse_term("meet(join(y2, x), y1)", sig, {"x", "y1", "y2"});
  std::vector<std::string> out;
  collect_variables(t, out);
  CHECK(out == std::vector<std::string>{"y2", "x", "y1"});
}
