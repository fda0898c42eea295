#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "unifint/lgroup.hpp"

using namespace unifint;

namespace {

InequationSystem sys(const std::string& text) {
  return parse_inequation_system(text);
}

/// Random system: <= max_ineqs inequations, over the given variables,
/// coefficients in [-5, 5].
InequationSystem random_system(std::mt19937_64& rng,
                               const std::vector<std::string>& vars,
                               int max_ineqs = 6) {
  std::uniform_int_distribution<int> count(1, max_ineqs);
  std::uniform_int_distribution<long long> coef(-5, 5);
  InequationSystem S;
  S.variables = vars;
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    LinearTerm t;
    for (const auto& v : vars) {
      long long c = coef(rng);
      if (c != 0) t.coeffs[v] = c;
    }
    S.inequations.push_back(Inequation{t});
  }
  return S;
}

/// Biased rational sampler that hits boundaries: mixes small integers, halves
/// and thirds, and exact bound values computed from the system.
Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-6, 6);
  std::uniform_int_distribution<long long> den_pick(0, 2);
  static const long long dens[3] = {1, 2, 3};
  return Rational(num(rng), dens[den_pick(rng)]);
}

}  // namespace

TEST_CASE("parsing inequation files") {
  InequationSystem S = sys("0 <= 2*x + y1 - 3*y2\n# comment\n0 <= y1\n");
  REQUIRE(S.inequations.size() == 2);
  CHECK(S.variables == std::vector<std::string>{"x", "y1", "y2"});
  CHECK(S.inequations[0].rhs.coeff("x") == 2);
  CHECK(S.inequations[0].rhs.coeff("y2") == -3);
  CHECK(S.inequations[0].to_string() == "0 <= 2*x + y1 - 3*y2");

  // meets split into separate inequations
  InequationSystem M = sys("0 <= x /\\ y1 - x\n");
  REQUIRE(M.inequations.size() == 2);
  CHECK(M.inequations[1].rhs.coeff("y1") == 1);

  // equations split into two opposite inequations
  InequationSystem E = sys("2*x = y1\n");
  REQUIRE(E.inequations.size() == 2);
  CHECK(E.inequations[0].rhs.coeff("x") == 2);
  CHECK(E.inequations[1].rhs.coeff("x") == -2);

  // joins are rejected with a clear error
  CHECK_THROWS_AS(sys("0 <= x \\/ y1\n"), ParseError);
  // nonzero constants are not part of the signature
  CHECK_THROWS_AS(sys("0 <= x + 1\n"), ParseError);
  // literal zero is fine
  CHECK(sys("0 <= 0\n").inequations.size() == 1);
  CHECK_THROWS_AS(sys("1 <= x\n"), ParseError);
}

TEST_CASE("scale_to_common") {
  InequationSystem S = sys("0 <= y1 + x\n0 <= y2 - 3*x\n");
  ScaleResult r = scale_to_common(S, "x");
  CHECK(r.n == 3);
  CHECK(r.system.inequations[0].to_string() == "0 <= 3*x + 3*y1");
  CHECK(r.system.inequations[1].to_string() == "0 <= -3*x + y2");

  // x absent everywhere: unchanged, n = 1
  InequationSystem none = sys("0 <= y1\n");
  ScaleResult rn = scale_to_common(none, "x");
  CHECK(rn.n == 1);
  CHECK(rn.system.inequations[0] == none.inequations[0]);

  // already common: unchanged, n = 2
  InequationSystem common = sys("0 <= 2*x\n0 <= -2*x\n");
  ScaleResult rc = scale_to_common(common, "x");
  CHECK(rc.n == 2);
  CHECK(rc.system.inequations[0] == common.inequations[0]);
  CHECK(rc.system.inequations[1] == common.inequations[1]);
}

TEST_CASE("eliminate: pinned examples") {
  // the schematic instance
  EliminationResult r = eliminate(sys("0 <= y1 + 2*x\n0 <= y2 - 2*x\n"), "x");
  REQUIRE(r.pi.inequations.size() == 1);
  CHECK(r.pi.inequations[0].to_string() == "0 <= y1 + y2");
  CHECK(r.pi.variables == std::vector<std::string>{"y1", "y2"});
  CHECK(check_certificate(r));

  // no upper constraints: everything involving x drops
  EliminationResult unbounded = eliminate(sys("0 <= y1 + x\n"), "x");
  CHECK(unbounded.pi.inequations.empty());
  CHECK(check_certificate(unbounded));

  // scale then pair, x-free inequations kept
  EliminationResult mixed =
      eliminate(sys("0 <= y1 + x\n0 <= y2 - 3*x\n0 <= y1 - y2\n"), "x");
  REQUIRE(mixed.pi.inequations.size() == 2);
  CHECK(mixed.pi.inequations[0].to_string() == "0 <= 3*y1 + y2");
  CHECK(mixed.pi.inequations[1].to_string() == "0 <= y1 - y2");
  CHECK(mixed.n == 3);
  CHECK(check_certificate(mixed));
}

TEST_CASE("point_satisfies") {
  InequationSystem S = sys("0 <= y1 + y2\n");
  CHECK(point_satisfies(S, {{"y1", Rational(1)}, {"y2", Rational(-1)}}));
  CHECK_FALSE(point_satisfies(S, {{"y1", Rational(-1)}, {"y2", Rational(-1)}}));
  CHECK(point_satisfies(InequationSystem{}, {}));
  CHECK_THROWS(point_satisfies(S, {{"y1", Rational(0)}}));
}

TEST_CASE("witness_interval") {
  InequationSystem S = sys("0 <= y1 + 2*x\n0 <= y2 - 2*x\n");
  Interval iv = witness_interval(S, "x", {{"y1", Rational(4)}, {"y2", Rational(4)}});
  CHECK(iv.nonempty());
  CHECK(*iv.lo == Rational(-2));
  CHECK(*iv.hi == Rational(2));

  Interval empty =
      witness_interval(S, "x", {{"y1", Rational(4)}, {"y2", Rational(-5)}});
  CHECK_FALSE(empty.nonempty());
  CHECK(*empty.lo == Rational(-2));
  CHECK(*empty.hi == Rational(-5, 2));

  Interval free = witness_interval(sys("0 <= y1\n"), "x", {{"y1", Rational(0)}});
  CHECK(free.nonempty());
  CHECK_FALSE(free.lo.has_value());
  CHECK_FALSE(free.hi.has_value());
}

TEST_CASE("elimination equivalence fuzz") {
  std::mt19937_64 rng(101);
  std::vector<std::string> vars{"x", "y1", "y2", "y3"};
  for (int s = 0; s < 200; ++s) {
    InequationSystem S = random_system(rng, vars);
    EliminationResult r = eliminate(S, "x");
    CHECK(check_certificate(r));
    for (int p = 0; p < 200; ++p) {
      RationalPoint pt;
      for (const auto& v : vars)
        if (v != "x") pt[v] = random_rational(rng);
      bool pi_ok = point_satisfies(r.pi, pt);
      bool interval_ok = witness_interval(S, "x", pt).nonempty();
      REQUIRE(pi_ok == interval_ok);
    }
  }
}

TEST_CASE("scaling leaves the satisfaction set unchanged") {
  std::mt19937_64 rng(103);
  std::vector<std::string> vars{"x", "y1", "y2"};
  for (int s = 0; s < 100; ++s) {
    InequationSystem S = random_system(rng, vars);
    ScaleResult sc = scale_to_common(S, "x");
    for (int p = 0; p < 100; ++p) {
      RationalPoint pt;
      for (const auto& v : vars) pt[v] = random_rational(rng);
      CHECK(point_satisfies(S, pt) == point_satisfies(sc.system, pt));
    }
  }
}

TEST_CASE("elimination order does not change the satisfaction set") {
  std::mt19937_64 rng(107);
  std::vector<std::string> vars{"x", "w", "y1", "y2"};
  for (int s = 0; s < 60; ++s) {
    InequationSystem S = random_system(rng, vars, 4);
    InequationSystem xw = eliminate(eliminate(S, "x").pi, "w").pi;
    InequationSystem wx = eliminate(eliminate(S, "w").pi, "x").pi;
    for (int p = 0; p < 100; ++p) {
      RationalPoint pt{{"y1", random_rational(rng)}, {"y2", random_rational(rng)}};
      CHECK(point_satisfies(xw, pt) == point_satisfies(wx, pt));
    }
  }
}

TEST_CASE("certificates fail on tampering") {
  EliminationResult r = eliminate(sys("0 <= y1 + 2*x\n0 <= y2 - 2*x\n"), "x");
  REQUIRE(check_certificate(r));
  EliminationResult bad = r;
  bad.certificate[0].input_multipliers[0].second = 2;
  CHECK_FALSE(check_certificate(bad));
  EliminationResult bad2 = r;
  bad2.certificate[0].output_multiplier = 0;
  CHECK_FALSE(check_certificate(bad2));
}

TEST_CASE("linear term printing") {
  LinearTerm t;
  t.coeffs = {{"x", 2}, {"y1", 1}, {"y2", -3}};
  CHECK(t.to_string() == "2*x + y1 - 3*y2");
  CHECK(LinearTerm{}.to_string() == "0");
  LinearTerm neg;
  neg.coeffs = {{"x", -1}};
  CHECK(neg.to_string() == "-x");
}
