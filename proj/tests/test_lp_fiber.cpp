#include "doctest.h"
#include "honey/fiber.hpp"
#include "honey/lp.hpp"

using namespace honey;

TEST_CASE("lp box maximum") {
  LinearProgram lp;
  lp.numVars = 2;
  lp.lo = {Rat(0), Rat(0)};
  lp.hi = {Rat(3), Rat(2)};
  lp.objective = {{0, Rat(1)}, {1, Rat(1)}};
  auto r = solve_lp(lp);
  REQUIRE(r.status == LPStatus::OPTIMAL);
  CHECK(r.value == Rat(5));
  CHECK(r.point[0] == Rat(3));
  CHECK(r.point[1] == Rat(2));
}

TEST_CASE("lp with equality rows and free variables") {
  // maximize x - y subject to x + y == 3 and x - 2y <= 1
  LinearProgram lp;
  lp.numVars = 2;
  lp.rows.push_back({{{0, Rat(1)}, {1, Rat(1)}}, Rat(3), 0});
  lp.rows.push_back({{{0, Rat(1)}, {1, Rat(-2)}}, Rat(1), -1});
  lp.objective = {{0, Rat(1)}, {1, Rat(-1)}};
  auto r = solve_lp(lp);
  REQUIRE(r.status == LPStatus::OPTIMAL);
  CHECK(r.value == Rat(5, 3));
  CHECK(r.point[0] == Rat(7, 3));
  CHECK(r.point[1] == Rat(2, 3));
}

TEST_CASE("lp infeasible and unbounded detection") {
  LinearProgram bad;
  bad.numVars = 1;
  bad.lo = {Rat(1)};
  bad.hi = {std::nullopt};
  bad.rows.push_back({{{0, Rat(1)}}, Rat(0), -1});  // x <= 0 against lo = 1
  CHECK(solve_lp(bad).status == LPStatus::INFEASIBLE);
  CHECK(!lp_feasible(bad));

  LinearProgram crossed;
  crossed.numVars = 1;
  crossed.lo = {Rat(2)};
  crossed.hi = {Rat(1)};
  CHECK(solve_lp(crossed).status == LPStatus::INFEASIBLE);

  LinearProgram unb;
  unb.numVars = 1;
  unb.lo = {Rat(0)};
  unb.hi = {std::nullopt};
  unb.objective = {{0, Rat(1)}};
  CHECK(solve_lp(unb).status == LPStatus::UNBOUNDED);
  CHECK(lp_feasible(unb));
}

TEST_CASE("lp degenerate pivoting terminates") {
  // a classic cycling instance for naive pivot rules
  LinearProgram lp;
  lp.numVars = 4;
  lp.lo = {Rat(0), Rat(0), Rat(0), Rat(0)};
  lp.hi = {std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  lp.rows.push_back(
      {{{0, Rat(1, 4)}, {1, Rat(-60)}, {2, Rat(-1, 25)}, {3, Rat(9)}}, Rat(0), -1});
  lp.rows.push_back(
      {{{0, Rat(1, 2)}, {1, Rat(-90)}, {2, Rat(-1, 50)}, {3, Rat(3)}}, Rat(0), -1});
  lp.rows.push_back({{{2, Rat(1)}}, Rat(1), -1});
  lp.objective = {{0, Rat(3, 4)}, {1, Rat(-150)}, {2, Rat(1, 50)}, {3, Rat(-6)}};
  auto r = solve_lp(lp);
  REQUIRE(r.status == LPStatus::OPTIMAL);
  CHECK(r.value == Rat(1, 20));
}

TEST_CASE("lp with no variables") {
  LinearProgram lp;
  CHECK(lp_feasible(lp));
  auto r = solve_lp(lp);
  REQUIRE(r.status == LPStatus::OPTIMAL);
  CHECK(r.value == Rat(0));
  CHECK(r.point.empty());
}

TEST_CASE("fiber identifications and pins") {
  FiberSystem fs;
  int a = fs.add_slot(), b = fs.add_slot(), c = fs.add_slot();
  fs.require_offset(b, a, Rat(2));  // b = a + 2
  fs.pin_slot(c, Rat(5));
  fs.add_linear({{a, Rat(1)}, {b, Rat(1)}, {c, Rat(1)}}, Rat(9), true);
  fs.bound_slot(a, Rat(-100), Rat(100));
  fs.freeze();
  REQUIRE(fs.feasible());
  CHECK(fs.num_classes() == 1);
  std::vector<std::vector<Rat>> hits;
  Int count = fs.enumerate_integral([&](const std::vector<Rat>& v) {
    hits.push_back(v);
    return true;
  });
  CHECK(count == 1);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0][(size_t)a] == Rat(1));
  CHECK(hits[0][(size_t)b] == Rat(3));
  CHECK(hits[0][(size_t)c] == Rat(5));
}

TEST_CASE("fiber pin conflicts mark infeasibility") {
  FiberSystem fs;
  int a = fs.add_slot(), b = fs.add_slot();
  fs.require_offset(b, a, Rat(1));
  fs.pin_slot(a, Rat(0));
  fs.pin_slot(b, Rat(2));
  fs.freeze();
  CHECK(!fs.feasible());
  CHECK(fs.enumerate_integral([](const std::vector<Rat>&) { return true; }) == 0);
}

TEST_CASE("fiber integral enumeration over a polytope") {
  FiberSystem fs;
  int x = fs.add_slot(), y = fs.add_slot();
  fs.bound_slot(x, Rat(0), Rat(5));
  fs.bound_slot(y, Rat(0), Rat(5));
  fs.add_linear({{x, Rat(1)}, {y, Rat(1)}}, Rat(3), false);  // x + y >= 3
  fs.freeze();
  REQUIRE(fs.feasible());
  Int count = fs.enumerate_integral([](const std::vector<Rat>&) { return true; });
  CHECK(count == 30);

  // early stop after the first hit
  Int stopped = fs.enumerate_integral([](const std::vector<Rat>&) { return false; });
  CHECK(stopped == 1);

  // the same system as a linear program
  auto lp = fs.to_lp();
  auto ex = fs.class_expr({{x, Rat(1)}, {y, Rat(2)}});
  lp.objective = ex.terms;
  auto r = solve_lp(lp);
  REQUIRE(r.status == LPStatus::OPTIMAL);
  CHECK(r.value + ex.constant == Rat(15));
  auto slots = fs.slots_from_point(r.point);
  CHECK(slots[(size_t)x] == Rat(5));
  CHECK(slots[(size_t)y] == Rat(5));
}

TEST_CASE("fiber rejects non-integer offsets in integral enumeration") {
  FiberSystem fs;
  int a = fs.add_slot(), b = fs.add_slot();
  fs.require_offset(b, a, Rat(1, 2));
  fs.bound_slot(a, Rat(0), Rat(3));
  fs.bound_slot(b, Rat(0), Rat(3));
  fs.freeze();
  REQUIRE(fs.feasible());
  CHECK(fs.enumerate_integral([](const std::vector<Rat>&) { return true; }) == 0);
}

TEST_CASE("fiber enumeration with half-integer pin is empty") {
  FiberSystem fs;
  int a = fs.add_slot();
  fs.pin_slot(a, Rat(1, 2));
  fs.freeze();
  REQUIRE(fs.feasible());
  CHECK(fs.enumerate_integral([](const std::vector<Rat>&) { return true; }) == 0);
}
