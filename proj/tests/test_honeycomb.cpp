#include "doctest.h"
#include "honey/honeycomb.hpp"
#include "honey/lr_oracle.hpp"

using namespace honey;

TEST_CASE("count_lr fixed values") {
  CHECK(count_lr({3, 2, 1}, {2, 1}, {2, 1}) == 2);
  CHECK(count_lr({1, 1}, {1}, {1}) == 1);
  CHECK(count_lr({2}, {1}, {1}) == 1);
  CHECK(count_lr({2, 2}, {2, 1}, {1}) == 1);
  CHECK(count_lr({2, 1}, {1}, {1, 1}) == 1);
  CHECK(count_lr({2, 1}, {1, 1}, {1}, 3) == 1);
  CHECK(count_lr({2, 2}, {2, 1}, {2, 1}) == 0);
  CHECK(count_lr({3, 1}, {3, 1}, {}) == 1);
  CHECK(count_lr({3, 1}, {1}, {1}) == 0);  // weight mismatch
  CHECK(count_lr({}, {}, {}, 0) == 1);
  CHECK(count_lr({}, {}, {}, 2) == 1);
}

TEST_CASE("count_lr is stable in n") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(count_lr({3, 2, 1}, {2, 1}, {2, 1}, std::max(n, 3)) == 2);
    CHECK(count_lr({2, 1}, {1, 1}, {1}, n) == 1);
    CHECK(count_lr({1, 1}, {1}, {1}, n) == 1);
  }
}

TEST_CASE("count_lr agrees with the tableau count on a small sweep") {
  std::vector<Partition> ps;
  for_each_partition(2, 2, [&](const Partition& p) { ps.push_back(p); });
  for (const auto& lam : ps)
    for (const auto& mu : ps)
      for (const auto& nu : ps) CHECK(count_lr(lam, mu, nu, 2) == lr_oracle(lam, mu, nu));
}

TEST_CASE("enumerated honeycombs validate and carry the right boundary") {
  GLFiber fiber({3, 2, 1}, {2, 1}, {2, 1}, 3);
  int seen = 0;
  fiber.enumerate([&](const GLHoneycomb& h) {
    ++seen;
    validate_gl(h);
    CHECK(is_integral_gl(h));
    auto b = gl_boundary(h);
    CHECK(b.lambda == std::vector<Rat>{3, 2, 1});
    CHECK(b.mu == std::vector<Rat>{2, 1, 0});
    CHECK(b.nu == std::vector<Rat>{2, 1, 0});
    return true;
  });
  CHECK(seen == 2);
}

TEST_CASE("single vertex honeycomb") {
  // n = 1: one B vertex, three whisker pins, nonempty exactly at lambda = mu + nu
  CHECK(count_lr({5}, {3}, {2}) == 1);
  CHECK(count_lr({5}, {3}, {1}) == 0);
  GLFiber fiber({5}, {3}, {2}, 1);
  fiber.enumerate([&](const GLHoneycomb& h) {
    CHECK(h.pos.at({VKind::B, 0, 1}) == BPoint{Rat(-3), Rat(-2), Rat(5)});
    return true;
  });
}

TEST_CASE("honeycomb validation rejects corrupted data") {
  GLFiber fiber({2}, {1}, {1}, 1);
  GLHoneycomb good;
  fiber.enumerate([&](const GLHoneycomb& h) {
    good = h;
    return false;
  });
  validate_gl(good);

  GLHoneycomb offPlane = good;
  offPlane.pos.begin()->second.x += 1;
  CHECK_THROWS_AS(validate_gl(offPlane), InputError);

  GLHoneycomb wrongShape = good;
  wrongShape.n = 2;
  CHECK_THROWS_AS(validate_gl(wrongShape), InputError);

  GLHoneycomb h2;
  GLFiber fiber2({2, 1}, {1, 1}, {1}, 2);
  fiber2.enumerate([&](const GLHoneycomb& h) {
    h2 = h;
    return false;
  });
  validate_gl(h2);
  // shift an interior vertex along its plane: breaks an edge constancy
  h2.pos[{VKind::A, 1, 2}].x += 1;
  h2.pos[{VKind::A, 1, 2}].y -= 1;
  CHECK_THROWS_AS(validate_gl(h2), InputError);
}

TEST_CASE("fiber input validation") {
  CHECK_THROWS_AS(count_lr({1, 2}, {}, {}), InputError);
  CHECK_THROWS_AS(count_lr({2, 1}, {1}, {1}, 1), InputError);
  CHECK_THROWS_AS(GLFiber({1}, {1}, {}, -1), InputError);
}
