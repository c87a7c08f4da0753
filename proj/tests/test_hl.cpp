#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "wpi/hl.hpp"

using namespace wpi;

TEST_CASE("canonical parameters") {
  HLParams p = canonical_hl(2, 1);
  REQUIRE(p.v.size() == 3);
  CHECK(p.v[0] == Complex(1.0));
  CHECK(p.v[1] == Complex(0.01));
  CHECK(p.v[2] == Complex(0.0001));
  CHECK_THROWS_AS(canonical_hl(1, 1, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("closed form values at (1,1)") {
  HLParams p{1, 1, {1.0, 0.01}};
  CriticalValueTable t = closed_form_values(p);
  REQUIRE(t.entries.size() == 4);
  std::vector<double> re;
  for (auto& [i, v] : t.entries) {
    CHECK(std::abs(v.imag()) < 1e-12);
    re.push_back(v.real());
  }
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(-2.002).epsilon(1e-9));
  CHECK(re[1] == doctest::Approx(-1.998).epsilon(1e-9));
  CHECK(re[2] == doctest::Approx(1.998).epsilon(1e-9));
  CHECK(re[3] == doctest::Approx(2.002).epsilon(1e-9));
}

TEST_CASE("brute force values") {
  CHECK(brute_force_values(HLParams{1, 2, canonical_hl(1, 2).v}).size() == 10);
  CHECK(closed_form_values(canonical_hl(2, 1)).entries.size() == 8);
  HLParams neg{1, 1, {-1.0, 0.01}};
  CHECK_THROWS_AS(closed_form_values(neg), std::domain_error);
}

TEST_CASE("match, invariance, circles") {
  for (auto [n, d] : {std::pair<int, int>{1, 1}, {1, 2}, {2, 1}}) {
    HLParams p = canonical_hl(n, d);
    CHECK(verify_hl_match(p, 1e-9));
    CHECK(verify_root_of_unity_invariance(p, 1e-9));
    CHECK(verify_circles(p, 1e-9));
  }
}

TEST_CASE("lambda_crit") {
  GParams g{1, 1, 0.0, 1.0, {}, 1.0, 0.0};
  CHECK(lambda_crit(g) == doctest::Approx(std::pow(0.5, 2.0 / 3.0)).epsilon(1e-10));
  // scaling lam0 up decreases lambda_crit
  GParams g4 = g;
  g4.lam0 = 4.0;
  CHECK(lambda_crit(g4) < lambda_crit(g));
  // with an intermediate lambda_i term the root moves down as well
  GParams g2{2, 1, 0.0, 1.0, {1.0}, 1.0, 0.0};
  CHECK(lambda_crit(g2) < lambda_crit(g));
}

TEST_CASE("continuation at lambda 0 reproduces seeds") {
  GParams g{1, 1, 0.0, 1.0, {}, 1.0, 0.1};
  auto pts = continue_critical_points(g, 0.0);
  REQUIRE(pts.size() == 4);
  int distinguished = 0;
  for (const auto& pt : pts) {
    CHECK(pt.converged);
    CHECK(pt.residual < 1e-12);
    if (pt.distinguished) ++distinguished;
  }
  CHECK(distinguished == 1);
}

TEST_CASE("continuation and value identity") {
  GParams g{1, 1, 0.1, 1.0, {}, 1.0, 0.1};
  double target = 0.5 * lambda_crit(g);
  g.lam = target;
  auto pts = continue_critical_points(g, target);
  CHECK(pts.size() == 4);
  for (const auto& pt : pts) {
    CHECK(pt.converged);
    CHECK(std::abs(pt.value - critical_value_formula(g, pt)) < 1e-8);
  }
  CHECK(verify_largest(g, target));
}

TEST_CASE("two-variable continuation") {
  GParams g{2, 1, 0.0, 1.0, {1.0}, 1.0, 0.1};
  double target = 0.5 * lambda_crit(g);
  auto pts = continue_critical_points(g, target);
  CHECK(pts.size() == 8);
  for (const auto& pt : pts) CHECK(pt.converged);
  CHECK(verify_largest(g, target));
}

TEST_CASE("preconditions") {
  GParams bad{1, 1, 0.0, 1.0, {}, -1.0, 0.0};
  CHECK_THROWS_AS(continue_critical_points(bad, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(verify_largest(bad, 0.0), std::invalid_argument);
  GParams g{1, 1, 0.0, 1.0, {}, 1.0, 0.0};
  CHECK_THROWS_AS(continue_critical_points(g, lambda_crit(g)), std::invalid_argument);
}
