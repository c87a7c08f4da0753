#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>

#include "wpi/presentation.hpp"

using namespace wpi;

namespace {

Word w(std::initializer_list<int> signed_gens) {
  // positive id k -> generator k-1 with +1, negative -> generator -k-1 inverted
  Word out;
  for (int g : signed_gens)
    out.push_back(g > 0 ? Letter{g - 1, 1} : Letter{-g - 1, -1});
  return out;
}

std::map<int, int> exponent_sums(const Word& r) {
  std::map<int, int> s;
  for (const Letter& l : r) s[l.gen] += l.sign;
  return s;
}

}  // namespace

TEST_CASE("word primitives") {
  CHECK(free_reduce(w({1, -1})).empty());
  CHECK(invert(w({1, 2})) == w({-2, -1}));
  CHECK(cyclic_reduce(w({1, 2, -1})) == w({2}));
  CHECK(word_pow(w({1}), 3) == w({1, 1, 1}));
  CHECK(word_pow(w({1, 2}), -1) == w({-2, -1}));
}

TEST_CASE("conjugate relators") {
  CHECK(conjugate_relators(w({1, 2, 3}), w({2, 3, 1})));
  CHECK(conjugate_relators(w({1, 2}), w({-2, -1})));  // inverse allowed
  CHECK_FALSE(conjugate_relators(w({1, 2}), w({-2, -1}), false));
  CHECK_FALSE(conjugate_relators(w({1, 2, 3}), w({1, 3, 2})));
}

TEST_CASE("delta words") {
  // (0,d): t2 t1 in prec_0 order
  CHECK(delta_word(0, 1, 0) == w({1, 2}));
  // (1,1,kappa=0): generators are listed in prec_0 order already
  CHECK(delta_word(1, 1, 0) == w({1, 2, 3, 4}));
  // (1,1,kappa=1): (2,1),(1,1),(2,2),(1,2) -> positions 1,3,0,2
  CHECK(delta_word(1, 1, 1) == w({2, 4, 1, 3}));
  CHECK_THROWS_AS(delta_word(1, 1, 2), std::invalid_argument);

  // each generator exactly once, exponent +1
  for (int kappa = 0; kappa <= 1; ++kappa) {
    Word dw = delta_word(1, 2, kappa);
    CHECK(dw.size() == 10);
    auto s = exponent_sums(dw);
    CHECK(s.size() == 10);
    for (auto [g, e] : s) CHECK(e == 1);
  }
}

TEST_CASE("discriminant presentation counts (1,1)") {
  Presentation p = build_presentation(1, 1, Variant::Discriminant);
  CHECK(p.generators.size() == 4);
  CHECK(p.relations.size() == 12);  // 1 + 5 + 2 + 4
  Presentation s = build_presentation(1, 1, Variant::Singularity);
  CHECK(s.relations.size() == 8);
}

TEST_CASE("type-iv relation at (1,1) after relabeling") {
  // relabeling t1=(1,1), t2=(1,2), t3=(2,1), t4=(2,2); generated order is
  // (2,2),(2,1),(1,2),(1,1), so generated id g maps to special-case id 3-g
  Presentation gen = build_presentation(1, 1, Variant::Discriminant);
  Presentation fix = special_fixture("n1d1");
  auto relabel = [](const Word& word) {
    Word out;
    for (const Letter& l : word) out.push_back({3 - l.gen, l.sign});
    return out;
  };
  CHECK(conjugate_relators(relabel(gen.relations[11].relator()), fix.relations[7].relator()));
  CHECK(conjugate_relators(relabel(gen.relations[8].relator()), fix.relations[8].relator()));
}

TEST_CASE("relator exponent sums by family") {
  Presentation p = build_presentation(1, 2, Variant::Moduli);
  const int m = 10;
  // i)-iii): zero exponent sum in every generator; iv): zero as well
  std::size_t idx = 0;
  for (; idx + 2 < p.relations.size(); ++idx) {
    auto s = exponent_sums(p.relations[idx].relator());
    int total = 0;
    for (auto [g, e] : s) total += e;
    CHECK(total == 0);
  }
  // v): total length 6(n+1)m, exponent sum 6(n+1) spread over the deltas
  const Relation& rel_v = p.relations[p.relations.size() - 2];
  CHECK(rel_v.lhs.size() == static_cast<std::size_t>(6 * 2 * m));
  // vi): length E*m with default E = 3d = 6
  const Relation& rel_vi = p.relations.back();
  CHECK(rel_vi.lhs.size() == static_cast<std::size_t>(6 * m));
  CHECK(p.meta.pact_exponent == 6);
}

TEST_CASE("moduli requires even d") {
  CHECK_THROWS_AS(build_presentation(1, 1, Variant::Moduli), std::invalid_argument);
  CHECK_NOTHROW(build_presentation(1, 1, Variant::Moduli, std::nullopt, true));
  CHECK_NOTHROW(build_presentation(1, 2, Variant::Moduli));
}

TEST_CASE("(1,2) braid pairs match the special-case condition") {
  Presentation gen = build_presentation(1, 2, Variant::Singularity);
  Presentation fix = special_fixture("n1d2");
  // count braid (length-6 relator) vs commutation relations in both
  auto census = [](const Presentation& p) {
    std::pair<int, int> counts{0, 0};  // commute, braid
    for (const auto& r : p.relations) {
      std::size_t len = r.canonical().size();
      if (len == 4) ++counts.first;
      if (len == 6) ++counts.second;
    }
    return counts;
  };
  auto cg = census(gen);
  // fixture also contains triangle relations of canonical length 8
  auto cf = census(fix);
  CHECK(cg.first == cf.first);
  CHECK(cg.second == cf.second);
}

TEST_CASE("zariski presentations") {
  Presentation z2 = build_zariski(2);
  CHECK(z2.generators.size() == 1);
  REQUIRE(z2.relations.size() == 1);
  CHECK(z2.relations[0].lhs == w({1, 1}));

  Presentation z3 = build_zariski(3);
  CHECK(z3.generators.size() == 2);
  CHECK(z3.relations.size() == 2);
  CHECK(z3.relations.back().lhs == w({1, 2, 2, 1}));
  CHECK_THROWS_AS(build_zariski(1), std::invalid_argument);
}

TEST_CASE("elliptic presentation") {
  Presentation p = build_elliptic();
  CHECK(p.generators.size() == 2);
  CHECK(p.relations.size() == 2);
  CHECK(p.relations[1].lhs.size() == 12);
}

TEST_CASE("special fixtures") {
  CHECK(special_fixture("n1d1").generators.size() == 4);
  CHECK(special_fixture("n1d1").relations.size() == 9);
  CHECK(special_fixture("n1d1_projective").relations.size() == 10);
  CHECK(special_fixture("n1d2").generators.size() == 10);
  CHECK_THROWS_AS(special_fixture("bogus"), std::invalid_argument);
}

TEST_CASE("serialization") {
  Presentation p = build_presentation(1, 2, Variant::Moduli);
  Presentation q = parse_json(serialize(p, SerialFormat::Json));
  CHECK(q.generators == p.generators);
  REQUIRE(q.relations.size() == p.relations.size());
  for (std::size_t k = 0; k < p.relations.size(); ++k) {
    CHECK(q.relations[k].lhs == p.relations[k].lhs);
    CHECK(q.relations[k].rhs == p.relations[k].rhs);
  }
  CHECK(q.meta.variant == p.meta.variant);
  CHECK(q.meta.pact_exponent == p.meta.pact_exponent);

  std::string gap = serialize(build_elliptic(), SerialFormat::Gap);
  CHECK(gap.find("FreeGroup") != std::string::npos);
  CHECK(gap.find("F.1*F.2*F.1*F.2^-1*F.1^-1*F.2^-1") != std::string::npos);
  std::string magma = serialize(build_elliptic(), SerialFormat::Magma);
  CHECK(magma.find("quo< F |") != std::string::npos);
  std::string text = serialize(build_zariski(2), SerialFormat::Text);
  CHECK(text.find("s_1 s_1 = 1") != std::string::npos);
}
