#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <set>

#include "wpi/group_analysis.hpp"

using namespace wpi;

namespace {

IntegerMatrix mat(std::size_t r, std::size_t c, std::initializer_list<long> vals) {
  IntegerMatrix m(r, c);
  std::size_t k = 0;
  for (long v : vals) m.a[k++] = v;
  return m;
}

std::vector<Int> snf_diag(const IntegerMatrix& m) { return smith_normal_form(m).diagonal; }

Presentation from_relators(int ngens, std::vector<Word> relators) {
  Presentation p;
  for (int g = 0; g < ngens; ++g) p.generators.push_back("g" + std::to_string(g));
  for (auto& r : relators) p.relations.push_back({std::move(r), Word{}});
  return p;
}

Word pw(std::initializer_list<std::pair<int, int>> ls) {
  Word w;
  for (auto [g, s] : ls) w.push_back({g, s});
  return w;
}

std::size_t perm_order(const std::vector<std::vector<int>>& gens) {
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> q;
  std::vector<int> id(gens[0].size());
  for (std::size_t k = 0; k < id.size(); ++k) id[k] = static_cast<int>(k);
  seen.insert(id);
  q.push_back(id);
  while (!q.empty()) {
    auto cur = q.front();
    q.pop_front();
    for (const auto& g : gens) {
      std::vector<int> nxt(cur.size());
      for (std::size_t k = 0; k < cur.size(); ++k) nxt[k] = g[cur[k]];
      if (seen.insert(nxt).second) q.push_back(nxt);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("smith normal form basics") {
  CHECK(snf_diag(mat(2, 2, {2, 0, 0, 3})) == std::vector<Int>{1, 6});
  CHECK(snf_diag(IntegerMatrix::identity(3)) == std::vector<Int>{1, 1, 1});
  CHECK(smith_normal_form(mat(1, 1, {0})).rank == 0);
  CHECK(snf_diag(mat(2, 3, {2, 4, 4, -6, 6, 12})) == std::vector<Int>{2, 6});
}

TEST_CASE("snf divisibility chain and invariance") {
  IntegerMatrix m = mat(3, 3, {6, 10, 15, 4, 9, 25, 14, 21, 33});
  auto s = smith_normal_form(m);
  for (std::size_t k = 0; k + 1 < s.diagonal.size(); ++k)
    CHECK(s.diagonal[k + 1] % s.diagonal[k] == 0);

  // transpose invariance
  IntegerMatrix t(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.at(j, i) = m.at(i, j);
  CHECK(snf_diag(t) == s.diagonal);

  // row/column permutation invariance
  IntegerMatrix p(3, 3);
  int rp[3] = {2, 0, 1}, cp[3] = {1, 2, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p.at(i, j) = m.at(rp[i], cp[j]);
  CHECK(snf_diag(p) == s.diagonal);
}

TEST_CASE("abelianizations") {
  CHECK(abelianization(build_elliptic()) == std::vector<Int>{12});
  CHECK(abelianization(build_zariski(3)) == std::vector<Int>{4});
  CHECK(abelianization(build_zariski(4)) == std::vector<Int>{6});
  CHECK(abelianization(build_presentation(1, 1, Variant::Discriminant)) ==
        std::vector<Int>{0});
  CHECK(abelianization(build_presentation(1, 2, Variant::Discriminant)) ==
        std::vector<Int>{0});
  CHECK(abelianization(build_presentation(2, 1, Variant::Discriminant)) ==
        std::vector<Int>{0});
  CHECK(abelianization(build_presentation(1, 2, Variant::Moduli)) == std::vector<Int>{60});
  CHECK(abelianization(special_fixture("n1d1")) == std::vector<Int>{0});
}

TEST_CASE("matrix inverses") {
  IntegerMatrix u = mat(2, 2, {1, 1, 0, 1});
  CHECK(mat_mul(u, mat_inverse_unimodular(u)) == IntegerMatrix::identity(2));
  CHECK_THROWS_AS(mat_inverse_unimodular(mat(2, 2, {2, 0, 0, 1})), std::invalid_argument);
  IntegerMatrix w = mat(2, 2, {2, 1, 1, 1});
  IntegerMatrix wi = mat_inverse_mod(w, 5);
  CHECK(mat_mod(mat_mul(w, wi), 5) == IntegerMatrix::identity(2));
}

TEST_CASE("representation checks") {
  Presentation p = build_elliptic();
  std::vector<IntegerMatrix> images{mat(2, 2, {1, 1, 0, 1}), mat(2, 2, {1, 0, -1, 1})};
  CHECK(check_representation(p, images).ok);
  for (int m : {2, 3, 5}) CHECK(check_representation(p, images, Int(m)).ok);

  Presentation bad = p;
  Word pow5;
  for (int k = 0; k < 5; ++k) {
    pow5.push_back({0, 1});
    pow5.push_back({1, 1});
  }
  bad.relations.push_back({pow5, Word{}});
  auto rep = check_representation(bad, images);
  CHECK_FALSE(rep.ok);
  CHECK(rep.relation_ok[0]);
  CHECK(rep.relation_ok[1]);
  CHECK_FALSE(rep.relation_ok[2]);

  // identity images satisfy any commutator-type relator
  Presentation comm = from_relators(2, {pw({{0, 1}, {1, 1}, {0, -1}, {1, -1}})});
  std::vector<IntegerMatrix> ids{IntegerMatrix::identity(2), IntegerMatrix::identity(2)};
  CHECK(check_representation(comm, ids).ok);
}

TEST_CASE("matrix group closure") {
  std::vector<IntegerMatrix> images{mat(2, 2, {1, 1, 0, 1}), mat(2, 2, {1, 0, -1, 1})};
  CHECK(matrix_group_closure(images, 2) == 6);
  CHECK(matrix_group_closure(images, 3) == 24);
  CHECK(matrix_group_closure({IntegerMatrix::identity(2)}, 7) == 1);
  CHECK_THROWS_AS(matrix_group_closure(images, 5, 10), std::runtime_error);
}

TEST_CASE("todd-coxeter against permutation oracles") {
  // <a,b | a^2, b^2, (ab)^3>: symmetric group on 3 letters
  Presentation s3 = from_relators(
      2, {pw({{0, 1}, {0, 1}}), pw({{1, 1}, {1, 1}}),
          pw({{0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}})});
  CosetResult r = todd_coxeter(s3, {}, 100);
  CHECK_FALSE(r.exceeded);
  CHECK(r.index == perm_order({{1, 0, 2}, {0, 2, 1}}));
  CHECK(r.index == 6);

  // subgroup <a> has index 3
  CosetResult rs = todd_coxeter(s3, {pw({{0, 1}})}, 100);
  CHECK(rs.index == 3);

  Presentation c5 = from_relators(1, {word_pow(pw({{0, 1}}), 5)});
  CHECK(todd_coxeter(c5, {}, 100).index == 5);

  // <a,b | a^2, b^3, (ab)^3>: alternating group on 4 letters, order 12
  Presentation a4 = from_relators(
      2, {word_pow(pw({{0, 1}}), 2), word_pow(pw({{1, 1}}), 3),
          word_pow(pw({{0, 1}, {1, 1}}), 3)});
  CHECK(todd_coxeter(a4, {}, 1000).index == perm_order({{1, 0, 3, 2}, {1, 2, 0, 3}}));

  // <a,b | a^2, b^3, (ab)^4>: symmetric group on 4 letters, order 24
  Presentation s4 = from_relators(
      2, {word_pow(pw({{0, 1}}), 2), word_pow(pw({{1, 1}}), 3),
          word_pow(pw({{0, 1}, {1, 1}}), 4)});
  CHECK(todd_coxeter(s4, {}, 1000).index == 24);

  // infinite group: only Exceeded is reported
  CHECK(todd_coxeter(build_elliptic(), {}, 10000).exceeded);
}
