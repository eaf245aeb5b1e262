#include <stdexcept>

#include "doctest.h"
#include "kacres/characters.hpp"
#include "kacres/errors.hpp"
#include "kacres/realization.hpp"

using namespace kacres;

TEST_CASE("elementary superbracket") {
  CHECK(generator_parity({-1, 1}) == 1);
  CHECK(generator_parity({1, -1}) == 1);
  CHECK(generator_parity({-2, -1}) == 0);
  CHECK(generator_parity({1, 2}) == 0);

  // odd with odd anticommutes into the diagonal
  auto b = elementary_bracket({-1, 1}, {1, -1});
  REQUIRE(b.size() == 2);
  std::map<GenKey, long long> m(b.begin(), b.end());
  CHECK(m.at({-1, -1}) == 1);
  CHECK(m.at({1, 1}) == 1);

  // even commutator
  auto c = elementary_bracket({1, 2}, {2, 1});
  std::map<GenKey, long long> mc(c.begin(), c.end());
  CHECK(mc.at({1, 1}) == 1);
  CHECK(mc.at({2, 2}) == -1);

  CHECK(elementary_bracket({-1, 1}, {-1, 1}).empty());

  CHECK(simple_raisings(2, 2) == std::vector<GenKey>{{-2, -1}, {-1, 1}, {1, 2}});
  CHECK(even_simple_raisings(2, 2) == std::vector<GenKey>{{-2, -1}, {1, 2}});
  CHECK(block_index_order(1, 2) == std::vector<int>{-1, 1, 2});
}

TEST_CASE("block irreps match the dimension formula") {
  CHECK(gl_irrep_dim(1, {5}) == 1);
  CHECK(gl_irrep_dim(2, {1, 0}) == 2);
  CHECK(gl_irrep_dim(2, {2, 0}) == 3);
  CHECK(gl_irrep_dim(2, {1, 1}) == 1);
  CHECK(gl_irrep_dim(3, {2, 1, 0}) == 8);
  CHECK(gl_irrep_dim(2, {0, -1}) == 2);
  CHECK(gl_irrep_dim(4, {4, 1, 0, 0}) == 84);

  BlockIrrep v = build_gl_irrep(2, {1, 0});
  REQUIRE(v.dim() == 2);
  CHECK(v.weights[0] == std::vector<long long>{1, 0});
  // lowering moves the highest vector down with coefficient one
  CHECK(v.gen(2, 1).at(1, 0) == 1);
  CHECK(v.gen(1, 1).at(0, 0) == 1);
  CHECK(v.gen(2, 2).at(0, 0) == 0);

  CHECK(build_gl_irrep(3, {2, 1, 0}).dim() == 8);
  CHECK(build_gl_irrep(2, {3, -2}).dim() == gl_irrep_dim(2, {3, -2}));
  CHECK_THROWS_AS(build_gl_irrep(4, {8, 4, 2, 0}, 100), guard_error);
}

TEST_CASE("block irrep commutators close") {
  BlockIrrep v = build_gl_irrep(2, {2, 0});
  // [E_12, E_21] = E_11 - E_22 on every basis vector
  RatMat lhs = rat_sub(rat_mul(v.gen(1, 2), v.gen(2, 1)), rat_mul(v.gen(2, 1), v.gen(1, 2)));
  RatMat rhs = rat_sub(v.gen(1, 1), v.gen(2, 2));
  CHECK(lhs == rhs);
}

TEST_CASE("kac module at rank (1|1), trivial top") {
  ModuleRealization mod = build_kac_module(with_n(parse_weight("0|"), 1));
  REQUIRE(mod.dim() == 2);
  CHECK(check_superbracket(mod));
  CHECK(mod.parity == std::vector<int>{0, 1});

  std::vector<SingularLine> lines = singular_vectors(mod, simple_raisings(1, 1));
  REQUIRE(lines.size() == 2);  // reducible: the lowered vector is killed too
  CHECK(lines[0].weight == with_n(parse_weight("-1|1"), 1));
  CHECK(lines[1].weight == with_n(parse_weight("0|"), 1));

  QuotientReport q = irreducible_quotient(mod, with_n(parse_weight("0|"), 1));
  CHECK(q.maximal_dim == 1);
  CHECK(q.quotient.dim() == 1);
  CHECK(q.generated_by_singulars);
  REQUIRE(q.proper_lines.size() == 1);
  CHECK(q.proper_lines[0].weight == with_n(parse_weight("-1|1"), 1));
}

TEST_CASE("kac module at rank (1|1), typical top") {
  ModuleRealization mod = build_kac_module(with_n(parse_weight("1|"), 1));
  REQUIRE(mod.dim() == 2);
  CHECK(check_superbracket(mod));
  QuotientReport q = irreducible_quotient(mod, with_n(parse_weight("1|"), 1));
  CHECK(q.proper_lines.empty());
  CHECK(q.maximal_dim == 0);
  CHECK(q.quotient.dim() == 2);
  CHECK(module_character(q.quotient).terms == hook_schur_polynomial({1}, 1, 1).terms);
}

TEST_CASE("kac module at rank (1|2)") {
  SuperWeight hw = with_n(parse_weight("1|"), 2);
  ModuleRealization mod = build_kac_module(hw);
  REQUIRE(mod.dim() == 4);
  CHECK(check_superbracket(mod));
  QuotientReport q = irreducible_quotient(mod, hw);
  REQUIRE(q.proper_lines.size() == 1);
  CHECK(q.proper_lines[0].weight == with_n(parse_weight("-1|1,1"), 2));
  CHECK(q.maximal_dim == 1);
  CHECK(q.quotient.dim() == 3);
  CHECK(q.generated_by_singulars);
  CHECK(eval_at_ones(module_character(q.quotient)) == 3);
}

TEST_CASE("kac module characters against the closed form") {
  for (const char* s : {"0|", "1|", "2|"}) {
    SuperWeight hw = with_n(parse_weight(s), 1);
    ModuleRealization mod = build_kac_module(hw);
    CHECK(module_character(mod).terms == kac_character(hw, 1).terms);
  }
}

TEST_CASE("resource guards") {
  CHECK_THROWS_AS(build_kac_module(with_n(parse_weight("0|"), 1), 1), guard_error);
  CHECK_THROWS_AS(build_kac_module(with_n(parse_weight("0,0,0,0,0|"), 9)), guard_error);
}
