#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "kacres/bruhat.hpp"
#include "kacres/weyl.hpp"

using namespace kacres;

namespace {

SuperWeight from_shifted(int m, const std::vector<long long>& s) {
  std::vector<long long> neg, pos;
  for (int p = 1; p <= static_cast<int>(s.size()); ++p) {
    long long stair = static_cast<long long>(m) + 1 - p;
    if (p <= m)
      neg.push_back(s[p - 1] - stair);
    else
      pos.push_back(s[p - 1] - stair);
  }
  return make_weight(m, kInfiniteN, std::move(neg), std::move(pos));
}

std::vector<SuperWeight> full_orbit(int m, std::vector<long long> shifted) {
  std::sort(shifted.begin(), shifted.end());
  std::vector<SuperWeight> orbit;
  do {
    orbit.push_back(from_shifted(m, shifted));
  } while (std::next_permutation(shifted.begin(), shifted.end()));
  return orbit;
}

}  // namespace

TEST_CASE("shifted window") {
  CHECK(shifted_window(parse_weight("0|"), 4) == std::vector<long long>{1, 0, -1, -2});
  CHECK(shifted_window(parse_weight("2,1|"), 4) == std::vector<long long>{4, 2, 0, -1});
  CHECK(shifted_window(parse_weight("0|2"), 3) == std::vector<long long>{1, 2, -1});
}

TEST_CASE("ordinary order, worked pairs") {
  CHECK(bruhat_leq(parse_weight("0|2"), parse_weight("1|1")));
  CHECK(!bruhat_leq(parse_weight("1|1"), parse_weight("0|2")));
  CHECK(bruhat_leq(parse_weight("1|1"), parse_weight("1|1")));
  // different shifted multisets: incomparable by definition
  CHECK(!bruhat_leq(parse_weight("0|"), parse_weight("1|")));
  CHECK(!bruhat_leq(parse_weight("0,0|3"), parse_weight("1,-2|2,2")));
  CHECK(!bruhat_leq(parse_weight("1,-2|2,2"), parse_weight("0,0|3")));
}

TEST_CASE("super order through the conjugation bridge") {
  CHECK(bruhat_leq_super(parse_weight("0|1,1"), parse_weight("1|1")));
  CHECK(!bruhat_leq_super(parse_weight("1|1"), parse_weight("0|1,1")));
  CHECK(bruhat_leq_super(parse_weight("1|1"), parse_weight("1|1")));
  CHECK(!bruhat_leq_super(parse_weight("0,0|1,1,1"), parse_weight("1,-2|2,2")));
  CHECK(!bruhat_leq_super(parse_weight("1,-2|2,2"), parse_weight("0,0|1,1,1")));
  CHECK_THROWS_AS(bruhat_leq_super(parse_weight("0|-1"), parse_weight("0|")),
                  std::invalid_argument);
}

TEST_CASE("prefix criterion equals the closure oracle on a full orbit") {
  for (int m : {1, 2}) {
    std::vector<SuperWeight> orbit = full_orbit(m, {2, 1, 0, -1});
    int sz = static_cast<int>(orbit.size());
    REQUIRE(sz == 24);
    std::vector<std::vector<bool>> leq(sz, std::vector<bool>(sz));
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) {
        leq[i][j] = bruhat_leq(orbit[i], orbit[j]);
        CHECK(leq[i][j] == bruhat_leq_closure(orbit[i], orbit[j]));
      }
    for (int i = 0; i < sz; ++i) {
      CHECK(leq[i][i]);
      for (int j = 0; j < sz; ++j) {
        if (i != j) CHECK(!(leq[i][j] && leq[j][i]));  // antisymmetry
        for (int k = 0; k < sz; ++k)
          if (leq[i][j] && leq[j][k]) CHECK(leq[i][k]);  // transitivity
      }
    }
  }
}

TEST_CASE("comparable pair detection") {
  std::vector<SuperWeight> pair = {parse_weight("1|1"), parse_weight("0|2")};
  auto hit = first_comparable_pair(pair, false);
  REQUIRE(hit.has_value());
  CHECK(*hit == std::make_pair(1, 0));
  CHECK(!first_comparable_pair({parse_weight("1|1")}, false).has_value());
  CHECK(!first_comparable_pair({}, true).has_value());
}

TEST_CASE("resolution layers are pairwise incomparable") {
  CosetLayers ls = minimal_coset_layers(split_hook({1, 1, 1}, 2, -1), 2);
  const std::vector<SuperWeight>& w2 = ls.at(2);
  REQUIRE(w2.size() == 2);
  CHECK(!first_comparable_pair(w2, false).has_value());
  CHECK(!first_comparable_pair(w2, true).has_value());
}
