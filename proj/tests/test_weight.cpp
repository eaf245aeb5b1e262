#include <stdexcept>

#include "doctest.h"
#include "kacres/weight.hpp"

using namespace kacres;

TEST_CASE("construction and coordinates") {
  SuperWeight w = make_weight(2, 3, {4, 1}, {2, 1, 0});
  CHECK(w.pos == std::vector<long long>{2, 1});  // trailing zero stripped
  CHECK(coord(w, -2) == 4);
  CHECK(coord(w, -1) == 1);
  CHECK(coord(w, 1) == 2);
  CHECK(coord(w, 3) == 0);
  CHECK_THROWS_AS(coord(w, 0), std::out_of_range);
  CHECK_THROWS_AS(coord(w, 4), std::out_of_range);

  CHECK_THROWS_AS(make_weight(0, 1, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_weight(1, 1, {0}, {1, 1}), std::invalid_argument);  // support 2 > n = 1
  CHECK(with_n(make_weight(1, kInfiniteN, {0}, {1}), 2).n == 2);
}

TEST_CASE("parsing and formatting") {
  SuperWeight w = parse_weight("2,-1|3,1");
  CHECK(w.m == 2);
  CHECK(w.n == kInfiniteN);
  CHECK(w.neg == std::vector<long long>{2, -1});
  CHECK(w.pos == std::vector<long long>{3, 1});
  CHECK(format_weight(w) == "2,-1|3,1");
  CHECK(format_weight(parse_weight("0|")) == "0|");
  CHECK(parse_weight("1|0,0") == make_weight(1, kInfiniteN, {1}, {}));
  CHECK_THROWS_AS(parse_weight("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("|1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("1|2|3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("a|1"), std::invalid_argument);

  CHECK(format_half(6) == "3");
  CHECK(format_half(-4) == "-2");
  CHECK(format_half(5) == "5/2");
  CHECK(format_half(-5) == "-5/2");
  CHECK(format_half(0) == "0");
}

TEST_CASE("weyl vectors") {
  CHECK(rho_gl(-2) == 2);
  CHECK(rho_gl(-1) == 1);
  CHECK(rho_gl(1) == 0);
  CHECK(rho_gl(3) == -2);
  CHECK(rho_super(-2) == 2);
  CHECK(rho_super(1) == -1);
  CHECK(rho_super(3) == -3);
}

TEST_CASE("bilinear forms and quadratic invariants") {
  SuperWeight u = parse_weight("1|1");
  CHECK(bilinear_gl(u, u) == 2);
  CHECK(bilinear_super(u, u) == 0);
  CHECK(casimir_gl(u) == 4);
  CHECK(casimir_super(u) == 4);
  CHECK(casimir_gl(parse_weight("1|")) == 3);
  CHECK(casimir_super(parse_weight("-1|1")) == 0);
  CHECK(z_degree2(parse_weight("1|1")) == 0);
  CHECK(z_degree2(parse_weight("-2|2")) == -4);
  CHECK(z_degree2(parse_weight("-2|1,1")) == -4);
}

TEST_CASE("dominance and the conjugation involution") {
  CHECK(in_dominant_cone(parse_weight("2,-1|3,1")));
  CHECK(!in_dominant_cone(parse_weight("-1,2|1")));
  CHECK(!in_dominant_cone(parse_weight("0|1,2")));
  CHECK(!in_dominant_cone(parse_weight("0|-1")));
  CHECK(in_dominant_integral(parse_weight("2,1|1,1")));
  CHECK(in_dominant_integral(parse_weight("0|1")));
  CHECK(!in_dominant_integral(parse_weight("0|1,-1")));  // rises against the zero padding
  CHECK(in_dominant_integral(with_n(parse_weight("0|1,-1"), 2)));  // no padding at full support

  CHECK(natural(parse_weight("0|2")) == parse_weight("0|1,1"));
  CHECK(natural(parse_weight("1|1")) == parse_weight("1|1"));
  CHECK(natural(parse_weight("2,-2|2,1")) == parse_weight("2,-2|2,1"));
  CHECK_THROWS_AS(natural(parse_weight("0|1,2")), std::invalid_argument);

  for (const char* s : {"0|", "1|1", "0|2", "2,-2|2,1", "0,-1|4", "-4|2,2,2,1"}) {
    SuperWeight w = parse_weight(s);
    CHECK(natural(natural(w)) == w);
    CHECK(z_degree2(natural(w)) == z_degree2(w));
    // the conjugation bridge between the two quadratic invariants
    CHECK(casimir_gl(w) == casimir_super(natural(w)));
  }
}

TEST_CASE("hook splitting and flattening") {
  CHECK(split_hook({3, 2, 1}, 2, -1) == parse_weight("3,2|1"));
  CHECK(split_hook({}, 1, 1) == parse_weight("0|"));
  CHECK(split_hook({2, 1, 1}, 1, 1) == parse_weight("2|1,1"));
  CHECK(split_hook({1}, 2, 1) == parse_weight("1,0|"));
  CHECK_THROWS_AS(split_hook({2, 2}, 1, 1), std::invalid_argument);
  CHECK(split_hook({2, 2}, 1, 2) == parse_weight("2|2"));
  CHECK(split_hook({2, 2}, 1, 2).n == kInfiniteN);  // split always reports unbounded rank

  CHECK(flatten_to_partition(parse_weight("3,2|1")) == Partition{3, 2, 1});
  CHECK(flatten_to_partition(parse_weight("0|")) == Partition{});
  CHECK_THROWS_AS(flatten_to_partition(parse_weight("1|2")), std::invalid_argument);
}
