#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ig2/shapes.hpp"
#include "ig2/weyl.hpp"

using namespace ig2;

TEST_CASE("partitions: strictness, weight, parsing") {
  CHECK(Partition({3, 2, 1}).is_strict());
  CHECK_FALSE(Partition({3, 3}).is_strict());
  CHECK_FALSE(Partition({2, 3}).is_strict());
  CHECK(Partition{}.weight() == 0);
  CHECK(Partition({4, 3, 1}).weight() == 8);
  CHECK(Partition::parse("3,2,1") == Partition({3, 2, 1}));
  CHECK(Partition::parse("") == Partition{});
  CHECK(Partition::parse("\xE2\x88\x85") == Partition{});
  CHECK(Partition({5, 2}).to_string() == "5,2");
  CHECK(Partition{}.to_string() == "\xE2\x88\x85");
  CHECK_THROWS_AS(Partition::parse("2,3"), std::invalid_argument);
}

TEST_CASE("shape validity clauses are reported by name") {
  // top part exceeding n
  Shape s1(3, Partition({4}), Partition{});
  CHECK_FALSE(s1.is_valid());
  CHECK_THROWS_WITH_AS(shape_weight(s1), doctest::Contains("top part exceeds n"),
                       std::invalid_argument);
  // bottom longer than 2
  Shape s2(4, Partition({4, 1}), Partition({3, 2, 1}));
  bool found = false;
  for (const auto& v : s2.violations())
    if (v.find("bottom longer than 2") != std::string::npos) found = true;
  CHECK(found);
  // missing top parts read as 0 and break top_{n-2} > l(bottom)
  Shape s3(4, Partition({4}), Partition{});
  CHECK_FALSE(s3.is_valid());
  // bottom length must stay under the last top part
  Shape s4(3, Partition({1}), Partition({1}));
  CHECK_FALSE(s4.is_valid());
  CHECK(Shape(3, Partition({2}), Partition({1})).is_valid());
}

TEST_CASE("shape weight examples") {
  for (int n : {3, 4, 5, 7}) {
    CHECK(shape_weight(special_shape(n, 0)) == 0);
    CHECK(shape_weight(special_shape(n, 1)) == 1);
    CHECK(shape_weight(special_shape(n, 2)) == 2);
  }
  CHECK(shape_weight(Shape(3, Partition({3}), Partition({3, 2}))) == 7);  // 4n-5 maximal
  CHECK(shape_max_weight(3) == 7);
}

TEST_CASE("special shapes at n=5") {
  CHECK(special_shape(5, 0) == Shape(5, Partition({3, 2, 1}), Partition{}));
  CHECK(special_shape(5, 1) == Shape(5, Partition({4, 2, 1}), Partition{}));
  CHECK(special_shape(5, 2) == Shape(5, Partition({5, 2, 1}), Partition{}));
  CHECK_THROWS_AS(special_shape(5, 3), std::invalid_argument);
}

TEST_CASE("enumeration: counts, order, filters") {
  auto all3 = enumerate_shapes(3);
  CHECK(all3.size() == 12);
  CHECK(std::set<Shape>(all3.begin(), all3.end()).size() == 12);  // duplicate-free
  for (std::size_t k = 1; k < all3.size(); ++k) CHECK(shape_canonical_less(all3[k - 1], all3[k]));

  auto w3 = enumerate_shapes(3, 3);
  REQUIRE(w3.size() == 2);
  CHECK(w3[0] == Shape(3, Partition({2}), Partition({2})));
  CHECK(w3[1] == Shape(3, Partition({3}), Partition({1})));

  auto w0 = enumerate_shapes(5, 0);
  REQUIRE(w0.size() == 1);
  CHECK(w0[0] == special_shape(5, 0));

  // weight-1 level is a singleton at every rank in range (pi_1 unique)
  for (int n = 3; n <= 8; ++n) CHECK(enumerate_shapes(n, 1).size() == 1);
}

TEST_CASE("enumeration stays polynomial at large rank") {
  auto big = enumerate_shapes(32);
  CHECK(big.size() == 2u * 32 * 31);
}

TEST_CASE("shape counts match the parabolic quotient, palindromic by weight") {
  for (int n = 3; n <= 8; ++n) {
    auto shapes = enumerate_shapes(n);
    CHECK(static_cast<long long>(shapes.size()) == 2LL * n * (n - 1));
    auto q = poincare_polynomial(RootSystem::make(Family::B, n),
                                 ParabolicSubset::complement_of(n, {2}));
    std::vector<long long> counts(shape_max_weight(n) + 1, 0);
    for (const auto& s : shapes) ++counts[s.weight()];
    CHECK(counts == q);
    CHECK(poly_palindromic(counts));
  }
}

TEST_CASE("bottom-length weight bounds, exhaustively") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& s : enumerate_shapes(n)) {
      int w = s.weight(), b = s.bottom_length();
      if (b == 0) CHECK(w <= 2 * n - 4);
      if (b == 2) CHECK(w >= 2 * n - 1);
      if (w == 2 * n - 3 || w == 2 * n - 2) CHECK(b == 1);
    }
  }
}

TEST_CASE("bottom length basics") {
  CHECK(special_shape(3, 0).bottom_length() == 0);
  CHECK(Shape(3, Partition({3}), Partition({1})).bottom_length() == 1);
  CHECK(Shape(3, Partition({3}), Partition({2, 1})).bottom_length() == 2);
}

TEST_CASE("skew diagrams") {
  auto d = skew(Partition({4, 3, 1}), Partition({2, 1}));
  CHECK(d.box_count() == 5);
  CHECK(skew(Partition({3, 1}), Partition({3, 1})).box_count() == 0);
  auto row = skew(Partition({2}), Partition{});
  CHECK(row.box_count() == 2);
  CHECK(row.component_count() == 1);
  // corner-adjacent boxes are separate components
  auto corners = skew(Partition({2, 1}), Partition({1}));
  CHECK(corners.box_count() == 2);
  CHECK(corners.component_count() == 2);
  // non-containment is a plain set difference
  CHECK(skew(Partition({2}), Partition({1, 1})).box_count() == 1);
}

TEST_CASE("serialization round trip") {
  CHECK(Shape::parse(5, "3,2,1//\xE2\x88\x85") == special_shape(5, 0));
  CHECK(Shape::parse(5, "5,2,1//") == special_shape(5, 2));
  for (const auto& s : enumerate_shapes(4)) CHECK(Shape::parse(4, s.to_string()) == s);
  CHECK_THROWS_AS(Shape::parse(3, "3,2,1"), std::invalid_argument);
}
