#include "doctest.h"
#include "ig2/chow.hpp"

using namespace ig2;

namespace {

TableSet& table3() {
  static TableSet ts = [] {
    TableSet t = build_table_set(3);
    ensure_full_products(t);
    return t;
  }();
  return ts;
}

int idx(const StructureTable& tab, const char* text) {
  int i = tab.shape_index(Shape::parse(tab.n, text));
  REQUIRE(i >= 0);
  return i;
}

}  // namespace

TEST_CASE("multiply_special: unit law and linearity") {
  auto& ts = table3();
  int pi0 = ts.B.shape_index(special_shape(3, 0));
  int pi1 = ts.B.shape_index(special_shape(3, 1));
  CycleClass c = CycleClass::basic(Family::B, 3, pi0);
  CHECK(multiply_special(ts.B, c, 1) == CycleClass::basic(Family::B, 3, pi1));
  CycleClass twice = CycleClass::zero(Family::B, 3);
  twice.add(pi0, 2);
  CycleClass expect = CycleClass::zero(Family::B, 3);
  expect.add(pi1, 2);
  CHECK(multiply_special(ts.B, twice, 1) == expect);
  // tau(pi_1) * tau_1 lands on the two weight-2 classes with coefficient 1
  CycleClass t1 = CycleClass::basic(Family::C, 3, pi1);
  CycleClass sq = multiply_special(ts.C, t1, 1);
  CHECK(sq.coeffs == std::map<int, Int>{{idx(ts.C, "2//1"), 1}, {idx(ts.C, "3//"), 1}});
}

TEST_CASE("special monomials") {
  auto& ts = table3();
  int pi0 = ts.B.shape_index(special_shape(3, 0));
  int pi1 = ts.B.shape_index(special_shape(3, 1));
  CHECK(special_monomial(ts.B, 0, 0) == CycleClass::basic(Family::B, 3, pi0));
  CHECK(special_monomial(ts.B, 1, 0) == CycleClass::basic(Family::B, 3, pi1));
  // overweight lands on zero
  CHECK(special_monomial(ts.B, 8, 0) == CycleClass::zero(Family::B, 3));
  CHECK(special_monomial(ts.B, 0, 4) == CycleClass::zero(Family::B, 3));
}

TEST_CASE("special monomials equal the direct polynomial-oracle product") {
  auto rs = RootSystem::make(Family::B, 3);
  auto p = ParabolicSubset::complement_of(3, {2});
  SchubertBasis basis(rs, p);
  auto& ts = table3();
  int s1 = basis.rep_index(ts.B.reps[ts.B.shape_index(special_shape(3, 1))]);
  int s2 = basis.rep_index(ts.B.reps[ts.B.shape_index(special_shape(3, 2))]);
  REQUIRE(s1 >= 0);
  REQUIRE(s2 >= 0);
  for (int a1 = 0; a1 <= 7; ++a1) {
    for (int a2 = 0; a1 + 2 * a2 <= 7; ++a2) {
      ExactPoly f = ExactPoly::constant(3, Rat(1));
      for (int k = 0; k < a1; ++k) f = f * basis.class_of(s1);
      for (int k = 0; k < a2; ++k) f = f * basis.class_of(s2);
      CycleClass direct = CycleClass::zero(Family::B, 3);
      for (auto& [ridx, c] : basis.expand_integer(f)) {
        int sidx = -1;
        for (int i = 0; i < ts.B.shape_count(); ++i)
          if (ts.B.reps[i] == basis.reps()[ridx]) sidx = i;
        REQUIRE(sidx >= 0);
        direct.add(sidx, c);
      }
      CHECK(direct == special_monomial(ts.B, a1, a2));
    }
  }
}

TEST_CASE("chains: telescoping and aggregation") {
  auto& ts = table3();
  auto empty = enumerate_chains(ts, 0, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].exp_b == 0);
  CHECK(empty[0].exp_c == 0);
  CHECK(empty[0].steps.size() == 1);

  for (int a1 = 0; a1 <= 7; ++a1) {
    for (int a2 = 0; a1 + 2 * a2 <= 7; ++a2) {
      auto chains = enumerate_chains(ts, a1, a2);
      for (const auto& ch : chains) {
        CHECK(ch.exp_b - ch.exp_c == ts.B.shapes[ch.steps.back()].bottom_length());
        CHECK(static_cast<int>(ch.steps.size()) == a1 + a2 + 1);
        // step weights track the multiplier
        for (std::size_t k = 0; k + 1 < ch.steps.size(); ++k) {
          int dw = ts.B.weight_of(ch.steps[k + 1]) - ts.B.weight_of(ch.steps[k]);
          CHECK(dw == ch.step_sizes[k]);
        }
      }
      CHECK(aggregate_chains(ts.B, chains, Family::B) == special_monomial(ts.B, a1, a2));
      CHECK(aggregate_chains(ts.C, chains, Family::C) == special_monomial(ts.C, a1, a2));
    }
  }
}

TEST_CASE("solve_special_expansion") {
  auto& ts = table3();
  // pi_0: the empty monomial; pi_1: tau_1 itself
  auto u0 = solve_special_expansion(ts, ts.C.shape_index(special_shape(3, 0)));
  REQUIRE(u0.size() == 1);
  CHECK(u0[0] == 1);
  auto u1 = solve_special_expansion(ts, ts.C.shape_index(special_shape(3, 1)));
  REQUIRE(u1.size() == 1);
  CHECK(u1[0] == 1);
  // weight-3 class over {tau_1^3, tau_1 tau_2}: reproduces tau(3//1)
  int lam = idx(ts.C, "3//1");
  auto u = solve_special_expansion(ts, lam);
  REQUIRE(u.size() == 2);
  CycleClass sum = CycleClass::zero(Family::C, 3);
  CycleClass m0 = special_monomial(ts.C, 3, 0), m1 = special_monomial(ts.C, 1, 1);
  for (auto& [i, c] : m0.coeffs) sum.add(i, u[0] * c);
  for (auto& [i, c] : m1.coeffs) sum.add(i, u[1] * c);
  CHECK(sum == CycleClass::basic(Family::C, 3, lam));
}

TEST_CASE("lemma tech end to end") {
  auto rep3 = lemma_tech_check(table3());
  CHECK(rep3.all_pass);
  CHECK(rep3.entries.size() == 4);  // weights 3 and 4, two shapes each

  TableSet ts4 = build_table_set(4);
  auto rep4 = lemma_tech_check(ts4);
  CHECK(rep4.all_pass);
  CHECK(rep4.entries.size() == 6);  // weights 5 and 6: 3 shapes each
}

TEST_CASE("degree map") {
  auto& ts = table3();
  int top = ts.B.top_shape_index();
  int pi0 = ts.B.shape_index(special_shape(3, 0));
  CHECK(degree_map(ts.B, CycleClass::basic(Family::B, 3, top)) == 1);
  CHECK(degree_map(ts.B, CycleClass::basic(Family::B, 3, pi0)) == 0);
  CycleClass four = CycleClass::zero(Family::B, 3);
  four.add(top, 4);
  CHECK(degree_map(ts.B, four) == 4);
}

TEST_CASE("pairing matrices") {
  auto& ts = table3();
  auto m0 = pairing_matrix(ts, Family::B, 0);
  REQUIRE(m0.size() == 1);
  CHECK(m0[0][0] == 1);
  for (int r = 0; r <= 7; ++r) CHECK(det_odd(pairing_matrix(ts, Family::B, r)));
  // non-complementary degrees pair to zero
  int w1 = ts.B.shape_index(special_shape(3, 1));
  int w2 = ts.B.shape_index(special_shape(3, 2));
  CycleClass prod = CycleClass::zero(Family::B, 3);
  for (const auto& e : product_of(ts, Family::B, w1, w2)) prod.add(e.mu, e.coeff);
  CHECK(degree_map(ts.B, prod) == 0);  // weight 3 != 7
}

TEST_CASE("multiplicity and transpose") {
  auto& ts = table3();
  const auto& tb = ts.B;
  int top = tb.top_shape_index();
  int pi0 = tb.shape_index(special_shape(3, 0));

  ProductCycle d;
  d.n = 3;
  d.add(pi0, top, 1);
  CHECK(multiplicity(tb, d) == 1);
  CHECK(multiplicity(tb, transpose(d)) == 0);
  CHECK(transpose(transpose(d)).coeffs == d.coeffs);

  // diagonal in the Poincare-dual basis: mult 1 on both sides
  ProductCycle diag;
  diag.n = 3;
  for (int lam = 0; lam < tb.shape_count(); ++lam) {
    int dual = -1;
    for (int mu : tb.shapes_of_weight(shape_max_weight(3) - tb.weight_of(lam))) {
      CycleClass prod = CycleClass::zero(Family::B, 3);
      for (const auto& e : product_of(ts, Family::B, lam, mu)) prod.add(e.mu, e.coeff);
      if (degree_map(tb, prod) == 1) {
        CHECK(dual == -1);  // unique dual partner
        dual = mu;
      }
    }
    REQUIRE(dual >= 0);
    diag.add(lam, dual, 1);
  }
  CHECK(multiplicity(tb, diag) == 1);
  CHECK(multiplicity(tb, transpose(diag)) == 1);

  // multiples propagate to the multiplicity
  ProductCycle four;
  four.n = 3;
  for (const auto& [key, c] : diag.coeffs) four.add(key.first, key.second, 4 * c);
  CHECK(multiplicity(tb, four) % 4 == 0);
  CHECK(multiplicity(tb, transpose(four)) % 4 == 0);

  ProductCycle bad;
  bad.n = 3;
  bad.add(pi0, pi0, 1);
  CHECK_THROWS_AS(multiplicity(tb, bad), std::invalid_argument);
}

TEST_CASE("generation by the special classes") {
  auto& ts = table3();
  auto c = generation_check(ts, Family::C);
  CHECK(c.integral_everywhere);
  CHECK(c.full_rank_everywhere);
  auto b = generation_check(ts, Family::B);
  CHECK(b.two_local_everywhere);
  CHECK(b.full_rank_everywhere);
  CHECK_FALSE(b.integral_everywhere);
  CHECK_FALSE(b.failing_degrees.empty());
  // rank bound forced by generation in the middle degrees
  for (int r : {2 * 3 - 3, 2 * 3 - 2})
    CHECK(static_cast<int>(ts.C.shapes_of_weight(r).size()) <= r / 2 + 1);
}
