#include <map>
#include <sstream>

#include "doctest.h"
#include "ig2/bgg.hpp"
#include "ig2/numeric.hpp"

using namespace ig2;

namespace {

// Frozen output of the n=3 oracle (independently computed and spot-checked by
// hand against the unit law and the e_B - e_C bottom-length rule).
const char* kGoldenColumnsN3 =
    "B1 1//; -> 2//;:1\n"
    "B1 2//; -> 2//1:2 3//;:1\n"
    "B1 2//1 -> 2//2:1 3//1:1\n"
    "B1 3//; -> 3//1:2\n"
    "B1 2//2 -> 2//3:2 3//2:1\n"
    "B1 3//1 -> 2//3:1 3//2:2\n"
    "B1 2//3 -> 3//3:1\n"
    "B1 3//2 -> 3//2,1:2 3//3:1\n"
    "B1 3//2,1 -> 3//3,1:1\n"
    "B1 3//3 -> 3//3,1:2\n"
    "B1 3//3,1 -> 3//3,2:1\n"
    "B1 3//3,2 ->\n"
    "B2 1//; -> 3//;:1\n"
    "B2 2//; -> 3//1:2\n"
    "B2 2//1 -> 2//3:1 3//2:1\n"
    "B2 3//; -> 3//2:2\n"
    "B2 2//2 -> 3//3:1\n"
    "B2 3//1 -> 3//2,1:2 3//3:1\n"
    "B2 2//3 ->\n"
    "B2 3//2 -> 3//3,1:2\n"
    "B2 3//2,1 -> 3//3,2:1\n"
    "B2 3//3 ->\n"
    "B2 3//3,1 ->\n"
    "B2 3//3,2 ->\n"
    "C1 1//; -> 2//;:1\n"
    "C1 2//; -> 2//1:1 3//;:1\n"
    "C1 2//1 -> 2//2:1 3//1:1\n"
    "C1 3//; -> 3//1:1\n"
    "C1 2//2 -> 2//3:2 3//2:1\n"
    "C1 3//1 -> 2//3:1 3//2:2\n"
    "C1 2//3 -> 3//3:1\n"
    "C1 3//2 -> 3//2,1:1 3//3:1\n"
    "C1 3//2,1 -> 3//3,1:1\n"
    "C1 3//3 -> 3//3,1:1\n"
    "C1 3//3,1 -> 3//3,2:1\n"
    "C1 3//3,2 ->\n"
    "C2 1//; -> 3//;:1\n"
    "C2 2//; -> 3//1:1\n"
    "C2 2//1 -> 2//3:1 3//2:1\n"
    "C2 3//; -> 3//2:1\n"
    "C2 2//2 -> 3//3:1\n"
    "C2 3//1 -> 3//2,1:1 3//3:1\n"
    "C2 2//3 ->\n"
    "C2 3//2 -> 3//3,1:1\n"
    "C2 3//2,1 -> 3//3,2:1\n"
    "C2 3//3 ->\n"
    "C2 3//3,1 ->\n"
    "C2 3//3,2 ->\n";

std::string shape_ascii(const Shape& s) {
  // ascii form with ';' for the empty partition, to keep the golden readable
  auto part = [](const Partition& p) { return p.parts.empty() ? std::string(";") : p.to_string(); };
  return part(s.top) + "//" + part(s.bottom);
}

std::string render_columns(const TableSet& ts) {
  std::ostringstream os;
  for (Family f : {Family::B, Family::C}) {
    const StructureTable& tab = table_of(ts, f);
    for (int i = 1; i <= 2; ++i) {
      for (int lam = 0; lam < tab.shape_count(); ++lam) {
        os << family_letter(f) << i << ' ' << shape_ascii(tab.shapes[lam]) << " ->";
        for (const auto& e : tab.pieri(i, lam))
          os << ' ' << shape_ascii(tab.shapes[e.mu]) << ':' << e.coeff;
        os << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace

TEST_CASE("schubert basis fundamentals") {
  auto rs = RootSystem::make(Family::B, 3);
  auto p = ParabolicSubset::complement_of(3, {2});
  SchubertBasis basis(rs, p);
  CHECK(basis.reps().size() == 12);  // 2n(n-1) classes
  // identity class is 1; every class homogeneous of degree l(w); indicator
  // property of the expansion
  for (int i = 0; i < 12; ++i) {
    auto coeffs = basis.expand(basis.class_of(i));
    REQUIRE(coeffs.size() == 1);
    CHECK(coeffs.begin()->first == i);
    CHECK(coeffs.begin()->second == 1);
  }
  CHECK(basis.expand(ExactPoly(3)).empty());
  CHECK_THROWS_AS(SchubertBasis(RootSystem::make(Family::B, 7), ParabolicSubset::complement_of(7, {2})),
                  ResourceError);
}

TEST_CASE("B_2 full-flag top class") {
  auto rs = RootSystem::make(Family::B, 2);
  auto p = ParabolicSubset::complement_of(2, {1, 2});
  SchubertBasis basis(rs, p);
  CHECK(basis.reps().size() == 8);
  SignedPerm w0(std::vector<int>{-1, -2});
  int idx = basis.rep_index(w0);
  REQUIRE(idx >= 0);
  ExactPoly x1 = ExactPoly::variable(2, 0), x2 = ExactPoly::variable(2, 1);
  ExactPoly diff = x1;
  diff -= x2;
  ExactPoly sum = x1;
  sum += x2;
  ExactPoly expect = diff * sum * x1 * x2;
  expect *= Rat(1, 8);
  CHECK(basis.class_of(idx) == expect);
}

TEST_CASE("sigma_1 squared at n=3 (golden)") {
  auto rs = RootSystem::make(Family::B, 3);
  auto p = ParabolicSubset::complement_of(3, {2});
  SchubertBasis basis(rs, p);
  int s = -1;
  for (int i = 0; i < 12; ++i)
    if (basis.rep_length(i) == 1) s = i;
  REQUIRE(s >= 0);
  auto coeffs = basis.expand_integer(basis.class_of(s) * basis.class_of(s));
  REQUIRE(coeffs.size() == 2);
  std::map<SignedPerm, Int> by_rep;
  for (auto& [idx, c] : coeffs) by_rep[basis.reps()[idx]] = c;
  CHECK(by_rep.at(SignedPerm(std::vector<int>{1, -3, 2})) == 2);
  CHECK(by_rep.at(SignedPerm(std::vector<int>{2, 3, 1})) == 1);
}

TEST_CASE("products of basis classes stay inside the parabolic quotient") {
  // expand products over ALL group elements of the right length: coefficients
  // away from the minimal coset representatives must vanish
  const int n = 3;
  auto rs = RootSystem::make(Family::B, n);
  auto p = ParabolicSubset::complement_of(n, {2});
  SchubertBasis basis(rs, p);
  const int maxw = 4 * n - 5;
  for (int i = 0; i < 12; ++i) {
    for (int j = i; j < 12; ++j) {
      int d = basis.rep_length(i) + basis.rep_length(j);
      if (d > maxw) continue;
      ExactPoly f = basis.class_of(i) * basis.class_of(j);
      for_each_weyl_element(n, [&](const SignedPerm& w) {
        if (length(w) != d || basis.rep_index(w) >= 0) return;
        ExactPoly g = divided_difference_chain(f, reduced_word(w), rs);
        CHECK(g.is_zero());
      });
    }
  }
}

TEST_CASE("table set: matching anchors, ambiguity, golden columns at n=3") {
  TableSet ts = build_table_set(3);
  CHECK(ts.match.solutions_found == 4);
  const StructureTable& tb = ts.B;
  int pi0 = tb.shape_index(special_shape(3, 0));
  int pi1 = tb.shape_index(special_shape(3, 1));
  int pi2 = tb.shape_index(special_shape(3, 2));
  CHECK(tb.reps[pi0].is_identity());
  CHECK(length(tb.reps[pi1]) == 1);
  CHECK(tb.reps[pi2] == SignedPerm(std::vector<int>{2, 3, 1}));
  CHECK(render_columns(ts) == kGoldenColumnsN3);
}

TEST_CASE("full products: unit law, grading, symmetry of support") {
  TableSet ts = build_table_set(3);
  ensure_full_products(ts);
  const StructureTable& tb = ts.B;
  int pi0 = tb.shape_index(special_shape(3, 0));
  for (int j = 0; j < tb.shape_count(); ++j) {
    auto prod = product_of(ts, Family::B, pi0, j);
    REQUIRE(prod.size() == 1);
    CHECK(prod[0].mu == j);
    CHECK(prod[0].coeff == 1);
  }
  for (int i = 0; i < tb.shape_count(); ++i) {
    for (int j = i; j < tb.shape_count(); ++j) {
      for (const auto& e : product_of(ts, Family::B, i, j)) {
        CHECK(tb.weight_of(e.mu) == tb.weight_of(i) + tb.weight_of(j));
        CHECK(e.coeff > 0);
      }
    }
  }
}

TEST_CASE("word-strategy independence of the whole table") {
  TableSet a = build_table_set(3, WordStrategy::SmallestDescent);
  TableSet b = build_table_set(3, WordStrategy::LargestDescent);
  CHECK(render_columns(a) == render_columns(b));
  CHECK(a.match.rep_of_shape == b.match.rep_of_shape);
}

TEST_CASE("basis representatives are word-independent polynomials") {
  auto rs = RootSystem::make(Family::C, 3);
  auto p = ParabolicSubset::complement_of(3, {2});
  SchubertBasis a(rs, p, WordStrategy::SmallestDescent);
  SchubertBasis b(rs, p, WordStrategy::LargestDescent);
  REQUIRE(a.reps() == b.reps());
  for (std::size_t i = 0; i < a.reps().size(); ++i) CHECK(a.class_of(i) == b.class_of(i));
}

TEST_CASE("rank bound on the oracle") {
  CHECK_THROWS_AS(build_table_set(7), ResourceError);
  CHECK_THROWS_AS(build_table_set(2), std::invalid_argument);
}
