#include <algorithm>

#include "doctest.h"
#include "ig2/certificates.hpp"

using namespace ig2;

TEST_CASE("witt profile validation") {
  WittProfile p1{7, {0, 1, 2, 3}};
  CHECK(validate_witt_profile(p1).valid);
  CHECK(p1.relative_indices() == std::vector<int>{1, 1, 1});

  WittProfile p2{7, {0, 0, 2}};
  auto v2 = validate_witt_profile(p2);
  CHECK_FALSE(v2.valid);
  bool strict = std::any_of(v2.violations.begin(), v2.violations.end(), [](const std::string& s) {
    return s.find("strictly increasing") != std::string::npos;
  });
  CHECK(strict);

  WittProfile p3{7, {0, 1, 2}};  // must end at n = 3
  auto v3 = validate_witt_profile(p3);
  CHECK_FALSE(v3.valid);
  bool ends = std::any_of(v3.violations.begin(), v3.violations.end(), [](const std::string& s) {
    return s.find("j_h must equal") != std::string::npos;
  });
  CHECK(ends);

  WittProfile p4{8, {0, 1, 2, 4}};  // even dim: every independent clause reported
  CHECK_FALSE(validate_witt_profile(p4).valid);
}

TEST_CASE("hypothesis propagation") {
  auto facts = propagate_hypotheses({true, true, 3});
  REQUIRE(facts.size() == 5);
  CHECK(facts[0].statement == "j_0 = 0");
  CHECK(facts[1].statement == "j_1 = 1");
  CHECK(facts[2].statement.find("= 2") != std::string::npos);
  CHECK(facts[3].statement.find("F(X_2)") != std::string::npos);
  CHECK(propagate_hypotheses({false, true, 3}).empty());
  CHECK(propagate_hypotheses({true, false, 3}).empty());
}

TEST_CASE("certificate verdicts at n = 3") {
  auto rep = incompressibility_certificate(3);
  CHECK(rep.verdict);
  CHECK(rep.items.size() == 14);
  for (const auto& item : rep.items) CHECK(item.pass);
  // displays cover the verified identities
  for (const char* display : {"(mult)", "(teles)", "(tau)", "(gamp)", "gamma' = 2 gamma",
                              "M(X_2 x X_2) direct sum", "CH_{4n-5}(X_2 x X_2) direct sum",
                              "double-coset table"}) {
    bool found = std::any_of(rep.items.begin(), rep.items.end(),
                             [&](const CheckItem& it) { return it.display == display; });
    CHECK_MESSAGE(found, display);
  }
  // assumptions name the cited steps
  for (const char* name : {"witt1", "witt2", "brv-lemma-6.1", "springer-theorem"}) {
    bool found = std::any_of(rep.assumptions.begin(), rep.assumptions.end(),
                             [&](const Assumption& a) { return a.name == name; });
    CHECK_MESSAGE(found, name);
  }
  // the row-4 label discrepancy is surfaced
  bool note = std::any_of(rep.notes.begin(), rep.notes.end(), [](const std::string& s) {
    return s.find("row 4") != std::string::npos;
  });
  CHECK(note);
}

TEST_CASE("fault injection flips the verdict and names (mult)") {
  CertificateOptions opts;
  opts.inject_fault = true;
  auto rep = incompressibility_certificate(3, opts);
  CHECK_FALSE(rep.verdict);
  bool mult_failed = std::any_of(rep.items.begin(), rep.items.end(), [](const CheckItem& it) {
    return it.display == "(mult)" && !it.pass;
  });
  CHECK(mult_failed);
}

TEST_CASE("check bundles") {
  for (const char* which : {"mult", "lemma", "motive", "generation"}) {
    auto rep = check_bundle(which, 3);
    CHECK(rep.verdict);
    CHECK_FALSE(rep.items.empty());
  }
  auto pairing = check_bundle("pairing", 3);
  CHECK(pairing.verdict);
  CHECK_THROWS_AS(check_bundle("nonsense", 3), std::invalid_argument);
}

TEST_CASE("certificate determinism") {
  CertificateOptions opts;
  opts.seed = 12345;
  auto a = incompressibility_certificate(3, opts);
  auto b = incompressibility_certificate(3, opts);
  REQUIRE(a.items.size() == b.items.size());
  for (std::size_t k = 0; k < a.items.size(); ++k) {
    CHECK(a.items[k].name == b.items[k].name);
    CHECK(a.items[k].pass == b.items[k].pass);
    CHECK(a.items[k].details == b.items[k].details);
  }
  CHECK(a.notes == b.notes);
}
