// motives.cpp
#include "ig2/motives.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ig2/numeric.hpp"
#include "ig2/shapes.hpp"

namespace ig2 {

namespace {

std::vector<int> palindrome_word(int lo, int hi) {
  std::vector<int> w;
  for (int i = lo; i <= hi; ++i) w.push_back(i);
  for (int i = hi - 1; i >= lo; --i) w.push_back(i);
  return w;
}

struct SourceRow {
  std::vector<int> word;
  std::vector<int> action;   // expected effective^{-1}(e_1..e_4)
  std::vector<int> removed;  // R_D = Pi minus these
};

// The double-coset table for n >= 4; n = 3 drops the last row and every
// mention of e_4.  Row 4's printed label is "a1", which contradicts its own
// action column (the reflection swapping e_2 and e_3 is a2); the action wins
// and the discrepancy is surfaced as a note.
std::vector<SourceRow> source_rows(int n) {
  std::vector<SourceRow> rows;
  rows.push_back({{}, {1, 2, 3, 4}, {2}});
  rows.push_back({palindrome_word(2, n), {1, -2, 3, 4}, {1, 2}});
  {
    auto w = palindrome_word(2, n);
    auto full = w;
    full.push_back(1);
    full.insert(full.end(), w.begin(), w.end());
    rows.push_back({full, {-2, -1, 3, 4}, {2}});
  }
  rows.push_back({{1}, {1, 3, 2, 4}, {1, 2, 3}});
  {
    std::vector<int> w{2, 1};
    auto tail = palindrome_word(3, n);
    w.insert(w.end(), tail.begin(), tail.end());
    w.push_back(2);
    rows.push_back({w, {3, -2, 1, 4}, {1, 2, 3}});
  }
  if (n >= 4) rows.push_back({{2, 1, 3, 2}, {3, 4, 1, 2}, {2, 4}});
  for (auto& r : rows) r.action.resize(std::min(4, n));
  return rows;
}

std::string word_string(const std::vector<int>& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ' ';
    os << 'a' << w[k];
  }
  return os.str();
}

// Signed permutation with w^{-1}(e_i) as prescribed on the first coordinates
// and the identity beyond them.
SignedPerm element_from_action(int n, const std::vector<int>& action) {
  std::vector<int> inv_images(n);
  for (int i = 0; i < n; ++i) inv_images[i] = i + 1;
  for (std::size_t i = 0; i < action.size(); ++i) inv_images[i] = action[i];
  return SignedPerm(std::move(inv_images)).inverse();
}

std::vector<int> action_of(const SignedPerm& w, int upto) {
  SignedPerm inv = w.inverse();
  std::vector<int> out;
  for (int i = 1; i <= upto; ++i) out.push_back(inv.image(i));
  return out;
}

}  // namespace

WeylTableReport weyl_table(int n) {
  if (n < 3) throw std::invalid_argument("weyl_table: n must be at least 3");
  WeylTableReport rep;
  rep.n = n;
  auto p = ParabolicSubset::complement_of(n, {2});
  auto dec = double_cosets(RootSystem::make(Family::B, n), p);

  auto rows = source_rows(n);
  std::set<int> seen;
  bool actions_ok = true;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    WeylTableRow out;
    out.row = static_cast<int>(k) + 1;
    out.word = rows[k].word;
    out.listed_word = word_string(rows[k].word);
    out.effective = element_from_action(n, rows[k].action);
    out.action = action_of(out.effective, std::min(4, n));
    if (out.action != rows[k].action)
      throw ConsistencyError("weyl_table: action reconstruction failed");
    SignedPerm from_word = word_to_element(n, rows[k].word);
    out.action_matches_word = from_word == out.effective;
    out.coset_index = dec.coset_index_of(out.effective);
    out.listed_word_coset_index = dec.coset_index_of(from_word);
    const DoubleCoset& dc = dec.cosets[out.coset_index];
    out.min_rep = dc.min_rep;
    out.min_length = dc.min_length;
    out.coset_size = dc.size;
    out.r_d = ParabolicSubset::complement_of(n, rows[k].removed);
    if (!out.action_matches_word) {
      std::ostringstream os;
      os << "row " << out.row << ": listed word '" << out.listed_word
         << "' disagrees with the action column; the action column is authoritative"
         << " (the word lands in coset " << out.listed_word_coset_index << ")";
      out.note = os.str();
      rep.notes.push_back(out.note);
    }
    // row 4's printed label is the known discrepancy; every other word must
    // reproduce its action column
    if (out.row != 4 && !out.action_matches_word) actions_ok = false;
    seen.insert(out.coset_index);
    rep.rows.push_back(std::move(out));
  }

  rep.cosets_distinct = seen.size() == rows.size();
  rep.covers_all_cosets = seen.size() == dec.cosets.size();
  std::multiset<int> lengths;
  for (const auto& r : rep.rows) lengths.insert(r.min_length);
  std::multiset<int> expect{0, 2 * n - 3, 4 * n - 5, 1, 2 * n - 2};
  if (n >= 4) expect.insert(4);
  rep.lengths_match = lengths == expect;
  rep.pass = rep.cosets_distinct && rep.covers_all_cosets && rep.lengths_match && actions_ok;
  return rep;
}

std::vector<MotiveSummand> cm_decomposition(int n) {
  auto tab = weyl_table(n);
  if (!tab.pass) throw ConsistencyError("cm_decomposition: double-coset table verification failed");
  std::vector<MotiveSummand> out;
  const int dim_product = 2 * (4 * n - 5);
  auto rs = RootSystem::make(Family::B, n);
  for (const auto& row : tab.rows) {
    MotiveSummand s;
    s.flag_type = row.r_d;
    s.shift = row.min_length;
    auto q = poincare_polynomial(rs, s.flag_type);
    int dim_flag = static_cast<int>(q.size()) - 1;
    if (s.shift + dim_flag > dim_product)
      throw ConsistencyError("cm_decomposition: summand exceeds the ambient dimension");
    out.push_back(std::move(s));
  }
  return out;
}

PoincareIdentityReport verify_poincare_identity(int n) {
  PoincareIdentityReport rep;
  rep.n = n;
  auto rs = RootSystem::make(Family::B, n);
  auto p2 = poincare_polynomial(rs, ParabolicSubset::complement_of(n, {2}));
  rep.lhs = poly_mul(p2, p2);
  rep.rhs.assign(rep.lhs.size(), 0);
  for (const auto& s : cm_decomposition(n)) {
    auto q = poincare_polynomial(rs, s.flag_type);
    for (std::size_t i = 0; i < q.size(); ++i) {
      std::size_t d = s.shift + i;
      if (d >= rep.rhs.size()) rep.rhs.resize(d + 1, 0);
      rep.rhs[d] += q[i];
    }
  }
  rep.holds = rep.lhs == rep.rhs;
  if (!rep.holds) {
    for (std::size_t d = 0; d < std::max(rep.lhs.size(), rep.rhs.size()); ++d) {
      long long a = d < rep.lhs.size() ? rep.lhs[d] : 0;
      long long b = d < rep.rhs.size() ? rep.rhs[d] : 0;
      if (a != b) {
        rep.first_mismatch = static_cast<int>(d);
        break;
      }
    }
  }
  return rep;
}

DecompositionReport middle_chow_ranks(int n) {
  DecompositionReport rep;
  rep.n = n;
  rep.summands = cm_decomposition(n);
  rep.polynomial_identity_holds = verify_poincare_identity(n).holds;

  const int maxw = shape_max_weight(n);
  std::vector<long long> b(maxw + 1, 0);
  for (const Shape& s : enumerate_shapes(n)) ++b[s.weight()];
  rep.middle_rank_lhs = 0;
  for (int r = 0; r <= maxw; ++r) rep.middle_rank_lhs += b[r] * b[maxw - r];

  auto rs = RootSystem::make(Family::B, n);
  bool dims_ok = true;
  long long total = 0;
  for (const auto& s : rep.summands) {
    auto q = poincare_polynomial(rs, s.flag_type);
    const int dim_flag = static_cast<int>(q.size()) - 1;
    // CH_{4n-5}(M(X_R)(shift)) = CH_{4n-5-shift}(X_R); rank = coeff of
    // t^{dim - k} in the length generating function
    const int k = maxw - s.shift;
    if (k < 0 || k > dim_flag) dims_ok = false;
    long long rank = k < 0 || k > dim_flag ? 0 : q[dim_flag - k];
    rep.middle_rank_summands.push_back(rank);
    total += rank;
  }
  rep.middle_ranks_equal = total == rep.middle_rank_lhs;
  rep.dimensions_in_range = dims_ok;

  // the projective-bundle split of the second summand:
  // rank CH_{2n-2}(X_{1,2}) = rank CH_{2n-2}(X_2) + rank CH_{2n-3}(X_2)
  auto q2 = poincare_polynomial(rs, ParabolicSubset::complement_of(n, {2}));
  auto q12 = poincare_polynomial(rs, ParabolicSubset::complement_of(n, {1, 2}));
  auto rank_at = [](const std::vector<long long>& q, int k) -> long long {
    int dim = static_cast<int>(q.size()) - 1;
    return k < 0 || k > dim ? 0 : q[dim - k];
  };
  rep.projective_bundle_consistent =
      rank_at(q12, 2 * n - 2) == rank_at(q2, 2 * n - 2) + rank_at(q2, 2 * n - 3);
  return rep;
}

}  // namespace ig2
