// motives.hpp -- bookkeeping for the Chernousov-Merkurjev decomposition of
// M(X_2 x X_2): the double-coset table, Tate shifts, the Poincare-polynomial
// identity and the middle-dimension Chow-rank decomposition
#pragma once

#include <string>
#include <vector>

#include "ig2/weyl.hpp"

namespace ig2 {

struct MotiveSummand {
  ParabolicSubset flag_type;  // the subset R_D; X_R is the flag variety of that type
  int shift = 0;              // Tate twist = length of the minimal double-coset rep
};

struct WeylTableRow {
  int row = 0;                  // 1-based, source order
  std::string listed_word;      // as printed, e.g. "a2 a3 a2"
  std::vector<int> word;        // parsed letters
  SignedPerm effective;         // element defined by the action column
  std::vector<int> action;      // effective^{-1}(e_1..e_min(4,n)), signed indices
  bool action_matches_word = true;
  int coset_index = -1;         // double coset of the effective element
  int listed_word_coset_index = -1;
  SignedPerm min_rep;
  int min_length = 0;
  long long coset_size = 0;
  ParabolicSubset r_d;
  std::string note;             // label discrepancies surfaced here
};

struct WeylTableReport {
  int n = 0;
  std::vector<WeylTableRow> rows;
  bool cosets_distinct = false;
  bool covers_all_cosets = false;
  bool lengths_match = false;   // multiset {0, 1, 4, 2n-3, 2n-2, 4n-5} (n=3: drop 4-row)
  std::vector<std::string> notes;
  bool pass = false;
};

// The six rows (five when n = 3): listed word, expected action, R_D.
WeylTableReport weyl_table(int n);

// Summands in source row order; shift of each equals the minimal-rep length
// of its double coset (checked), and the n = 3 case drops the last summand.
std::vector<MotiveSummand> cm_decomposition(int n);

struct PoincareIdentityReport {
  int n = 0;
  bool holds = false;
  int first_mismatch = -1;  // degree of the first differing coefficient
  std::vector<long long> lhs;  // P(X_2, t)^2
  std::vector<long long> rhs;  // sum over summands of t^shift P(X_R, t)
};

PoincareIdentityReport verify_poincare_identity(int n);

struct DecompositionReport {
  int n = 0;
  std::vector<MotiveSummand> summands;
  bool polynomial_identity_holds = false;
  long long middle_rank_lhs = 0;               // sum_r b_r b_{4n-5-r} from shape counts
  std::vector<long long> middle_rank_summands; // rank CH at the displayed dimension, per summand
  bool middle_ranks_equal = false;
  bool projective_bundle_consistent = false;   // rank CH_{2n-2}(X_{1,2}) splits over X_2
  bool dimensions_in_range = false;
};

DecompositionReport middle_chow_ranks(int n);

}  // namespace ig2
