// bgg.hpp -- the independent structure-constant oracle: Schubert basis
// representatives via divided differences, basis expansion, the Pieri
// structure tables for both families, and the shape <-> Weyl-element matching
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ig2/numeric.hpp"
#include "ig2/poly.hpp"
#include "ig2/shapes.hpp"
#include "ig2/weyl.hpp"

namespace ig2 {

// Reduced words are canonical but not unique; two deterministic choices let
// tests confirm word-independence of every computed constant.
enum class WordStrategy { SmallestDescent, LargestDescent };

// Polynomial representatives of the Schubert classes of G/P, one per minimal
// coset representative.  The top class is (1/|W|) prod of positive roots and
// every other class is a divided-difference chain away from it; the identity
// is asserted to land on the constant 1.
class SchubertBasis {
 public:
  SchubertBasis(const RootSystem& rs, const ParabolicSubset& p,
                WordStrategy strategy = WordStrategy::SmallestDescent);

  const RootSystem& root_system() const { return rs_; }
  const ParabolicSubset& parabolic() const { return parabolic_; }
  WordStrategy strategy() const { return strategy_; }

  const std::vector<SignedPerm>& reps() const { return reps_; }
  int rep_length(int idx) const { return rep_len_[idx]; }
  int rep_index(const SignedPerm& w) const;  // -1 if not a minimal rep
  const ExactPoly& class_of(int idx) const { return classes_[idx]; }

  // Coefficients over the reps whose length equals deg f (f homogeneous).
  // Entries with zero coefficient are omitted.
  std::map<int, Rat> expand(const ExactPoly& f) const;
  // Same, asserting every coefficient is an integer (ConsistencyError else).
  std::map<int, Int> expand_integer(const ExactPoly& f) const;

 private:
  int pick_descent(const SignedPerm& w) const;
  void expand_rec(const ExactPoly& f, const std::vector<std::pair<SignedPerm, int>>& targets,
                  std::map<int, Rat>& out) const;

  RootSystem rs_;
  ParabolicSubset parabolic_;
  WordStrategy strategy_;
  std::vector<SignedPerm> reps_;
  std::vector<int> rep_len_;
  std::vector<ExactPoly> classes_;
  std::unordered_map<SignedPerm, int, SignedPermHash> rep_index_;
};

struct PieriEntry {
  int mu = 0;  // shape index
  Int coeff;   // always a power of two (checked)
  bool operator==(const PieriEntry&) const = default;
};

// Pieri columns (and optionally all basic products) for one family, indexed
// by the canonical shape list.  Pure data; serializable.
struct StructureTable {
  Family family = Family::B;
  int n = 0;
  std::vector<Shape> shapes;      // canonical order; shapes[i] has rank n
  std::vector<SignedPerm> reps;   // reps[i] matched with shapes[i]
  // pieri[i-1][lambda] = expansion of (basic lambda) * (special i)
  std::vector<std::vector<PieriEntry>> pieri1, pieri2;
  // products[key(i,j)] for i <= j with |i|+|j| <= 4n-5; absent until filled
  std::map<std::pair<int, int>, std::vector<PieriEntry>> products;
  bool products_complete = false;

  int shape_count() const { return static_cast<int>(shapes.size()); }
  int weight_of(int idx) const { return shapes[idx].weight(); }
  int shape_index(const Shape& s) const;  // -1 if absent
  const std::vector<PieriEntry>& pieri(int special_i, int lambda) const;

  // log2 of the coefficient of mu in lambda * special_i, or -1 when the pair
  // is not compatible.
  int exponent(int special_i, int lambda, int mu) const;
  bool compatible(int special_i, int lambda, int mu) const {
    return exponent(special_i, lambda, mu) >= 0;
  }
  std::vector<int> shapes_of_weight(int r) const;
  int top_shape_index() const;  // the unique weight-(4n-5) shape
};

struct MatchResult {
  std::vector<int> rep_of_shape;  // shape idx -> rep idx
  Int solutions_found = 0;        // exact ambiguity count of the constraint search
  std::string failure;            // nonempty when no bijection exists
};

// Both families' tables over one shared shape/rep matching.
struct TableSet {
  int n = 0;
  StructureTable B, C;
  MatchResult match;
};

// Runs the full oracle: bases for both families, the constrained
// level-by-level matching, and the special Pieri columns.
// Resource bound: n <= 6.
TableSet build_table_set(int n, WordStrategy strategy = WordStrategy::SmallestDescent);

// Fills every basic x basic product with weight sum <= 4n-5 (both tables).
// Rebuilds the Schubert bases when the set was loaded from a cache file.
void ensure_full_products(TableSet& ts, WordStrategy strategy = WordStrategy::SmallestDescent);

const StructureTable& table_of(const TableSet& ts, Family f);
StructureTable& table_of(TableSet& ts, Family f);

// Expansion of (basic i) * (basic j), using the cached product when present.
std::vector<PieriEntry> product_of(const TableSet& ts, Family f, int i, int j);

}  // namespace ig2
