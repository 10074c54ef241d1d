// chow.hpp -- the shape-basis Chow rings: cycle classes, special monomials,
// compatible chains, the telescoping exponent identity, the 2gamma
// construction, degree/pairing maps, and correspondence multiplicities
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ig2/bgg.hpp"
#include "ig2/intlin.hpp"
#include "ig2/numeric.hpp"
#include "ig2/shapes.hpp"

namespace ig2 {

// Integer combination of basic classes; coefficients keyed by shape index
// into the owning table's canonical shape list.
struct CycleClass {
  Family family = Family::B;
  int n = 0;
  std::map<int, Int> coeffs;  // no zero values stored

  static CycleClass zero(Family f, int n) { return CycleClass{f, n, {}}; }
  static CycleClass basic(Family f, int n, int shape_idx) {
    return CycleClass{f, n, {{shape_idx, Int(1)}}};
  }
  void add(int shape_idx, const Int& c);
  bool operator==(const CycleClass&) const = default;
  // All stored shapes share one weight; -1 for the zero class.
  int homogeneous_weight(const StructureTable& tab) const;
};

// Linear extension of the Pieri column: c * (special i).
CycleClass multiply_special(const StructureTable& tab, const CycleClass& c, int special_i);

// sigma_1^{a1} * sigma_2^{a2} as iterated Pieri multiplication starting from
// the unit class (sigma_1 factors first).  Weight above 4n-5 gives zero.
CycleClass special_monomial(const StructureTable& tab, int a1, int a2);

struct Chain {
  std::vector<int> steps;        // shape indices lambda_0 .. lambda_m (lambda_0 = pi_0)
  std::vector<int> step_sizes;   // i_k in {1,2} per step
  long long exp_b = 0;           // sum of per-step e_B
  long long exp_c = 0;           // sum of per-step e_C
};

// All compatible chains realizing sigma_1^{a1} sigma_2^{a2} under the fixed
// step order, with both families' exponent sums.  Checks along the way that
// the two families agree on compatibility.
std::vector<Chain> enumerate_chains(const TableSet& ts, int a1, int a2);

// Aggregates 2^{exp} per endpoint; must reproduce special_monomial exactly.
CycleClass aggregate_chains(const StructureTable& tab, const std::vector<Chain>& chains,
                            Family exponent_family);

// Integer vector u with sum_j u_j * tau_1^{r-2j} tau_2^j = tau(lambda) in the
// C table, r = |lambda|.  Throws ConsistencyError when no integral solution
// exists (that would contradict type-C generation).
std::vector<Int> solve_special_expansion(const TableSet& ts, int shape_idx);

struct LemmaTechEntry {
  int shape_idx = 0;
  std::vector<Int> u;
  bool pass = false;
  std::string detail;
};

struct LemmaTechReport {
  int n = 0;
  std::vector<LemmaTechEntry> entries;  // every shape of weight 2n-3 or 2n-2
  bool all_pass = true;
};

// For every basic shape of weight 2n-3 or 2n-2: solve u over family C, form
// gamma' = sum u_j sigma-monomials in family B, require gamma' = 2 sigma(lambda).
LemmaTechReport lemma_tech_check(const TableSet& ts);

// Coefficient of the top-weight shape.
Int degree_map(const StructureTable& tab, const CycleClass& c);

// deg(sigma(lambda) * sigma(mu)) over weight-r rows and weight-(4n-5-r)
// columns; requires full products.
IntMatrix pairing_matrix(const TableSet& ts, Family f, int r);

// Class on the self-product: coefficients keyed by shape-index pairs.
struct ProductCycle {
  int n = 0;
  std::map<std::pair<int, int>, Int> coeffs;
  void add(int a, int b, const Int& c);
};

// Homological dimension (4n-5-|a|) + (4n-5-|b|) shared by all terms; -1 if empty.
int product_cycle_dimension(const StructureTable& tab, const ProductCycle& d);

// Coefficient of [whole space] (x) [point]; requires dimension 4n-5.
Int multiplicity(const StructureTable& tab, const ProductCycle& d);
ProductCycle transpose(const ProductCycle& d);

struct GenerationReport {
  Family family = Family::B;
  int n = 0;
  // per degree r: invariant factors of the monomial matrix
  std::vector<std::vector<Int>> factors_by_degree;
  std::vector<int> failing_degrees;  // degrees with a factor > 1
  bool full_rank_everywhere = true;
  bool integral_everywhere = true;    // all factors 1
  bool two_local_everywhere = true;   // all factors powers of 2
};

// Span of the special monomials degree by degree (Smith form over ZZ).
GenerationReport generation_check(const TableSet& ts, Family f);

}  // namespace ig2
