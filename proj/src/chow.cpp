// chow.cpp
#include "ig2/chow.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ig2 {

void CycleClass::add(int shape_idx, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(shape_idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

int CycleClass::homogeneous_weight(const StructureTable& tab) const {
  int w = -1;
  for (const auto& [idx, c] : coeffs) {
    int wi = tab.weight_of(idx);
    if (w < 0)
      w = wi;
    else if (w != wi)
      throw std::invalid_argument("cycle class is not homogeneous");
  }
  return w;
}

CycleClass multiply_special(const StructureTable& tab, const CycleClass& c, int special_i) {
  if (c.family != tab.family || c.n != tab.n)
    throw std::invalid_argument("multiply_special: class does not belong to this table");
  CycleClass out = CycleClass::zero(c.family, c.n);
  for (const auto& [lam, coeff] : c.coeffs) {
    for (const PieriEntry& e : tab.pieri(special_i, lam)) out.add(e.mu, coeff * e.coeff);
  }
  return out;
}

CycleClass special_monomial(const StructureTable& tab, int a1, int a2) {
  if (a1 < 0 || a2 < 0) throw std::invalid_argument("special_monomial: negative exponent");
  Shape pi0 = special_shape(tab.n, 0);
  CycleClass c = CycleClass::basic(tab.family, tab.n, tab.shape_index(pi0));
  for (int k = 0; k < a1; ++k) c = multiply_special(tab, c, 1);
  for (int k = 0; k < a2; ++k) c = multiply_special(tab, c, 2);
  return c;  // columns above top weight are empty, so overweight lands on zero
}

std::vector<Chain> enumerate_chains(const TableSet& ts, int a1, int a2) {
  const StructureTable& tb = ts.B;
  const StructureTable& tc = ts.C;
  std::vector<int> order;
  for (int k = 0; k < a1; ++k) order.push_back(1);
  for (int k = 0; k < a2; ++k) order.push_back(2);

  int pi0 = tb.shape_index(special_shape(tb.n, 0));
  std::vector<Chain> chains;
  Chain seed;
  seed.steps.push_back(pi0);
  chains.push_back(seed);
  for (int step : order) {
    std::vector<Chain> next;
    for (const Chain& ch : chains) {
      int lam = ch.steps.back();
      const auto& colB = tb.pieri(step, lam);
      const auto& colC = tc.pieri(step, lam);
      if (colB.size() != colC.size())
        throw ConsistencyError("enumerate_chains: compatibility differs between families");
      for (std::size_t k = 0; k < colB.size(); ++k) {
        if (colB[k].mu != colC[k].mu)
          throw ConsistencyError("enumerate_chains: compatibility differs between families");
        Chain ext = ch;
        ext.steps.push_back(colB[k].mu);
        ext.step_sizes.push_back(step);
        ext.exp_b += exact_log2(colB[k].coeff);
        ext.exp_c += exact_log2(colC[k].coeff);
        next.push_back(std::move(ext));
      }
    }
    chains = std::move(next);
  }
  return chains;
}

CycleClass aggregate_chains(const StructureTable& tab, const std::vector<Chain>& chains,
                            Family exponent_family) {
  CycleClass out = CycleClass::zero(tab.family, tab.n);
  for (const Chain& ch : chains) {
    long long e = exponent_family == Family::B ? ch.exp_b : ch.exp_c;
    out.add(ch.steps.back(), Int(1) << e);
  }
  return out;
}

namespace {

// Matrix of the weight-r special monomials of family f over the weight-r
// basic classes: rows = shapes, columns = monomials (a1, a2) = (r-2j, j).
IntMatrix monomial_matrix(const TableSet& ts, Family f, int r, std::vector<int>& level) {
  const StructureTable& tab = table_of(ts, f);
  level = tab.shapes_of_weight(r);
  const int cols = r / 2 + 1;
  IntMatrix a(level.size(), std::vector<Int>(cols, 0));
  for (int j = 0; j < cols; ++j) {
    CycleClass m = special_monomial(tab, r - 2 * j, j);
    for (const auto& [idx, c] : m.coeffs) {
      auto pos = std::find(level.begin(), level.end(), idx);
      a[pos - level.begin()][j] = c;
    }
  }
  return a;
}

}  // namespace

std::vector<Int> solve_special_expansion(const TableSet& ts, int shape_idx) {
  const StructureTable& tc = ts.C;
  const int r = tc.weight_of(shape_idx);
  std::vector<int> level;
  IntMatrix a = monomial_matrix(ts, Family::C, r, level);
  std::vector<Int> t(level.size(), 0);
  auto pos = std::find(level.begin(), level.end(), shape_idx);
  t[pos - level.begin()] = 1;
  auto u = solve_integer(a, t);
  if (!u)
    throw ConsistencyError("solve_special_expansion: no integral solution for " +
                           tc.shapes[shape_idx].to_string() +
                           " (contradicts type-C generation)");
  return *u;
}

LemmaTechReport lemma_tech_check(const TableSet& ts) {
  LemmaTechReport rep;
  rep.n = ts.n;
  const int n = ts.n;
  for (int r : {2 * n - 3, 2 * n - 2}) {
    for (int lam : ts.B.shapes_of_weight(r)) {
      LemmaTechEntry e;
      e.shape_idx = lam;
      e.u = solve_special_expansion(ts, lam);
      CycleClass gamma_prime = CycleClass::zero(Family::B, n);
      for (int j = 0; j <= r / 2; ++j) {
        if (e.u[j] == 0) continue;
        CycleClass m = special_monomial(ts.B, r - 2 * j, j);
        for (const auto& [idx, c] : m.coeffs) gamma_prime.add(idx, e.u[j] * c);
      }
      CycleClass expect = CycleClass::zero(Family::B, n);
      expect.add(lam, 2);
      e.pass = gamma_prime == expect;
      if (!e.pass) {
        std::ostringstream os;
        os << "gamma' != 2 sigma(" << ts.B.shapes[lam].to_string() << ")";
        e.detail = os.str();
        rep.all_pass = false;
      }
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

Int degree_map(const StructureTable& tab, const CycleClass& c) {
  auto it = c.coeffs.find(tab.top_shape_index());
  return it == c.coeffs.end() ? Int(0) : it->second;
}

IntMatrix pairing_matrix(const TableSet& ts, Family f, int r) {
  const StructureTable& tab = table_of(ts, f);
  if (!tab.products_complete)
    throw std::logic_error("pairing_matrix: call ensure_full_products first");
  const int maxw = shape_max_weight(tab.n);
  if (r < 0 || r > maxw) throw std::invalid_argument("pairing_matrix: codimension out of range");
  auto rows = tab.shapes_of_weight(r);
  auto cols = tab.shapes_of_weight(maxw - r);
  const int top = tab.top_shape_index();
  IntMatrix m(rows.size(), std::vector<Int>(cols.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (const PieriEntry& e : product_of(ts, f, rows[i], cols[j])) {
        if (e.mu == top) m[i][j] = e.coeff;
      }
    }
  }
  return m;
}

void ProductCycle::add(int a, int b, const Int& c) {
  if (c == 0) return;
  auto key = std::make_pair(a, b);
  auto [it, inserted] = coeffs.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

int product_cycle_dimension(const StructureTable& tab, const ProductCycle& d) {
  const int maxw = shape_max_weight(tab.n);
  int dim = -1;
  for (const auto& [key, c] : d.coeffs) {
    int di = (maxw - tab.weight_of(key.first)) + (maxw - tab.weight_of(key.second));
    if (dim < 0)
      dim = di;
    else if (dim != di)
      throw std::invalid_argument("product cycle is not homogeneous");
  }
  return dim;
}

Int multiplicity(const StructureTable& tab, const ProductCycle& d) {
  const int maxw = shape_max_weight(tab.n);
  int dim = product_cycle_dimension(tab, d);
  if (dim >= 0 && dim != maxw)
    throw std::invalid_argument("multiplicity: cycle dimension must equal 4n-5");
  Shape pi0 = special_shape(tab.n, 0);
  auto it = d.coeffs.find({tab.shape_index(pi0), tab.top_shape_index()});
  return it == d.coeffs.end() ? Int(0) : it->second;
}

ProductCycle transpose(const ProductCycle& d) {
  ProductCycle out;
  out.n = d.n;
  for (const auto& [key, c] : d.coeffs) out.add(key.second, key.first, c);
  return out;
}

GenerationReport generation_check(const TableSet& ts, Family f) {
  GenerationReport rep;
  rep.family = f;
  rep.n = ts.n;
  const int maxw = shape_max_weight(ts.n);
  for (int r = 0; r <= maxw; ++r) {
    std::vector<int> level;
    IntMatrix a = monomial_matrix(ts, f, r, level);
    auto factors = invariant_factors(a);
    if (factors.size() != level.size()) rep.full_rank_everywhere = false;
    bool all_one = true, all_pow2 = true;
    for (const Int& v : factors) {
      if (v != 1) all_one = false;
      if (!is_power_of_two(v)) all_pow2 = false;
    }
    if (!all_one) {
      rep.integral_everywhere = false;
      rep.failing_degrees.push_back(r);
    }
    if (!all_pow2) rep.two_local_everywhere = false;
    rep.factors_by_degree.push_back(std::move(factors));
  }
  return rep;
}

}  // namespace ig2
