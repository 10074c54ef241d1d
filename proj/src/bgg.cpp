// bgg.cpp
#include "ig2/bgg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ig2 {

namespace {

SignedPerm longest_element(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = -(i + 1);
  return SignedPerm(std::move(im));
}

ExactPoly linear_form(int n, const Vec& root) {
  ExactPoly f(n);
  for (int i = 0; i < n; ++i) {
    if (root[i]) f.add_term(mono_of_var(i), Rat(root[i]));
  }
  return f;
}

ExactPoly top_class(const RootSystem& rs) {
  const int n = rs.rank;
  ExactPoly f = ExactPoly::constant(n, Rat(1, weyl_order(n)));
  for (const Vec& a : rs.positive_roots()) f = f * linear_form(n, a);
  return f;
}

}  // namespace

SchubertBasis::SchubertBasis(const RootSystem& rs, const ParabolicSubset& p, WordStrategy strategy)
    : rs_(rs), parabolic_(p), strategy_(strategy) {
  if (rs.rank > 6) throw ResourceError("SchubertBasis: rank above oracle bound 6");
  const int n = rs.rank;
  reps_ = minimal_coset_reps(rs, p);
  for (const auto& w : reps_) rep_len_.push_back(length(w));
  for (std::size_t i = 0; i < reps_.size(); ++i) rep_index_[reps_[i]] = static_cast<int>(i);

  std::unordered_map<SignedPerm, ExactPoly, SignedPermHash> memo;
  memo.emplace(longest_element(n), top_class(rs));

  // P_w = d_i P_{w s_i} whenever l(w s_i) = l(w) + 1; recurse toward w_0
  // along the strategy-chosen ascent.
  std::function<const ExactPoly&(const SignedPerm&)> build =
      [&](const SignedPerm& w) -> const ExactPoly& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    int pick = 0;
    for (int i = 1; i <= n; ++i) {
      if (!is_right_descent(w, i)) {
        pick = i;
        if (strategy_ == WordStrategy::SmallestDescent) break;
      }
    }
    assert(pick != 0);
    const ExactPoly& up = build(w.compose(SignedPerm::simple_reflection(n, pick)));
    ExactPoly f = divided_difference(up, pick, rs_);
    return memo.emplace(w, std::move(f)).first->second;
  };

  classes_.reserve(reps_.size());
  for (const auto& w : reps_) classes_.push_back(build(w));

  const ExactPoly& unit = classes_[rep_index_.at(SignedPerm::identity(n))];
  if (!(unit == ExactPoly::constant(n, Rat(1))))
    throw ConsistencyError("SchubertBasis: identity class is not the constant 1");
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (classes_[i].degree() != rep_len_[i] || !classes_[i].is_homogeneous())
      throw ConsistencyError("SchubertBasis: class degree != rep length");
  }
}

int SchubertBasis::rep_index(const SignedPerm& w) const {
  auto it = rep_index_.find(w);
  return it == rep_index_.end() ? -1 : it->second;
}

int SchubertBasis::pick_descent(const SignedPerm& w) const {
  const int n = rs_.rank;
  int pick = 0;
  for (int i = 1; i <= n; ++i) {
    if (is_right_descent(w, i)) {
      pick = i;
      if (strategy_ == WordStrategy::SmallestDescent) break;
    }
  }
  return pick;
}

void SchubertBasis::expand_rec(const ExactPoly& f,
                               const std::vector<std::pair<SignedPerm, int>>& targets,
                               std::map<int, Rat>& out) const {
  if (f.is_zero() || targets.empty()) return;
  const int n = rs_.rank;
  std::vector<std::pair<SignedPerm, int>> done;
  std::map<int, std::vector<std::pair<SignedPerm, int>>> by_letter;
  for (const auto& t : targets) {
    if (t.first.is_identity())
      done.push_back(t);
    else
      by_letter[pick_descent(t.first)].push_back(t);
  }
  for (const auto& t : done) {
    Rat c = f.constant_value();
    if (c != 0) out[t.second] = c;
  }
  for (auto& [i, group] : by_letter) {
    ExactPoly fi = divided_difference(f, i, rs_);
    if (fi.is_zero()) continue;
    SignedPerm si = SignedPerm::simple_reflection(n, i);
    std::vector<std::pair<SignedPerm, int>> next;
    next.reserve(group.size());
    for (const auto& t : group) next.emplace_back(t.first.compose(si), t.second);
    expand_rec(fi, next, out);
  }
}

std::map<int, Rat> SchubertBasis::expand(const ExactPoly& f) const {
  std::map<int, Rat> out;
  if (f.is_zero()) return out;
  if (!f.is_homogeneous()) throw std::invalid_argument("expand: polynomial must be homogeneous");
  const int d = f.degree();
  std::vector<std::pair<SignedPerm, int>> targets;
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (rep_len_[i] == d) targets.emplace_back(reps_[i], static_cast<int>(i));
  }
  expand_rec(f, targets, out);
  return out;
}

std::map<int, Int> SchubertBasis::expand_integer(const ExactPoly& f) const {
  std::map<int, Int> out;
  for (const auto& [idx, c] : expand(f)) {
    if (denominator(c) != 1)
      throw ConsistencyError("expand_integer: non-integer coefficient " + c.str() +
                             " at rep " + reps_[idx].to_string());
    out[idx] = numerator(c);
  }
  return out;
}

int StructureTable::shape_index(const Shape& s) const {
  auto it = std::lower_bound(shapes.begin(), shapes.end(), s, shape_canonical_less);
  if (it != shapes.end() && *it == s) return static_cast<int>(it - shapes.begin());
  return -1;
}

const std::vector<PieriEntry>& StructureTable::pieri(int special_i, int lambda) const {
  if (special_i == 1) return pieri1[lambda];
  if (special_i == 2) return pieri2[lambda];
  throw std::invalid_argument("pieri: special index must be 1 or 2");
}

int StructureTable::exponent(int special_i, int lambda, int mu) const {
  for (const auto& e : pieri(special_i, lambda)) {
    if (e.mu == mu) return exact_log2(e.coeff);
  }
  return -1;
}

std::vector<int> StructureTable::shapes_of_weight(int r) const {
  std::vector<int> out;
  for (int i = 0; i < shape_count(); ++i) {
    if (shapes[i].weight() == r) out.push_back(i);
  }
  return out;
}

int StructureTable::top_shape_index() const {
  auto tops = shapes_of_weight(shape_max_weight(n));
  if (tops.size() != 1) throw ConsistencyError("top weight level is not a singleton");
  return tops[0];
}

namespace {

// One Pieri column keyed by rep index, for one multiplier candidate.
using RepColumn = std::map<int, Int>;

struct MatchContext {
  int n = 0;
  int max_weight = 0;
  std::vector<Shape> shapes;
  std::vector<int> shape_bot;                    // bottom lengths
  std::vector<std::vector<int>> shapes_by_wt;    // weight -> shape idxs (canonical order)
  std::vector<std::vector<int>> reps_by_len;     // length -> rep idxs
  std::vector<int> cand_slot;                    // rep idx -> candidate slot or -1
  // columns[family][slot][rep idx] = expansion over reps
  std::vector<std::vector<std::vector<RepColumn>>> columns;
  int pi2_shape = -1;
  int s1_rep = -1;

  Int solutions = 0;
  bool found_first = false;
  std::vector<int> first_solution;
  std::string deepest_failure;
  int deepest_level = -1;
};

bool check_level(MatchContext& ctx, int r, std::vector<int>& rep_of_shape) {
  for (int i = 1; i <= 2; ++i) {
    if (r - i < 0) continue;
    int slot;
    if (i == 1) {
      slot = ctx.cand_slot[ctx.s1_rep];
    } else {
      int pi2rep = rep_of_shape[ctx.pi2_shape];
      if (pi2rep < 0) return false;  // pi_2 level not assigned yet (r < 2 never reaches here)
      slot = ctx.cand_slot[pi2rep];
    }
    for (int lam : ctx.shapes_by_wt[r - i]) {
      int lrep = rep_of_shape[lam];
      const RepColumn& colB = ctx.columns[0][slot][lrep];
      const RepColumn& colC = ctx.columns[1][slot][lrep];
      for (int mu : ctx.shapes_by_wt[r]) {
        int mrep = rep_of_shape[mu];
        auto itb = colB.find(mrep);
        auto itc = colC.find(mrep);
        bool bz = itb == colB.end(), cz = itc == colC.end();
        if (bz != cz) {
          if (r > ctx.deepest_level) {
            ctx.deepest_level = r;
            ctx.deepest_failure = "compatibility differs between families at (" +
                                  ctx.shapes[lam].to_string() + ") * pi" + std::to_string(i) +
                                  " -> (" + ctx.shapes[mu].to_string() + ")";
          }
          return false;
        }
        if (bz) continue;
        const Int& b = itb->second;
        const Int& c = itc->second;
        if (!is_power_of_two(b) || !is_power_of_two(c)) {
          if (r > ctx.deepest_level) {
            ctx.deepest_level = r;
            ctx.deepest_failure = "non power-of-2 special constant at (" +
                                  ctx.shapes[lam].to_string() + ") * pi" + std::to_string(i);
          }
          return false;
        }
        int diff = exact_log2(b) - exact_log2(c);
        int want = ctx.shape_bot[mu] - ctx.shape_bot[lam];
        if (diff != want || diff < 0 || diff > 1) {
          if (r > ctx.deepest_level) {
            ctx.deepest_level = r;
            ctx.deepest_failure = "e_B - e_C != bottom-length difference at (" +
                                  ctx.shapes[lam].to_string() + ") * pi" + std::to_string(i) +
                                  " -> (" + ctx.shapes[mu].to_string() + ")";
          }
          return false;
        }
      }
    }
  }
  return true;
}

// Lexicographically first full assignment; early exit on success.
void match_dfs(MatchContext& ctx, int r, std::vector<int>& rep_of_shape) {
  if (ctx.found_first) return;
  if (r > ctx.max_weight) {
    ctx.found_first = true;
    ctx.first_solution = rep_of_shape;
    return;
  }
  const auto& shl = ctx.shapes_by_wt[r];
  std::vector<int> perm = ctx.reps_by_len[r];  // sorted ascending: lex-first order
  do {
    for (std::size_t k = 0; k < shl.size(); ++k) rep_of_shape[shl[k]] = perm[k];
    if (check_level(ctx, r, rep_of_shape)) match_dfs(ctx, r + 1, rep_of_shape);
    if (ctx.found_first) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int s : shl) rep_of_shape[s] = -1;
}

// Exact solution count.  The level-r constraints touch levels r-1 and r-2
// plus the (level-2) choice of pi_2's representative, so for each admissible
// level-2 assignment the count is a transfer-matrix product over levels with
// states = assignment pairs of two consecutive levels.  Expects levels 0 and
// 1 anchored in rep_of_shape; scrambles levels >= 2.
Int match_count(MatchContext& ctx, std::vector<int>& rep_of_shape) {
  std::vector<std::vector<std::vector<int>>> perms(ctx.max_weight + 1);
  for (int r = 0; r <= ctx.max_weight; ++r) {
    std::vector<int> p = ctx.reps_by_len[r];
    do {
      perms[r].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  auto place = [&](int r, const std::vector<int>& perm) {
    const auto& shl = ctx.shapes_by_wt[r];
    for (std::size_t k = 0; k < shl.size(); ++k) rep_of_shape[shl[k]] = perm[k];
  };

  Int total = 0;
  for (std::size_t p2 = 0; p2 < perms[2].size(); ++p2) {
    place(2, perms[2][p2]);
    if (!check_level(ctx, 2, rep_of_shape)) continue;
    // (perm index at level r-1, perm index at level r) -> count
    std::map<std::pair<int, int>, Int> cur;
    cur[{0, static_cast<int>(p2)}] = 1;  // level 1 is a singleton
    for (int r = 3; r <= ctx.max_weight; ++r) {
      std::map<std::pair<int, int>, Int> next;
      for (const auto& [key, cnt] : cur) {
        place(r - 2, perms[r - 2][key.first]);
        place(r - 1, perms[r - 1][key.second]);
        for (std::size_t pi = 0; pi < perms[r].size(); ++pi) {
          place(r, perms[r][pi]);
          if (check_level(ctx, r, rep_of_shape)) next[{key.second, static_cast<int>(pi)}] += cnt;
        }
      }
      cur = std::move(next);
    }
    for (const auto& [key, cnt] : cur) total += cnt;
  }
  for (int r = 2; r <= ctx.max_weight; ++r)
    for (int s : ctx.shapes_by_wt[r]) rep_of_shape[s] = -1;
  return total;
}

std::vector<PieriEntry> column_to_entries(const RepColumn& col, const std::vector<int>& shape_of_rep) {
  std::vector<PieriEntry> out;
  for (const auto& [rep, c] : col) {
    if (!is_power_of_two(c))
      throw ConsistencyError("special-class constant is not a power of two: " + c.str());
    out.push_back(PieriEntry{shape_of_rep[rep], c});
  }
  std::sort(out.begin(), out.end(), [](const PieriEntry& a, const PieriEntry& b) { return a.mu < b.mu; });
  return out;
}

}  // namespace

TableSet build_table_set(int n, WordStrategy strategy) {
  if (n < 3) throw std::invalid_argument("build_table_set: n must be at least 3");
  if (n > 6) throw ResourceError("build_table_set: n above oracle bound 6");

  const auto parabolic = ParabolicSubset::complement_of(n, {2});
  SchubertBasis basisB(RootSystem::make(Family::B, n), parabolic, strategy);
  SchubertBasis basisC(RootSystem::make(Family::C, n), parabolic, strategy);
  if (basisB.reps() != basisC.reps())
    throw ConsistencyError("build_table_set: families disagree on coset representatives");

  MatchContext ctx;
  ctx.n = n;
  ctx.max_weight = shape_max_weight(n);
  ctx.shapes = enumerate_shapes(n);
  const int count = static_cast<int>(ctx.shapes.size());
  if (count != static_cast<int>(basisB.reps().size()))
    throw ConsistencyError("build_table_set: shape count != coset count");

  for (const Shape& s : ctx.shapes) ctx.shape_bot.push_back(s.bottom_length());
  ctx.shapes_by_wt.assign(ctx.max_weight + 1, {});
  for (int i = 0; i < count; ++i) ctx.shapes_by_wt[ctx.shapes[i].weight()].push_back(i);
  ctx.reps_by_len.assign(ctx.max_weight + 1, {});
  for (int i = 0; i < count; ++i) {
    int l = basisB.rep_length(i);
    if (l > ctx.max_weight) throw ConsistencyError("rep length beyond top weight");
    ctx.reps_by_len[l].push_back(i);
  }
  for (int r = 0; r <= ctx.max_weight; ++r) {
    if (ctx.shapes_by_wt[r].size() != ctx.reps_by_len[r].size())
      throw ConsistencyError("graded shape/rep counts disagree at weight " + std::to_string(r));
  }
  if (ctx.reps_by_len[1].size() != 1)
    throw ConsistencyError("length-1 level is not a singleton");
  ctx.s1_rep = ctx.reps_by_len[1][0];

  Shape pi2 = special_shape(n, 2);
  StructureTable probe;  // only for shape_index
  probe.n = n;
  probe.shapes = ctx.shapes;
  ctx.pi2_shape = probe.shape_index(pi2);
  if (ctx.pi2_shape < 0) throw ConsistencyError("pi_2 not among enumerated shapes");

  // Multiplier candidates: sigma_1's rep plus every length-2 rep.
  std::vector<int> candidates{ctx.s1_rep};
  for (int r2 : ctx.reps_by_len[2]) candidates.push_back(r2);
  ctx.cand_slot.assign(count, -1);
  for (std::size_t k = 0; k < candidates.size(); ++k) ctx.cand_slot[candidates[k]] = static_cast<int>(k);

  ctx.columns.assign(2, std::vector<std::vector<RepColumn>>(candidates.size(),
                                                            std::vector<RepColumn>(count)));
  for (int fam = 0; fam < 2; ++fam) {
    const SchubertBasis& basis = fam == 0 ? basisB : basisC;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const ExactPoly& special = basis.class_of(candidates[k]);
      for (int w = 0; w < count; ++w) {
        ExactPoly prod = basis.class_of(w) * special;
        ctx.columns[fam][k][w] = basis.expand_integer(prod);
      }
    }
  }

  std::vector<int> rep_of_shape(count, -1);
  rep_of_shape[ctx.shapes_by_wt[0][0]] = ctx.reps_by_len[0][0];  // pi_0 -> identity
  rep_of_shape[ctx.shapes_by_wt[1][0]] = ctx.s1_rep;             // pi_1 -> unique length-1 rep
  match_dfs(ctx, 2, rep_of_shape);
  ctx.solutions = ctx.found_first ? match_count(ctx, rep_of_shape) : 0;

  TableSet ts;
  ts.n = n;
  ts.match.solutions_found = ctx.solutions;
  if (ctx.solutions == 0) {
    ts.match.failure = ctx.deepest_failure.empty() ? "no satisfying bijection" : ctx.deepest_failure;
    throw ConsistencyError("matchShapesToReps: " + ts.match.failure);
  }
  ts.match.rep_of_shape = ctx.first_solution;
  ts.match.rep_of_shape[ctx.shapes_by_wt[0][0]] = ctx.reps_by_len[0][0];
  ts.match.rep_of_shape[ctx.shapes_by_wt[1][0]] = ctx.s1_rep;

  std::vector<int> shape_of_rep(count, -1);
  for (int s = 0; s < count; ++s) shape_of_rep[ts.match.rep_of_shape[s]] = s;

  for (int fam = 0; fam < 2; ++fam) {
    StructureTable& tab = fam == 0 ? ts.B : ts.C;
    tab.family = fam == 0 ? Family::B : Family::C;
    tab.n = n;
    tab.shapes = ctx.shapes;
    tab.reps.resize(count, SignedPerm::identity(n));
    const SchubertBasis& basis = fam == 0 ? basisB : basisC;
    for (int s = 0; s < count; ++s) tab.reps[s] = basis.reps()[ts.match.rep_of_shape[s]];
    tab.pieri1.resize(count);
    tab.pieri2.resize(count);
    int slot1 = ctx.cand_slot[ctx.s1_rep];
    int slot2 = ctx.cand_slot[ts.match.rep_of_shape[ctx.pi2_shape]];
    for (int s = 0; s < count; ++s) {
      int w = ts.match.rep_of_shape[s];
      tab.pieri1[s] = column_to_entries(ctx.columns[fam][slot1][w], shape_of_rep);
      tab.pieri2[s] = column_to_entries(ctx.columns[fam][slot2][w], shape_of_rep);
    }
  }
  return ts;
}

void ensure_full_products(TableSet& ts, WordStrategy strategy) {
  if (ts.B.products_complete && ts.C.products_complete) return;
  const int n = ts.n;
  const auto parabolic = ParabolicSubset::complement_of(n, {2});
  const int count = ts.B.shape_count();
  const int maxw = shape_max_weight(n);
  for (int fam = 0; fam < 2; ++fam) {
    StructureTable& tab = fam == 0 ? ts.B : ts.C;
    if (tab.products_complete) continue;
    SchubertBasis basis(RootSystem::make(tab.family, n), parabolic, strategy);
    // basis rep order need not match shape order; translate through the reps
    std::vector<int> basis_idx(count);
    std::vector<int> shape_of_basis(count, -1);
    for (int s = 0; s < count; ++s) {
      basis_idx[s] = basis.rep_index(tab.reps[s]);
      if (basis_idx[s] < 0) throw ConsistencyError("ensure_full_products: matched rep missing");
      shape_of_basis[basis_idx[s]] = s;
    }
    for (int i = 0; i < count; ++i) {
      for (int j = i; j < count; ++j) {
        if (tab.weight_of(i) + tab.weight_of(j) > maxw) continue;
        ExactPoly prod = basis.class_of(basis_idx[i]) * basis.class_of(basis_idx[j]);
        std::vector<PieriEntry> entries;
        for (const auto& [rep, c] : basis.expand_integer(prod)) {
          if (c < 0) throw ConsistencyError("ensure_full_products: negative structure constant");
          entries.push_back(PieriEntry{shape_of_basis[rep], c});
        }
        std::sort(entries.begin(), entries.end(),
                  [](const PieriEntry& a, const PieriEntry& b) { return a.mu < b.mu; });
        if (!entries.empty()) tab.products[{i, j}] = std::move(entries);
      }
    }
    tab.products_complete = true;
  }
}

const StructureTable& table_of(const TableSet& ts, Family f) {
  return f == Family::B ? ts.B : ts.C;
}

StructureTable& table_of(TableSet& ts, Family f) { return f == Family::B ? ts.B : ts.C; }

std::vector<PieriEntry> product_of(const TableSet& ts, Family f, int i, int j) {
  const StructureTable& tab = table_of(ts, f);
  if (i > j) std::swap(i, j);
  if (tab.weight_of(i) + tab.weight_of(j) > shape_max_weight(tab.n)) return {};
  auto it = tab.products.find({i, j});
  if (it == tab.products.end()) {
    if (tab.products_complete) return {};  // a product that vanishes in the quotient
    throw std::logic_error("product_of: full products not materialized; call ensure_full_products");
  }
  return it->second;
}

}  // namespace ig2
