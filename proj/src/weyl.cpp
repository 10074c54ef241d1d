// weyl.cpp
#include "ig2/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ig2/numeric.hpp"

namespace ig2 {

RootSystem RootSystem::make(Family family, int rank) {
  if (rank < 1) throw std::invalid_argument("RootSystem: rank must be positive");
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  for (int i = 1; i < rank; ++i) {
    Vec a(rank, 0);
    a[i - 1] = 1;
    a[i] = -1;
    rs.simple_roots.push_back(std::move(a));
  }
  Vec last(rank, 0);
  last[rank - 1] = family == Family::B ? 1 : 2;
  rs.simple_roots.push_back(std::move(last));
  return rs;
}

std::vector<Vec> RootSystem::positive_roots() const {
  std::vector<Vec> roots;
  const int n = rank;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Vec a(n, 0), b(n, 0);
      a[i] = 1;
      a[j] = -1;
      b[i] = 1;
      b[j] = 1;
      roots.push_back(std::move(a));
      roots.push_back(std::move(b));
    }
  }
  for (int i = 0; i < n; ++i) {
    Vec c(n, 0);
    c[i] = family == Family::B ? 1 : 2;
    roots.push_back(std::move(c));
  }
  return roots;
}

SignedPerm::SignedPerm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    int a = std::abs(v);
    if (a < 1 || a > static_cast<int>(images_.size()) || seen[a - 1])
      throw std::invalid_argument("SignedPerm: images must be a signed permutation of 1..n");
    seen[a - 1] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return SignedPerm(std::move(im));
}

SignedPerm SignedPerm::simple_reflection(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("simple_reflection: index out of range");
  SignedPerm w = identity(n);
  if (i < n)
    std::swap(w.images_[i - 1], w.images_[i]);
  else
    w.images_[n - 1] = -n;
  return w;
}

SignedPerm SignedPerm::compose(const SignedPerm& w) const {
  assert(rank() == w.rank());
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    int t = w.images_[i];
    int v = images_[std::abs(t) - 1];
    out[i] = t > 0 ? v : -v;
  }
  SignedPerm r;
  r.images_ = std::move(out);
  return r;
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    int t = images_[i];
    if (t > 0)
      out[t - 1] = static_cast<int>(i) + 1;
    else
      out[-t - 1] = -(static_cast<int>(i) + 1);
  }
  SignedPerm r;
  r.images_ = std::move(out);
  return r;
}

Vec SignedPerm::act(const Vec& v) const {
  assert(v.size() == images_.size());
  Vec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    int t = images_[i];
    if (t > 0)
      out[t - 1] += v[i];
    else
      out[-t - 1] -= v[i];
  }
  return out;
}

bool SignedPerm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string SignedPerm::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ',';
    os << images_[i];
  }
  os << ')';
  return os.str();
}

std::size_t SignedPermHash::operator()(const SignedPerm& w) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : w.images()) {
    h ^= static_cast<std::size_t>(v + 64);
    h *= 1099511628211ull;
  }
  return h;
}

bool is_negative_root(const Vec& v) {
  for (int x : v) {
    if (x != 0) return x < 0;
  }
  throw std::invalid_argument("is_negative_root: zero vector");
}

int length(const SignedPerm& w) {
  // Family-independent; count with the B-roots.
  const int n = w.rank();
  int l = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Vec a(n, 0);
      a[i] = 1;
      a[j] = -1;
      if (is_negative_root(w.act(a))) ++l;
      a[j] = 1;
      if (is_negative_root(w.act(a))) ++l;
    }
    Vec c(n, 0);
    c[i] = 1;
    if (is_negative_root(w.act(c))) ++l;
  }
  return l;
}

bool is_right_descent(const SignedPerm& w, int i) {
  const int n = w.rank();
  Vec a(n, 0);
  if (i < n) {
    a[i - 1] = 1;
    a[i] = -1;
  } else {
    a[n - 1] = 1;
  }
  return is_negative_root(w.act(a));
}

std::vector<int> reduced_word(const SignedPerm& w) {
  const int n = w.rank();
  std::vector<int> rev;
  SignedPerm cur = w;
  while (!cur.is_identity()) {
    int i = 0;
    for (int k = 1; k <= n; ++k) {
      if (is_right_descent(cur, k)) {
        i = k;
        break;
      }
    }
    assert(i != 0);
    rev.push_back(i);
    cur = cur.compose(SignedPerm::simple_reflection(n, i));
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

SignedPerm word_to_element(int n, const std::vector<int>& word) {
  SignedPerm w = SignedPerm::identity(n);
  for (int i : word) w = w.compose(SignedPerm::simple_reflection(n, i));
  return w;
}

long long weyl_order(int rank) {
  long long v = 1;
  for (int k = 2; k <= rank; ++k) v *= k;
  return v << rank;
}

void for_each_weyl_element(int rank, const std::function<void(const SignedPerm&)>& fn) {
  if (rank < 1) throw std::invalid_argument("for_each_weyl_element: rank must be positive");
  if (rank > 9) throw ResourceError("for_each_weyl_element: rank above enumeration bound 9");
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (std::uint32_t mask = 0; mask < (1u << rank); ++mask) {
      std::vector<int> im(rank);
      for (int i = 0; i < rank; ++i) im[i] = (mask >> i) & 1 ? -perm[i] : perm[i];
      fn(SignedPerm(std::move(im)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

ParabolicSubset ParabolicSubset::complement_of(int rank, const std::vector<int>& removed) {
  ParabolicSubset p;
  p.rank = rank;
  for (int i = 1; i <= rank; ++i) {
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) p.included.push_back(i);
  }
  return p;
}

std::vector<int> ParabolicSubset::removed() const {
  std::vector<int> out;
  for (int i = 1; i <= rank; ++i) {
    if (std::find(included.begin(), included.end(), i) == included.end()) out.push_back(i);
  }
  return out;
}

std::string ParabolicSubset::to_string() const {
  std::ostringstream os;
  os << "Pi";
  auto rem = removed();
  if (!rem.empty()) {
    os << "\\{";
    for (std::size_t k = 0; k < rem.size(); ++k) {
      if (k) os << ',';
      os << "a" << rem[k];
    }
    os << '}';
  }
  return os.str();
}

namespace {

// Dominant vector whose stabilizer is exactly W_P: sum of 2*omega_i over the
// removed simple roots (2*omega_n = e_1 + ... + e_n keeps everything integral).
Vec parabolic_base_vector(const ParabolicSubset& p) {
  const int n = p.rank;
  Vec v(n, 0);
  for (int i : p.removed()) {
    if (i < n) {
      for (int k = 0; k < i; ++k) v[k] += 2;
    } else {
      for (int k = 0; k < n; ++k) v[k] += 1;
    }
  }
  return v;
}

struct OrbitData {
  // Breadth-first orbit of the base vector under all simple reflections.
  // depth = minimal word length = length of the minimal coset representative.
  std::map<Vec, int> depth;
  std::map<Vec, SignedPerm> rep;  // representative built along a shortest path
};

OrbitData coset_orbit(const ParabolicSubset& p) {
  const int n = p.rank;
  OrbitData od;
  Vec v0 = parabolic_base_vector(p);
  od.depth[v0] = 0;
  od.rep.emplace(v0, SignedPerm::identity(n));
  std::deque<Vec> queue{v0};
  std::vector<SignedPerm> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(SignedPerm::simple_reflection(n, i));
  while (!queue.empty()) {
    Vec v = queue.front();
    queue.pop_front();
    int d = od.depth[v];
    const SignedPerm& w = od.rep.at(v);
    for (int i = 0; i < n; ++i) {
      Vec u = gens[i].act(v);
      if (od.depth.contains(u)) continue;
      od.depth[u] = d + 1;
      od.rep.emplace(u, gens[i].compose(w));  // left multiplication: coset s_i w W_P
      queue.push_back(u);
    }
  }
  return od;
}

}  // namespace

std::vector<SignedPerm> minimal_coset_reps(const RootSystem& rs, const ParabolicSubset& p) {
  if (rs.rank != p.rank) throw std::invalid_argument("minimal_coset_reps: rank mismatch");
  OrbitData od = coset_orbit(p);
  std::vector<SignedPerm> reps;
  reps.reserve(od.rep.size());
  for (auto& [v, w] : od.rep) {
    assert(length(w) == od.depth.at(v));
    reps.push_back(w);
  }
  std::sort(reps.begin(), reps.end(), [](const SignedPerm& a, const SignedPerm& b) {
    int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return a.images() < b.images();
  });
  return reps;
}

DoubleCosetDecomposition double_cosets(const RootSystem& rs, const ParabolicSubset& p) {
  if (rs.rank != p.rank) throw std::invalid_argument("double_cosets: rank mismatch");
  const int n = rs.rank;
  OrbitData od = coset_orbit(p);
  const long long order_W = weyl_order(n);
  const long long order_WP = order_W / static_cast<long long>(od.depth.size());

  std::vector<SignedPerm> pgens;
  for (int i : p.included) pgens.push_back(SignedPerm::simple_reflection(n, i));

  DoubleCosetDecomposition dec;
  dec.parabolic = p;
  dec.base_vector_ = parabolic_base_vector(p);

  std::map<Vec, bool> visited;
  for (auto& [v0, d0] : od.depth) {
    if (visited[v0]) continue;
    // W_P-orbit on the coset orbit = one double coset
    std::vector<Vec> orbit{v0};
    visited[v0] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const SignedPerm& g : pgens) {
        Vec u = g.act(orbit[k]);
        if (!visited[u]) {
          visited[u] = true;
          orbit.push_back(u);
        }
      }
    }
    int min_len = -1;
    int min_count = 0;
    const Vec* min_vec = nullptr;
    for (const Vec& u : orbit) {
      int d = od.depth.at(u);
      if (min_len < 0 || d < min_len) {
        min_len = d;
        min_count = 1;
        min_vec = &u;
      } else if (d == min_len) {
        ++min_count;
      }
    }
    if (min_count != 1)
      throw ConsistencyError("double_cosets: minimal-length element not unique in a double coset");
    DoubleCoset dc;
    dc.min_rep = od.rep.at(*min_vec);
    dc.min_length = min_len;
    dc.size = static_cast<long long>(orbit.size()) * order_WP;
    int idx = static_cast<int>(dec.cosets.size());
    dec.cosets.push_back(dc);
    for (const Vec& u : orbit) dec.orbit_to_coset_[u] = idx;
  }

  // Sort by (min length, rep) and remap indices.
  std::vector<int> order(dec.cosets.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (dec.cosets[a].min_length != dec.cosets[b].min_length)
      return dec.cosets[a].min_length < dec.cosets[b].min_length;
    return dec.cosets[a].min_rep.images() < dec.cosets[b].min_rep.images();
  });
  std::vector<int> inv(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) inv[order[k]] = static_cast<int>(k);
  std::vector<DoubleCoset> sorted;
  for (int k : order) sorted.push_back(dec.cosets[k]);
  dec.cosets = std::move(sorted);
  for (auto& [v, idx] : dec.orbit_to_coset_) idx = inv[idx];

  long long total = 0;
  for (const auto& dc : dec.cosets) total += dc.size;
  if (total != order_W) throw ConsistencyError("double_cosets: sizes do not sum to |W|");
  return dec;
}

int DoubleCosetDecomposition::coset_index_of(const SignedPerm& w) const {
  auto it = orbit_to_coset_.find(w.act(base_vector_));
  if (it == orbit_to_coset_.end())
    throw std::invalid_argument("coset_index_of: element not in decomposition's group");
  return it->second;
}

std::vector<long long> poincare_polynomial(const RootSystem& rs, const ParabolicSubset& p) {
  if (rs.rank != p.rank) throw std::invalid_argument("poincare_polynomial: rank mismatch");
  OrbitData od = coset_orbit(p);
  int maxd = 0;
  for (auto& [v, d] : od.depth) maxd = std::max(maxd, d);
  std::vector<long long> coeffs(maxd + 1, 0);
  for (auto& [v, d] : od.depth) ++coeffs[d];
  return coeffs;
}

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

long long poly_at_one(const std::vector<long long>& a) {
  long long s = 0;
  for (long long c : a) s += c;
  return s;
}

bool poly_palindromic(const std::vector<long long>& a) {
  for (std::size_t i = 0; i < a.size() / 2; ++i) {
    if (a[i] != a[a.size() - 1 - i]) return false;
  }
  return true;
}

}  // namespace ig2
