// intlin.cpp
#include "ig2/intlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace ig2 {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Work {
  IntMatrix S, L, R;
  int m, k;

  void row_sub(int i1, int i2, const Int& q) {
    for (int j = 0; j < k; ++j) S[i1][j] -= q * S[i2][j];
    for (int j = 0; j < m; ++j) L[i1][j] -= q * L[i2][j];
  }
  void col_sub(int j1, int j2, const Int& q) {
    for (int i = 0; i < m; ++i) S[i][j1] -= q * S[i][j2];
    for (int i = 0; i < k; ++i) R[i][j1] -= q * R[i][j2];
  }
  void row_swap(int i1, int i2) {
    std::swap(S[i1], S[i2]);
    std::swap(L[i1], L[i2]);
  }
  void col_swap(int j1, int j2) {
    for (int i = 0; i < m; ++i) std::swap(S[i][j1], S[i][j2]);
    for (int i = 0; i < k; ++i) std::swap(R[i][j1], R[i][j2]);
  }
  void row_negate(int i) {
    for (int j = 0; j < k; ++j) S[i][j] = -S[i][j];
    for (int j = 0; j < m; ++j) L[i][j] = -L[i][j];
  }
};

Int iabs(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const int m = static_cast<int>(a.size());
  const int k = m ? static_cast<int>(a[0].size()) : 0;
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != k) throw std::invalid_argument("smith_normal_form: ragged matrix");

  Work w;
  w.m = m;
  w.k = k;
  w.S = a;
  w.L.assign(m, std::vector<Int>(m, 0));
  w.R.assign(k, std::vector<Int>(k, 0));
  for (int i = 0; i < m; ++i) w.L[i][i] = 1;
  for (int j = 0; j < k; ++j) w.R[j][j] = 1;

  int t = 0;
  while (t < std::min(m, k)) {
    // smallest-magnitude pivot in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i) {
      for (int j = t; j < k; ++j) {
        if (w.S[i][j] != 0 && (pi < 0 || iabs(w.S[i][j]) < iabs(w.S[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (w.S[i][t] != 0) {
          Int q = floor_div(w.S[i][t], w.S[t][t]);
          if (q != 0) w.row_sub(i, t, q);
          if (w.S[i][t] != 0) {
            w.row_swap(t, i);
            clean = false;
          }
        }
      }
      for (int j = t + 1; j < k; ++j) {
        if (w.S[t][j] != 0) {
          Int q = floor_div(w.S[t][j], w.S[t][t]);
          if (q != 0) w.col_sub(j, t, q);
          if (w.S[t][j] != 0) {
            w.col_swap(t, j);
            clean = false;
          }
        }
      }
      if (!clean) continue;
      // divisibility sweep: pivot must divide the trailing block
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i) {
        for (int j = t + 1; j < k; ++j) {
          if (w.S[i][j] % w.S[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      w.row_sub(t, bad, Int(-1));  // fold the offending row in and restart
    }
    if (w.S[t][t] < 0) w.row_negate(t);
    ++t;
  }

  SmithForm out;
  out.S = std::move(w.S);
  out.L = std::move(w.L);
  out.R = std::move(w.R);
  return out;
}

std::vector<Int> SmithForm::invariant_factors() const {
  std::vector<Int> out;
  const int m = static_cast<int>(S.size());
  const int k = m ? static_cast<int>(S[0].size()) : 0;
  for (int i = 0; i < std::min(m, k); ++i) {
    if (S[i][i] != 0) out.push_back(S[i][i]);
  }
  return out;
}

std::vector<Int> invariant_factors(const IntMatrix& a) {
  return smith_normal_form(a).invariant_factors();
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& t) {
  const int m = static_cast<int>(a.size());
  const int k = m ? static_cast<int>(a[0].size()) : 0;
  if (static_cast<int>(t.size()) != m) throw std::invalid_argument("solve_integer: size mismatch");
  SmithForm sf = smith_normal_form(a);
  // A x = t  <=>  S y = L t with x = R y
  std::vector<Int> lt(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) lt[i] += sf.L[i][j] * t[j];
  std::vector<Int> y(k, 0);
  for (int i = 0; i < m; ++i) {
    Int d = i < std::min(m, k) ? sf.S[i][i] : Int(0);
    if (d != 0) {
      if (lt[i] % d != 0) return std::nullopt;
      y[i] = lt[i] / d;
    } else if (lt[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Int> x(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) x[i] += sf.R[i][j] * y[j];
  // exactness guard
  for (int i = 0; i < m; ++i) {
    Int s = 0;
    for (int j = 0; j < k; ++j) s += a[i][j] * x[j];
    if (s != t[i]) throw ConsistencyError("solve_integer: residual after SNF solve");
  }
  return x;
}

bool det_odd(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("det_odd: matrix not square");
  // Gaussian elimination over GF(2)
  std::vector<std::vector<char>> b(n, std::vector<char>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = static_cast<char>(a[i][j] % 2 != 0);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (b[i][c]) {
        p = i;
        break;
      }
    }
    if (p < 0) return false;
    std::swap(b[c], b[p]);
    for (int i = c + 1; i < n; ++i) {
      if (b[i][c]) {
        for (int j = c; j < n; ++j) b[i][j] ^= b[c][j];
      }
    }
  }
  return true;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const int m = static_cast<int>(a.size());
  const int p = m ? static_cast<int>(a[0].size()) : 0;
  const int q = p && !b.empty() ? static_cast<int>(b[0].size()) : 0;
  IntMatrix out(m, std::vector<Int>(q, 0));
  for (int i = 0; i < m; ++i)
    for (int l = 0; l < p; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < q; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

}  // namespace ig2
