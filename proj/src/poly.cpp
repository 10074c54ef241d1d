// poly.cpp
#include "ig2/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ig2 {

int mono_degree(Mono m, int nvars) {
  int d = 0;
  for (int v = 0; v < nvars; ++v) d += mono_exp(m, v);
  return d;
}

ExactPoly ExactPoly::constant(int nvars, Rat c) {
  ExactPoly f(nvars);
  if (c != 0) f.terms_.emplace(Mono{0}, std::move(c));
  return f;
}

ExactPoly ExactPoly::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw std::invalid_argument("ExactPoly::variable: index out of range");
  ExactPoly f(nvars);
  f.terms_.emplace(mono_of_var(var), Rat(1));
  return f;
}

bool ExactPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 0;
}

Rat ExactPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("constant_value: polynomial is not constant");
  return terms_.begin()->second;
}

int ExactPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m, nvars_));
  return d;
}

bool ExactPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int dm = mono_degree(m, nvars_);
    if (d < 0)
      d = dm;
    else if (d != dm)
      return false;
  }
  return true;
}

const Rat* ExactPoly::coeff(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? nullptr : &it->second;
}

void ExactPoly::add_term(Mono m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& g) {
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& g) {
  for (const auto& [m, c] : g.terms_) add_term(m, -c);
  return *this;
}

ExactPoly ExactPoly::operator*(const ExactPoly& g) const {
  if (degree() + g.degree() > kMaxExponent)
    throw ResourceError("ExactPoly: product degree exceeds the packed-exponent bound");
  ExactPoly out(nvars_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : g.terms_) {
      out.add_term(m1 + m2, c1 * c2);  // packed fields add without carries
    }
  }
  return out;
}

ExactPoly& ExactPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool ExactPoly::operator==(const ExactPoly& g) const {
  if (terms_.size() != g.terms_.size()) return false;
  for (const auto& [m, c] : terms_) {
    auto it = g.terms_.find(m);
    if (it == g.terms_.end() || it->second != c) return false;
  }
  return true;
}

std::vector<std::pair<Mono, Rat>> ExactPoly::sorted_terms() const {
  std::vector<std::pair<Mono, Rat>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::string ExactPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int v = 0; v < nvars_; ++v) {
      int e = mono_exp(m, v);
      if (e == 0) continue;
      os << "*x" << v + 1;
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

// For alpha = e_i - e_j the operator has a closed per-monomial form:
//   d(x_i^a x_j^b ...) = sum_{t} x_i^p x_j^q ...  over p+q = a+b-1 between the
// exponents, with sign depending on whether a > b.  For alpha = e_n (family B)
// a monomial maps to 2c x^(m - e_n) when the x_n exponent is odd, 0 otherwise;
// for alpha = 2e_n (family C) the factor 2 drops out.
ExactPoly divided_difference(const ExactPoly& f, int i, const RootSystem& rs) {
  const int n = rs.rank;
  if (i < 1 || i > n) throw std::invalid_argument("divided_difference: bad simple-root index");
  if (f.nvars() != n) throw std::invalid_argument("divided_difference: variable count != rank");
  ExactPoly out(n);
  if (i < n) {
    const int vi = i - 1, vj = i;
    for (const auto& [m, c] : f.terms()) {
      const int a = mono_exp(m, vi), b = mono_exp(m, vj);
      if (a == b) continue;
      if (a > b) {
        for (int t = 0; t < a - b; ++t)
          out.add_term(mono_with_exp(mono_with_exp(m, vi, a - 1 - t), vj, b + t), c);
      } else {
        for (int t = 0; t < b - a; ++t)
          out.add_term(mono_with_exp(mono_with_exp(m, vi, a + t), vj, b - 1 - t), -c);
      }
    }
  } else {
    const int vn = n - 1;
    const bool halve = rs.family == Family::C;
    for (const auto& [m, c] : f.terms()) {
      const int e = mono_exp(m, vn);
      if (e % 2 == 0) continue;
      out.add_term(mono_with_exp(m, vn, e - 1), halve ? c : c * 2);
    }
  }
  return out;
}

ExactPoly divided_difference_chain(const ExactPoly& f, const std::vector<int>& word,
                                   const RootSystem& rs) {
  ExactPoly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = divided_difference(g, *it, rs);
  return g;
}

}  // namespace ig2
