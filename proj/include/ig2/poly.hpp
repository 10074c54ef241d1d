// poly.hpp -- sparse multivariate polynomials with exact rational
// coefficients, plus the divided-difference operators of both root families
#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ig2/numeric.hpp"
#include "ig2/weyl.hpp"

namespace ig2 {

// Exponent vector packed 8 bits per variable (up to 8 variables, exponents
// up to 255 -- comfortably beyond the degree-n^2 polynomials at rank <= 6).
using Mono = std::uint64_t;

constexpr int kMaxPolyVars = 8;
constexpr int kMaxExponent = 255;

inline int mono_exp(Mono m, int var) { return static_cast<int>((m >> (8 * var)) & 0xff); }

inline Mono mono_with_exp(Mono m, int var, int e) {
  return (m & ~(Mono{0xff} << (8 * var))) | (Mono{static_cast<unsigned>(e)} << (8 * var));
}

inline Mono mono_of_var(int var) { return Mono{1} << (8 * var); }

int mono_degree(Mono m, int nvars);

class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(int nvars) : nvars_(nvars) {}

  static ExactPoly constant(int nvars, Rat c);
  static ExactPoly variable(int nvars, int var);  // x_{var}, 0-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const;
  Rat constant_value() const;  // 0 for the zero polynomial

  // -1 for the zero polynomial; asserts homogeneity when homogeneous=true.
  int degree() const;
  bool is_homogeneous() const;

  const Rat* coeff(Mono m) const;
  void add_term(Mono m, const Rat& c);  // accumulates; drops resulting zeros

  ExactPoly& operator+=(const ExactPoly& g);
  ExactPoly& operator-=(const ExactPoly& g);
  ExactPoly operator*(const ExactPoly& g) const;
  ExactPoly& operator*=(const Rat& c);

  bool operator==(const ExactPoly& g) const;

  // Terms sorted by exponent key; the deterministic view for serialization,
  // hashing and display.
  std::vector<std::pair<Mono, Rat>> sorted_terms() const;

  std::string to_string() const;  // debugging aid

  const std::unordered_map<Mono, Rat>& terms() const { return terms_; }

 private:
  int nvars_ = 0;
  std::unordered_map<Mono, Rat> terms_;
};

// d_i f = (f - s_i f) / alpha_i for the i-th simple root of rs (1-based i).
// Exact by construction: the antisymmetrized numerator is always divisible.
// The two families differ only at i = n (alpha_n = e_n vs 2 e_n).
ExactPoly divided_difference(const ExactPoly& f, int i, const RootSystem& rs);

// Composite d_w along a reduced word of w (rightmost letter applied first).
ExactPoly divided_difference_chain(const ExactPoly& f, const std::vector<int>& word,
                                   const RootSystem& rs);

}  // namespace ig2
