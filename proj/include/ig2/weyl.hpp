// weyl.hpp -- root systems B_n/C_n, the hyperoctahedral Weyl group as signed
// permutations, lengths, parabolic quotients, double cosets, Poincare polynomials
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ig2 {

enum class Family : std::uint8_t { B, C };

inline char family_letter(Family f) { return f == Family::B ? 'B' : 'C'; }

// Integer vector in the e_1..e_n coordinates.
using Vec = std::vector<int>;

struct RootSystem {
  Family family;
  int rank;  // n >= 3 for everything in this project; >= 1 tolerated here
  // alpha_i = e_i - e_{i+1} for i < n; alpha_n = e_n (B) or 2e_n (C)
  std::vector<Vec> simple_roots;

  static RootSystem make(Family family, int rank);
  std::vector<Vec> positive_roots() const;  // cardinality n^2 for both families
};

// Element of W(B_n) = W(C_n).  images[i] = w(e_{i+1}) encoded as a signed
// 1-based index; absolute values form a permutation of 1..n.
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> images);

  static SignedPerm identity(int n);
  // Reflection in alpha_i, 1 <= i <= n (i = n flips the sign of e_n).
  static SignedPerm simple_reflection(int n, int i);

  int rank() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }  // 1-based
  const std::vector<int>& images() const { return images_; }

  SignedPerm compose(const SignedPerm& w) const;  // (*this) o w
  SignedPerm inverse() const;
  Vec act(const Vec& v) const;
  bool is_identity() const;

  bool operator==(const SignedPerm&) const = default;
  auto operator<=>(const SignedPerm&) const = default;

  std::string to_string() const;  // e.g. "(1,-3,2)"

 private:
  std::vector<int> images_;
};

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& w) const;
};

// True iff the first nonzero coordinate is negative (every vector passed in
// is a root, so this decides membership in the negative half).
bool is_negative_root(const Vec& v);

// Coxeter length: number of positive roots sent to negative ones.  Identical
// for B and C (the families share the same reflections).
int length(const SignedPerm& w);

// l(w s_i) < l(w), i.e. w(alpha_i) < 0.
bool is_right_descent(const SignedPerm& w, int i);

// Reduced word by stripping the smallest right descent; w = prod s_{word[k]}.
std::vector<int> reduced_word(const SignedPerm& w);

SignedPerm word_to_element(int n, const std::vector<int>& word);

// Streams every element of W(B_n) exactly once (2^n n! of them).
// Throws ResourceError for rank > 9.
void for_each_weyl_element(int rank, const std::function<void(const SignedPerm&)>& fn);

long long weyl_order(int rank);  // 2^n n!

struct ParabolicSubset {
  int rank = 0;
  std::vector<int> included;  // subset of {1..n}, sorted ascending

  // Pi minus the listed simple roots.
  static ParabolicSubset complement_of(int rank, const std::vector<int>& removed);
  std::vector<int> removed() const;  // {1..n} \ included
  bool is_full() const { return static_cast<int>(included.size()) == rank; }
  std::string to_string() const;
};

// Minimal-length representatives of the left cosets w W_P, sorted by
// (length, one-line notation).  Size |W| / |W_P|.
std::vector<SignedPerm> minimal_coset_reps(const RootSystem& rs, const ParabolicSubset& p);

struct DoubleCoset {
  SignedPerm min_rep;   // unique element of minimal length
  int min_length = 0;
  long long size = 0;   // number of group elements in W_P w W_P
};

class DoubleCosetDecomposition {
 public:
  ParabolicSubset parabolic;
  std::vector<DoubleCoset> cosets;  // sorted by min_length, then one-line rep

  // Index of the double coset containing w.
  int coset_index_of(const SignedPerm& w) const;

 private:
  friend DoubleCosetDecomposition double_cosets(const RootSystem&, const ParabolicSubset&);
  Vec base_vector_;
  std::map<Vec, int> orbit_to_coset_;
};

DoubleCosetDecomposition double_cosets(const RootSystem& rs, const ParabolicSubset& p);

// Length generating function of W^P: coeffs[k] = #{w in W^P : l(w) = k}.
// Value at 1 is |W|/|W_P|; the degree is dim of the flag variety of type P.
std::vector<long long> poincare_polynomial(const RootSystem& rs, const ParabolicSubset& p);

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b);
long long poly_at_one(const std::vector<long long>& a);
bool poly_palindromic(const std::vector<long long>& a);

}  // namespace ig2
