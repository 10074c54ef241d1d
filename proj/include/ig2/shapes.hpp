// shapes.hpp -- strict partitions, skew diagrams, and the two-row shape
// calculus indexing the Schubert bases of the rank-2 isotropic Grassmannians
#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ig2 {

// Strictly decreasing sequence of positive integers; empty = the partition 0.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

  int len() const { return static_cast<int>(parts.size()); }
  int weight() const;
  bool is_strict() const;

  auto operator<=>(const Partition&) const = default;

  std::string to_string() const;  // "3,2,1" or the empty symbol
  static Partition parse(const std::string& text);
};

// Box set with rows indexed from the top, columns from the left (0-based).
struct SkewDiagram {
  std::set<std::pair<int, int>> boxes;

  int box_count() const { return static_cast<int>(boxes.size()); }
  // Connected components under edge adjacency.
  int component_count() const;
};

// D_mu \ D_lambda as a plain set difference of box sets (containment of
// lambda in mu is not required).
SkewDiagram skew(const Partition& mu, const Partition& la);

// Pair (top // bottom) of strict partitions subject to the rank-n validity
// clauses; weight = |top| + |bottom| - C(n-1, 2).
struct Shape {
  int n = 0;
  Partition top;
  Partition bottom;

  Shape() = default;
  Shape(int rank, Partition t, Partition b) : n(rank), top(std::move(t)), bottom(std::move(b)) {}

  // Empty list means valid; otherwise one message per violated clause.
  std::vector<std::string> violations() const;
  bool is_valid() const { return violations().empty(); }

  int weight() const;
  int bottom_length() const { return bottom.len(); }

  auto operator<=>(const Shape&) const = default;

  std::string to_string() const;  // "top//bottom", empty partition printed as the empty symbol
  static Shape parse(int n, const std::string& text);
};

// Weight of a validated shape; throws std::invalid_argument naming the first
// violated clause on invalid input.
int shape_weight(const Shape& s);

// Canonical order: (weight, top, bottom).
bool shape_canonical_less(const Shape& a, const Shape& b);

// All valid shapes for rank n (optionally one weight level), canonically
// ordered and duplicate-free.  Total count is 2n(n-1).
std::vector<Shape> enumerate_shapes(int n, std::optional<int> weight = std::nullopt);

// pi_i = ((n-2+i, n-3, n-4, ..., 1) // 0), i in {0,1,2}.
Shape special_shape(int n, int i);

int shape_max_weight(int n);  // 4n-5

}  // namespace ig2
