// intlin.hpp -- small exact integer matrices: Smith normal form with
// transforms, integer linear solves, invariant factors, GF(2) determinants
#pragma once

#include <optional>
#include <vector>

#include "ig2/numeric.hpp"

namespace ig2 {

using IntMatrix = std::vector<std::vector<Int>>;  // row-major, rectangular

struct SmithForm {
  IntMatrix S;  // = L * A * R, diagonal with s_1 | s_2 | ...
  IntMatrix L;  // unimodular, rows x rows
  IntMatrix R;  // unimodular, cols x cols
  std::vector<Int> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Solve A x = t over the integers; nullopt when no integral solution exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& t);

std::vector<Int> invariant_factors(const IntMatrix& a);

bool det_odd(const IntMatrix& a);  // determinant of a square matrix mod 2

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

}  // namespace ig2
