// numeric.hpp -- exact scalar types shared by the whole library
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ig2 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when arguments exceed a documented resource bound (rank caps etc.).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal exactness theorem fails (non-integer expansion
// coefficient, non-power-of-2 special constant, ...).  Never a user error.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_power_of_two(const Int& v) {
  if (v <= 0) return false;
  Int x = v;
  while ((x & 1) == 0) x >>= 1;
  return x == 1;
}

// log2 of a power of two; throws ConsistencyError otherwise.
inline int exact_log2(const Int& v) {
  if (!is_power_of_two(v)) throw ConsistencyError("exact_log2: not a power of two: " + v.str());
  Int x = v;
  int e = 0;
  while (x > 1) {
    x >>= 1;
    ++e;
  }
  return e;
}

}  // namespace ig2
