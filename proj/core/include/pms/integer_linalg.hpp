#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pms {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVec = std::vector<std::int64_t>;

// Exact rank over Q. Runs fraction-free elimination on checked 64-bit
// integers and repeats on arbitrary precision if an intermediate overflows.
int rank(const std::vector<IntVec>& rows);

// Dimension of the affine hull of the points; -1 for an empty list.
int affine_rank(const std::vector<IntVec>& points);

// Indices of some maximal linearly independent subset of the rows.
std::vector<std::size_t> independent_rows(const std::vector<IntVec>& rows);

// Row Hermite normal form of the lattice spanned by a set of integer rows:
// pivots strictly increasing, pivot entries positive, entries above a pivot
// reduced into [0, pivot). Unique for the lattice.
struct HermiteBasis {
  int ambient = 0;
  std::vector<IntVec> rows;
  std::vector<int> pivots;

  int rank() const { return static_cast<int>(rows.size()); }
  // y with y * rows == x, if x lies in the lattice.
  std::optional<IntVec> coordinates(const IntVec& x) const;
  bool contains(const IntVec& x) const { return coordinates(x).has_value(); }
  IntVec combine(const IntVec& y) const;
};

HermiteBasis hermite_normal_form(const std::vector<IntVec>& rows, int ambient);

std::int64_t gcd_of(const IntVec& v);
std::int64_t dot(const IntVec& a, const IntVec& b);

// Unique solution of the square nonsingular system a * y = b over Q;
// absent if a is singular.
std::optional<std::vector<Rational>> solve_rational(
    const std::vector<IntVec>& a, const std::vector<Rational>& b);

}  // namespace pms
