#pragma once

#include <vector>

#include "delannoy/rational.hpp"

namespace delannoy {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Basis of { v : M v = 0 } over the rationals, one vector per free column
/// of the echelon form. Rows are scaled to integers and reduced with
/// fraction-free (Bareiss) elimination. All rows must have the same length.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Rank of M, from the same elimination.
std::size_t rank(const RationalMatrix& m);

} // namespace delannoy
