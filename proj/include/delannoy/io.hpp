#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "delannoy/grid.hpp"
#include "delannoy/params.hpp"
#include "delannoy/recurrence.hpp"

#include "json.hpp"

namespace delannoy {

/// Header `m,n,value`, rows in (m, n) order, values as rational literals.
void write_grid_csv(std::ostream& os, const Grid& g);
/// {"params":{...},"cells":[[...],...]} with cells[m][n] as string literals.
void write_grid_json(std::ostream& os, const Grid& g);

/// Header `n,value`.
void write_diagonal_csv(std::ostream& os, const std::vector<Rational>& values);
void write_diagonal_json(std::ostream& os, const Params& p, const std::vector<Rational>& values);

nlohmann::ordered_json params_json(const Params& p);
/// {"order":k,"valid_from":v,"coeffs":[[c0,c1,...],...],"blocked_roots":[...]}
/// with ascending coefficients as rational literals.
nlohmann::ordered_json recurrence_json(const PolyRecurrence& rec);

/// Two columns `n F_n` in shortest round-trip form, NaN written as `nan`.
void write_plot(std::ostream& os, const std::vector<double>& values);

/// Shortest round-trip decimal for a double; `nan`, `inf`, `-inf` otherwise.
std::string format_double(double v);

/// One rational literal per line; blank lines and lines starting with '#'
/// are skipped. Throws std::runtime_error when the file cannot be read and
/// std::invalid_argument (with the line number) on a malformed literal.
std::vector<Rational> read_boundary_file(const std::string& path);

} // namespace delannoy
