#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "tfde/dense.hpp"

namespace tfde {

/// Writes "%%MatrixMarket matrix coordinate real general". Every entry is
/// listed unless skip_zeros is set, so structured matrices round-trip with
/// their explicit zeros.
void write_matrix_market(std::ostream& os, const DenseMatrix& m,
                         bool skip_zeros = false);

/// Diagonal matrix in coordinate format; exactly diag.size() entries.
void write_matrix_market_diagonal(std::ostream& os, std::span<const double> diag);

/// Column vector in "%%MatrixMarket matrix array real general" format.
void write_matrix_market_vector(std::ostream& os, std::span<const double> v);

/// Reads coordinate or array real general files into a dense matrix.
/// Throws std::runtime_error on malformed input.
DenseMatrix read_matrix_market(std::istream& is);

void save_matrix_market(const std::string& path, const DenseMatrix& m);
DenseMatrix load_matrix_market(const std::string& path);

}  // namespace tfde
