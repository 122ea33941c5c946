#pragma once

#include <iosfwd>
#include <string>

#include "mbstab/core/csr.hpp"

namespace mbstab::core {

/// Reads a coordinate-format MatrixMarket file (real or integer field,
/// general or symmetric). Symmetric inputs are expanded to full storage,
/// duplicate entries are summed, rows are sorted by column index.
/// Throws std::runtime_error with "<name>:<line>: message" on parse errors
/// and rejects non-square matrices.
CsrMatrix read_matrix_market(const std::string& path);
CsrMatrix read_matrix_market(std::istream& in, const std::string& name);

/// Writes coordinate-format "matrix coordinate real general", 1-based indices.
void write_matrix_market(const CsrMatrix& A, const std::string& path);
void write_matrix_market(const CsrMatrix& A, std::ostream& out);

}  // namespace mbstab::core
