#pragma once

#include <cstdint>
#include <vector>

#include "mbstab/core/types.hpp"

namespace mbstab::core {

/// Square sparse matrix in compressed-row storage. Column indices are
/// semantically 4-byte and values 8-byte for traffic accounting; row offsets
/// are stored wide to be safe for large matrices.
struct CsrMatrix {
    index_t n_rows = 0;
    std::vector<std::int64_t> row_offsets;  // length n_rows+1
    std::vector<std::int32_t> col_indices;  // length nnz, sorted within each row
    std::vector<double> values;             // length nnz

    std::int64_t nnz() const { return row_offsets.empty() ? 0 : row_offsets.back(); }

    /// Average nonzeros per row (the model's C), real-valued.
    double avg_row_nnz() const {
        return n_rows > 0 ? static_cast<double>(nnz()) / static_cast<double>(n_rows) : 0.0;
    }

    /// Checks structural invariants (offsets monotone and consistent, column
    /// indices in range and strictly increasing per row).
    /// Throws std::invalid_argument on violation.
    void validate() const;
};

}  // namespace mbstab::core
