#include "mbstab/core/csr.hpp"

#include <stdexcept>
#include <string>

namespace mbstab::core {

void CsrMatrix::validate() const {
    if (n_rows < 0) throw std::invalid_argument("csr: negative row count");
    if (row_offsets.size() != static_cast<std::size_t>(n_rows) + 1)
        throw std::invalid_argument("csr: row_offsets length must be n_rows+1");
    if (row_offsets.front() != 0) throw std::invalid_argument("csr: row_offsets[0] must be 0");
    if (col_indices.size() != values.size())
        throw std::invalid_argument("csr: col_indices and values length mismatch");
    if (row_offsets.back() != static_cast<std::int64_t>(col_indices.size()))
        throw std::invalid_argument("csr: row_offsets back must equal nnz");

    for (index_t i = 0; i < n_rows; ++i) {
        if (row_offsets[i] > row_offsets[i + 1])
            throw std::invalid_argument("csr: row_offsets not non-decreasing at row " +
                                        std::to_string(i));
        for (std::int64_t k = row_offsets[i]; k < row_offsets[i + 1]; ++k) {
            const std::int32_t col = col_indices[k];
            if (col < 0 || col >= n_rows)
                throw std::invalid_argument("csr: column index out of range in row " +
                                            std::to_string(i));
            if (k > row_offsets[i] && col_indices[k - 1] >= col)
                throw std::invalid_argument(
                    "csr: column indices not strictly increasing in row " + std::to_string(i));
        }
    }
}

}  // namespace mbstab::core
