#pragma once

#include "mbstab/core/csr.hpp"

namespace mbstab::core {

/// 7-point Laplacian stencil on an nx*ny*nz grid, lexicographic ordering
/// (x fastest). Constant diagonal 6, off-diagonals -1 regardless of boundary,
/// which keeps the matrix strictly diagonally dominant and nonsingular.
CsrMatrix gen_poisson_7pt(int nx, int ny, int nz);

/// 5-point stencil on an nx*ny grid; diagonal 4, off-diagonals -1.
CsrMatrix gen_poisson_5pt(int nx, int ny);

/// Nonzero counts of the generated matrices without building them
/// (used by the performance model to derive C = nnz/N for large grids).
std::int64_t poisson_7pt_nnz(int nx, int ny, int nz);
std::int64_t poisson_5pt_nnz(int nx, int ny);

}  // namespace mbstab::core
