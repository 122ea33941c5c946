#include "mbstab/core/generators.hpp"

#include <limits>
#include <stdexcept>

namespace mbstab::core {

namespace {

void check_dims(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("grid dimensions must be >= 1");
    const std::int64_t limit = std::numeric_limits<std::int32_t>::max();
    if (a > limit / b || a * b > limit / c)
        throw std::invalid_argument("grid dimension overflow");
}

}  // namespace

std::int64_t poisson_7pt_nnz(int nx, int ny, int nz) {
    check_dims(nx, ny, nz);
    const std::int64_t n = static_cast<std::int64_t>(nx) * ny * nz;
    // Each interior grid link contributes two off-diagonal entries.
    const std::int64_t links = static_cast<std::int64_t>(nx - 1) * ny * nz +
                               static_cast<std::int64_t>(nx) * (ny - 1) * nz +
                               static_cast<std::int64_t>(nx) * ny * (nz - 1);
    return n + 2 * links;
}

std::int64_t poisson_5pt_nnz(int nx, int ny) {
    check_dims(nx, ny, 1);
    const std::int64_t n = static_cast<std::int64_t>(nx) * ny;
    const std::int64_t links = static_cast<std::int64_t>(nx - 1) * ny +
                               static_cast<std::int64_t>(nx) * (ny - 1);
    return n + 2 * links;
}

CsrMatrix gen_poisson_7pt(int nx, int ny, int nz) {
    const std::int64_t nnz = poisson_7pt_nnz(nx, ny, nz);
    const std::int64_t n = static_cast<std::int64_t>(nx) * ny * nz;
    const std::int64_t plane = static_cast<std::int64_t>(nx) * ny;

    CsrMatrix A;
    A.n_rows = n;
    A.row_offsets.reserve(n + 1);
    A.col_indices.reserve(nnz);
    A.values.reserve(nnz);
    A.row_offsets.push_back(0);

    for (int z = 0; z < nz; ++z) {
        for (int y = 0; y < ny; ++y) {
            for (int x = 0; x < nx; ++x) {
                const std::int64_t row = x + nx * (y + static_cast<std::int64_t>(ny) * z);
                // Neighbors emitted in ascending column order.
                if (z > 0) { A.col_indices.push_back(static_cast<std::int32_t>(row - plane)); A.values.push_back(-1.0); }
                if (y > 0) { A.col_indices.push_back(static_cast<std::int32_t>(row - nx)); A.values.push_back(-1.0); }
                if (x > 0) { A.col_indices.push_back(static_cast<std::int32_t>(row - 1)); A.values.push_back(-1.0); }
                A.col_indices.push_back(static_cast<std::int32_t>(row));
                A.values.push_back(6.0);
                if (x < nx - 1) { A.col_indices.push_back(static_cast<std::int32_t>(row + 1)); A.values.push_back(-1.0); }
                if (y < ny - 1) { A.col_indices.push_back(static_cast<std::int32_t>(row + nx)); A.values.push_back(-1.0); }
                if (z < nz - 1) { A.col_indices.push_back(static_cast<std::int32_t>(row + plane)); A.values.push_back(-1.0); }
                A.row_offsets.push_back(static_cast<std::int64_t>(A.col_indices.size()));
            }
        }
    }
    return A;
}

CsrMatrix gen_poisson_5pt(int nx, int ny) {
    const std::int64_t nnz = poisson_5pt_nnz(nx, ny);
    const std::int64_t n = static_cast<std::int64_t>(nx) * ny;

    CsrMatrix A;
    A.n_rows = n;
    A.row_offsets.reserve(n + 1);
    A.col_indices.reserve(nnz);
    A.values.reserve(nnz);
    A.row_offsets.push_back(0);

    for (int y = 0; y < ny; ++y) {
        for (int x = 0; x < nx; ++x) {
            const std::int64_t row = x + static_cast<std::int64_t>(nx) * y;
            if (y > 0) { A.col_indices.push_back(static_cast<std::int32_t>(row - nx)); A.values.push_back(-1.0); }
            if (x > 0) { A.col_indices.push_back(static_cast<std::int32_t>(row - 1)); A.values.push_back(-1.0); }
            A.col_indices.push_back(static_cast<std::int32_t>(row));
            A.values.push_back(4.0);
            if (x < nx - 1) { A.col_indices.push_back(static_cast<std::int32_t>(row + 1)); A.values.push_back(-1.0); }
            if (y < ny - 1) { A.col_indices.push_back(static_cast<std::int32_t>(row + nx)); A.values.push_back(-1.0); }
            A.row_offsets.push_back(static_cast<std::int64_t>(A.col_indices.size()));
        }
    }
    return A;
}

}  // namespace mbstab::core
