#include "mbstab/core/spmv.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mbstab::core {

double spmv_traffic_bytes(const CsrMatrix& A, int m) {
    // N*(8m(C+1) + 4(3C+1)) with C = nnz/N expands exactly to
    // 8m(N+nnz) + 4(N+3nnz), so the real-valued C never loses precision.
    const double n = static_cast<double>(A.n_rows);
    const double nnz = static_cast<double>(A.nnz());
    return 8.0 * m * (n + nnz) + 4.0 * (n + 3.0 * nnz);
}

namespace {

void check_shapes(const CsrMatrix& A, const MultiVector& x, const MultiVector& y) {
    if (x.n_rows != A.n_rows || y.n_rows != A.n_rows || x.n_cols != y.n_cols)
        throw std::invalid_argument("spmv: dimension mismatch");
    if (x.data.data() == y.data.data())
        throw std::invalid_argument("spmv: x and y must be distinct storage");
}

void spmv_rows(const CsrMatrix& A, const MultiVector& x, MultiVector& y,
               index_t row_begin, index_t row_end) {
    const int m = x.n_cols;
    if (m == 1) {
        for (index_t i = row_begin; i < row_end; ++i) {
            double acc = 0.0;
            for (std::int64_t k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k)
                acc += A.values[k] * x.data[A.col_indices[k]];
            y.data[i] = acc;
        }
        return;
    }
    std::vector<double> acc(m);
    for (index_t i = row_begin; i < row_end; ++i) {
        std::fill(acc.begin(), acc.end(), 0.0);
        for (std::int64_t k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k) {
            const double a = A.values[k];
            const double* xrow = &x.data[static_cast<std::size_t>(A.col_indices[k]) * m];
            for (int c = 0; c < m; ++c) acc[c] += a * xrow[c];
        }
        double* yrow = &y.data[static_cast<std::size_t>(i) * m];
        for (int c = 0; c < m; ++c) yrow[c] = acc[c];
    }
}

}  // namespace

void spmv(const CsrMatrix& A, const MultiVector& x, MultiVector& y,
          TrafficCounter* counter, int threads) {
    check_shapes(A, x, y);

    if (threads <= 1 || A.n_rows < 2 * threads) {
        spmv_rows(A, x, y, 0, A.n_rows);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        const index_t chunk = (A.n_rows + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const index_t begin = std::min<index_t>(t * chunk, A.n_rows);
            const index_t end = std::min<index_t>(begin + chunk, A.n_rows);
            if (begin == end) continue;
            pool.emplace_back([&, begin, end] { spmv_rows(A, x, y, begin, end); });
        }
        for (auto& th : pool) th.join();
    }

    if (counter) counter->spmv_bytes += spmv_traffic_bytes(A, x.n_cols);
}

void spmv_transpose(const CsrMatrix& A, const MultiVector& x, MultiVector& y,
                    TrafficCounter* counter) {
    check_shapes(A, x, y);
    const int m = x.n_cols;
    y.fill(0.0);
    for (index_t i = 0; i < A.n_rows; ++i) {
        const double* xrow = &x.data[static_cast<std::size_t>(i) * m];
        for (std::int64_t k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k) {
            const double a = A.values[k];
            double* yrow = &y.data[static_cast<std::size_t>(A.col_indices[k]) * m];
            for (int c = 0; c < m; ++c) yrow[c] += a * xrow[c];
        }
    }
    if (counter) counter->spmv_bytes += spmv_traffic_bytes(A, m);
}

}  // namespace mbstab::core
