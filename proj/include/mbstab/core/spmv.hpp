#pragma once

#include "mbstab/core/csr.hpp"
#include "mbstab/core/types.hpp"

namespace mbstab::core {

/// Bytes moved by one sparse matrix-multivector product with m columns:
///   N * (8m(C+1) + 4(3C+1)),  C = nnz/N real-valued,
/// i.e. 8 bytes per value/vector element and 4 bytes per index.
double spmv_traffic_bytes(const CsrMatrix& A, int m);

/// y(i,c) = sum_k A(i,k) * x(k,c). x and y must be distinct storage.
/// If counter is given, its spmv_bytes grows by spmv_traffic_bytes(A, m).
/// Row-parallel when threads > 1; deterministic for fixed input.
void spmv(const CsrMatrix& A, const MultiVector& x, MultiVector& y,
          TrafficCounter* counter = nullptr, int threads = 1);

/// y = A^T x, same traffic formula (setup-only operation, executed serially).
void spmv_transpose(const CsrMatrix& A, const MultiVector& x, MultiVector& y,
                    TrafficCounter* counter = nullptr);

}  // namespace mbstab::core
