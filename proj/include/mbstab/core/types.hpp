#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace mbstab::core {

using index_t = std::int64_t;

/// Dense block of m column vectors stored row-interleaved: element (i, c)
/// lives at data[i*n_cols + c], so all m values of mesh row i are contiguous.
struct MultiVector {
    index_t n_rows = 0;
    int n_cols = 0;
    std::vector<double> data;

    MultiVector() = default;
    MultiVector(index_t rows, int cols)
        : n_rows(rows), n_cols(cols),
          data(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0) {}

    double& operator()(index_t i, int c) {
        return data[static_cast<std::size_t>(i) * n_cols + c];
    }
    double operator()(index_t i, int c) const {
        return data[static_cast<std::size_t>(i) * n_cols + c];
    }

    bool same_shape(const MultiVector& other) const {
        return n_rows == other.n_rows && n_cols == other.n_cols;
    }

    void fill(double value) { data.assign(data.size(), value); }
};

/// One scalar per column of the enclosing solve (per-column alpha, beta,
/// omega, ... of the recurrences). All arithmetic is elementwise.
struct ColumnScalars {
    std::vector<double> values;

    ColumnScalars() = default;
    explicit ColumnScalars(int cols, double value = 0.0) : values(cols, value) {}

    static ColumnScalars constant(int cols, double value) { return ColumnScalars(cols, value); }

    int cols() const { return static_cast<int>(values.size()); }
    double& operator[](int c) { return values[c]; }
    double operator[](int c) const { return values[c]; }
};

inline ColumnScalars operator+(const ColumnScalars& a, const ColumnScalars& b) {
    assert(a.cols() == b.cols());
    ColumnScalars out(a.cols());
    for (int c = 0; c < a.cols(); ++c) out[c] = a[c] + b[c];
    return out;
}

inline ColumnScalars operator-(const ColumnScalars& a, const ColumnScalars& b) {
    assert(a.cols() == b.cols());
    ColumnScalars out(a.cols());
    for (int c = 0; c < a.cols(); ++c) out[c] = a[c] - b[c];
    return out;
}

inline ColumnScalars operator*(const ColumnScalars& a, const ColumnScalars& b) {
    assert(a.cols() == b.cols());
    ColumnScalars out(a.cols());
    for (int c = 0; c < a.cols(); ++c) out[c] = a[c] * b[c];
    return out;
}

inline ColumnScalars operator-(const ColumnScalars& a) {
    ColumnScalars out(a.cols());
    for (int c = 0; c < a.cols(); ++c) out[c] = -a[c];
    return out;
}

inline ColumnScalars operator*(double s, const ColumnScalars& a) {
    ColumnScalars out(a.cols());
    for (int c = 0; c < a.cols(); ++c) out[c] = s * a[c];
    return out;
}

/// One fused-reduction message: k dot products computed at once over m
/// columns, i.e. a message of 8*m*k bytes.
struct ReductionEvent {
    int dots = 0;
    int cols = 0;
};

/// Per-solve tally of data movement. Vector reads/writes are counted in
/// whole-vector-transfer units (one transfer = 8*N*m bytes); SpMV traffic is
/// counted in bytes directly.
struct TrafficCounter {
    std::int64_t vector_reads = 0;
    std::int64_t vector_writes = 0;
    double spmv_bytes = 0.0;
    std::vector<ReductionEvent> reductions;
    std::int64_t precond_applications = 0;

    std::int64_t vector_transfers() const { return vector_reads + vector_writes; }

    double reduction_bytes() const {
        double total = 0.0;
        for (const auto& r : reductions) total += 8.0 * r.cols * r.dots;
        return total;
    }
};

}  // namespace mbstab::core
