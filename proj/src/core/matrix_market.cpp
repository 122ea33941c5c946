#include "mbstab/core/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace mbstab::core {

namespace {

[[noreturn]] void fail(const std::string& name, long line, const std::string& msg) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

struct Triplet {
    std::int64_t row, col;
    double value;
};

}  // namespace

CsrMatrix read_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    return read_matrix_market(in, path);
}

CsrMatrix read_matrix_market(std::istream& in, const std::string& name) {
    long line_no = 1;
    std::string line;
    if (!std::getline(in, line)) fail(name, line_no, "empty file");

    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket") fail(name, line_no, "missing %%MatrixMarket banner");
    if (lower(object) != "matrix") fail(name, line_no, "object must be 'matrix'");
    if (lower(format) != "coordinate") fail(name, line_no, "only coordinate format supported");
    field = lower(field);
    if (field != "real" && field != "integer")
        fail(name, line_no, "field must be 'real' or 'integer'");
    symmetry = lower(symmetry);
    const bool symmetric = symmetry == "symmetric";
    if (!symmetric && symmetry != "general")
        fail(name, line_no, "symmetry must be 'general' or 'symmetric'");

    // Skip comments and blank lines up to the size line.
    std::int64_t n_rows = 0, n_cols = 0, n_entries = 0;
    for (;;) {
        if (!std::getline(in, line)) fail(name, line_no, "missing size line");
        ++line_no;
        if (line.empty() || line[0] == '%') continue;
        std::istringstream sizes(line);
        if (!(sizes >> n_rows >> n_cols >> n_entries))
            fail(name, line_no, "malformed size line");
        break;
    }
    if (n_rows != n_cols) fail(name, line_no, "matrix must be square");
    if (n_rows < 1) fail(name, line_no, "matrix must have at least one row");

    std::vector<Triplet> entries;
    entries.reserve(symmetric ? 2 * n_entries : n_entries);
    for (std::int64_t seen = 0; seen < n_entries;) {
        if (!std::getline(in, line)) fail(name, line_no, "unexpected end of file");
        ++line_no;
        if (line.empty() || line[0] == '%') continue;
        std::istringstream entry(line);
        std::int64_t i = 0, j = 0;
        double v = 0.0;
        if (!(entry >> i >> j >> v)) fail(name, line_no, "malformed entry");
        if (i < 1 || i > n_rows || j < 1 || j > n_cols)
            fail(name, line_no, "entry index out of range");
        entries.push_back({i - 1, j - 1, v});
        if (symmetric && i != j) entries.push_back({j - 1, i - 1, v});
        ++seen;
    }

    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });

    CsrMatrix A;
    A.n_rows = n_rows;
    A.row_offsets.assign(n_rows + 1, 0);
    A.col_indices.reserve(entries.size());
    A.values.reserve(entries.size());

    for (std::size_t k = 0; k < entries.size();) {
        const std::int64_t row = entries[k].row;
        const std::int64_t col = entries[k].col;
        double sum = 0.0;
        while (k < entries.size() && entries[k].row == row && entries[k].col == col)
            sum += entries[k++].value;  // duplicates summed
        A.col_indices.push_back(static_cast<std::int32_t>(col));
        A.values.push_back(sum);
        A.row_offsets[row + 1] = static_cast<std::int64_t>(A.col_indices.size());
    }
    for (std::int64_t i = 1; i <= n_rows; ++i)
        A.row_offsets[i] = std::max(A.row_offsets[i], A.row_offsets[i - 1]);

    A.validate();
    return A;
}

void write_matrix_market(const CsrMatrix& A, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    write_matrix_market(A, out);
}

void write_matrix_market(const CsrMatrix& A, std::ostream& out) {
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << A.n_rows << " " << A.n_rows << " " << A.nnz() << "\n";
    char buf[64];
    for (index_t i = 0; i < A.n_rows; ++i) {
        for (std::int64_t k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k) {
            std::snprintf(buf, sizeof(buf), "%.17g", A.values[k]);
            out << (i + 1) << " " << (A.col_indices[k] + 1) << " " << buf << "\n";
        }
    }
}

}  // namespace mbstab::core
