#pragma once

#include <variant>
#include <vector>

#include "mbstab/core/types.hpp"

namespace mbstab::kernels {

/// Index of a vector in the executing context's storage.
using VectorId = int;

struct UpdateTerm {
    core::ColumnScalars coeff;  // one coefficient per column
    VectorId vec = -1;
};

/// out(i,c) = sum over terms of coeff[c] * vec(i,c). No terms = zero fill.
/// The output may also appear among the operands (in-place update).
struct UpdateStatement {
    VectorId out = -1;
    std::vector<UpdateTerm> terms;
};

/// slot c-th result accumulates sum_i left(i,c) * right(i,c).
/// left == right is permitted (squared norm).
struct DotStatement {
    VectorId left = -1;
    VectorId right = -1;
    int slot = -1;  // index into the group's dot-result array
};

using Statement = std::variant<UpdateStatement, DotStatement>;

/// An ordered list of statements executed in one conceptual pass over the row
/// index: a statement may consume a value produced by an earlier statement of
/// the same group at the same row (register reuse), and no statement touches
/// any row other than the current one.
struct StatementGroup {
    std::vector<Statement> statements;

    bool empty() const { return statements.empty(); }
    /// Number of dot-result slots (1 + max slot used, 0 if no dots).
    int dot_slots() const;
};

struct TrafficSummary {
    int reads = 0;
    int writes = 0;
    int total() const { return reads + writes; }
};

inline TrafficSummary& operator+=(TrafficSummary& a, const TrafficSummary& b) {
    a.reads += b.reads;
    a.writes += b.writes;
    return a;
}

/// Distinct-vector traffic of the group in whole-vector-transfer units:
/// reads = ids consumed from memory (ids produced earlier in the group are
/// reused from registers and not counted; an id that is both input and output
/// of its own update counts one read); writes = distinct output ids.
/// Throws std::invalid_argument on malformed groups (dangling ids,
/// inconsistent coefficient widths, bad dot slots).
TrafficSummary analyze_traffic(const StatementGroup& group);

/// Rewrites a merged group into its unfused form: every statement becomes a
/// singleton group, and any update whose statement involves four or more
/// distinct vectors (output plus operands) is split through an explicit
/// temporary holding the trailing operand pair, which costs one extra read
/// and write per split. Temporaries are numbered from first_temp_id and may
/// be reused by later splits.
std::vector<StatementGroup> split_basic(const StatementGroup& group, VectorId first_temp_id);

}  // namespace mbstab::kernels
