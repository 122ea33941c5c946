#pragma once

#include <span>

#include "mbstab/core/types.hpp"
#include "mbstab/kernels/statement.hpp"

namespace mbstab::kernels {

struct ExecOptions {
    int threads = 1;
};

/// Executes the group in a single pass over the row index. Vector ids index
/// into `vectors`; dot slots index into `dot_results`, whose used entries are
/// reset before accumulation. Semantics are identical to executing the
/// statements one at a time with full-vector temporaries.
///
/// If a counter is given, vector_reads/vector_writes grow by
/// analyze_traffic(group) and one ReductionEvent is recorded when the group
/// contains dot products.
///
/// Dot accumulation over rows is blocked by thread with a fixed schedule, so
/// results are deterministic for a fixed thread count.
/// Throws std::invalid_argument on unbound ids or shape mismatches.
void execute_group(const StatementGroup& group,
                   std::span<core::MultiVector> vectors,
                   std::span<core::ColumnScalars> dot_results,
                   core::TrafficCounter* counter = nullptr,
                   const ExecOptions& opts = {});

}  // namespace mbstab::kernels
