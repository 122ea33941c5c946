#include "mbstab/kernels/execute.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mbstab::kernels {

namespace {

struct TermPlan {
    const double* coeff;  // m per-column coefficients
    const double* src;
};

struct StmtPlan {
    bool is_dot;
    // update:
    double* out = nullptr;
    int term_begin = 0;
    int term_count = 0;
    // dot:
    const double* left = nullptr;
    const double* right = nullptr;
    int slot = 0;
};

struct Plan {
    std::vector<StmtPlan> stmts;
    std::vector<TermPlan> terms;
    core::index_t n_rows = 0;
    int m = 0;
    int dot_count = 0;  // number of dot statements
    int dot_slots = 0;
};

Plan build_plan(const StatementGroup& group,
                std::span<core::MultiVector> vectors,
                std::span<core::ColumnScalars> dot_results) {
    Plan plan;
    auto vec = [&](VectorId id) -> core::MultiVector& {
        if (id < 0 || static_cast<std::size_t>(id) >= vectors.size())
            throw std::invalid_argument("execute_group: unbound vector id");
        return vectors[id];
    };

    bool shape_set = false;
    auto note_shape = [&](const core::MultiVector& v) {
        if (!shape_set) {
            plan.n_rows = v.n_rows;
            plan.m = v.n_cols;
            shape_set = true;
        } else if (v.n_rows != plan.n_rows || v.n_cols != plan.m) {
            throw std::invalid_argument("execute_group: shape mismatch");
        }
    };

    for (const auto& st : group.statements) {
        StmtPlan sp;
        if (const auto* up = std::get_if<UpdateStatement>(&st)) {
            auto& out = vec(up->out);
            note_shape(out);
            sp.is_dot = false;
            sp.out = out.data.data();
            sp.term_begin = static_cast<int>(plan.terms.size());
            sp.term_count = static_cast<int>(up->terms.size());
            for (const auto& term : up->terms) {
                auto& src = vec(term.vec);
                note_shape(src);
                if (term.coeff.cols() != plan.m)
                    throw std::invalid_argument("execute_group: coefficient width mismatch");
                plan.terms.push_back({term.coeff.values.data(), src.data.data()});
            }
        } else {
            const auto& dot = std::get<DotStatement>(st);
            auto& l = vec(dot.left);
            auto& r = vec(dot.right);
            note_shape(l);
            note_shape(r);
            if (dot.slot < 0 || static_cast<std::size_t>(dot.slot) >= dot_results.size())
                throw std::invalid_argument("execute_group: dot slot out of range");
            sp.is_dot = true;
            sp.left = l.data.data();
            sp.right = r.data.data();
            sp.slot = dot.slot;
            ++plan.dot_count;
        }
        plan.stmts.push_back(sp);
    }
    plan.dot_slots = group.dot_slots();
    return plan;
}

/// Runs all statements for rows [begin, end); dot partials land in
/// `partials` (dot_slots * m doubles).
void run_rows(const Plan& plan, core::index_t begin, core::index_t end,
              double* partials) {
    const int m = plan.m;
    for (core::index_t i = begin; i < end; ++i) {
        const std::size_t base = static_cast<std::size_t>(i) * m;
        for (const auto& sp : plan.stmts) {
            if (!sp.is_dot) {
                for (int c = 0; c < m; ++c) {
                    double acc = 0.0;
                    for (int t = 0; t < sp.term_count; ++t) {
                        const auto& term = plan.terms[sp.term_begin + t];
                        acc += term.coeff[c] * term.src[base + c];
                    }
                    sp.out[base + c] = acc;
                }
            } else {
                double* slot = partials + static_cast<std::size_t>(sp.slot) * m;
                for (int c = 0; c < m; ++c)
                    slot[c] += sp.left[base + c] * sp.right[base + c];
            }
        }
    }
}

}  // namespace

void execute_group(const StatementGroup& group,
                   std::span<core::MultiVector> vectors,
                   std::span<core::ColumnScalars> dot_results,
                   core::TrafficCounter* counter,
                   const ExecOptions& opts) {
    const TrafficSummary traffic = analyze_traffic(group);
    if (group.empty()) return;

    Plan plan = build_plan(group, vectors, dot_results);
    const int m = plan.m;
    const int slots = plan.dot_slots;

    std::vector<double> partials(static_cast<std::size_t>(slots) * m, 0.0);

    const int threads = std::max(1, opts.threads);
    if (threads == 1 || plan.n_rows < 2 * threads) {
        run_rows(plan, 0, plan.n_rows, partials.data());
    } else {
        // Fixed contiguous row blocks combined in block order keep the dot
        // sums deterministic for a given thread count.
        const core::index_t chunk = (plan.n_rows + threads - 1) / threads;
        std::vector<std::vector<double>> block(threads);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            block[t].assign(partials.size(), 0.0);
            const core::index_t begin = std::min<core::index_t>(t * chunk, plan.n_rows);
            const core::index_t end = std::min<core::index_t>(begin + chunk, plan.n_rows);
            if (begin == end) continue;
            pool.emplace_back(
                [&plan, begin, end, buf = block[t].data()] { run_rows(plan, begin, end, buf); });
        }
        for (auto& th : pool) th.join();
        for (int t = 0; t < threads; ++t)
            for (std::size_t k = 0; k < partials.size(); ++k) partials[k] += block[t][k];
    }

    for (const auto& st : group.statements) {
        if (const auto* dot = std::get_if<DotStatement>(&st)) {
            auto& dest = dot_results[dot->slot];
            dest.values.assign(partials.begin() + static_cast<std::size_t>(dot->slot) * m,
                               partials.begin() + static_cast<std::size_t>(dot->slot + 1) * m);
        }
    }

    if (counter) {
        counter->vector_reads += traffic.reads;
        counter->vector_writes += traffic.writes;
        if (plan.dot_count > 0) counter->reductions.push_back({plan.dot_count, m});
    }
}

}  // namespace mbstab::kernels
