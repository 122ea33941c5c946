#include "mbstab/kernels/statement.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mbstab::kernels {

int StatementGroup::dot_slots() const {
    int max_slot = -1;
    for (const auto& st : statements)
        if (const auto* dot = std::get_if<DotStatement>(&st))
            max_slot = std::max(max_slot, dot->slot);
    return max_slot + 1;
}

namespace {

void check_id(VectorId id) {
    if (id < 0) throw std::invalid_argument("statement group: dangling operand id");
}

}  // namespace

TrafficSummary analyze_traffic(const StatementGroup& group) {
    std::set<VectorId> produced;
    std::set<VectorId> reads;
    std::set<VectorId> writes;
    int coeff_cols = -1;

    auto consume = [&](VectorId id) {
        check_id(id);
        if (!produced.count(id)) reads.insert(id);
    };

    for (const auto& st : group.statements) {
        if (const auto* up = std::get_if<UpdateStatement>(&st)) {
            check_id(up->out);
            for (const auto& term : up->terms) {
                consume(term.vec);
                if (coeff_cols < 0) coeff_cols = term.coeff.cols();
                if (term.coeff.cols() != coeff_cols)
                    throw std::invalid_argument(
                        "statement group: inconsistent coefficient widths");
            }
            produced.insert(up->out);
            writes.insert(up->out);
        } else {
            const auto& dot = std::get<DotStatement>(st);
            if (dot.slot < 0) throw std::invalid_argument("statement group: negative dot slot");
            consume(dot.left);
            consume(dot.right);
        }
    }
    return {static_cast<int>(reads.size()), static_cast<int>(writes.size())};
}

std::vector<StatementGroup> split_basic(const StatementGroup& group, VectorId first_temp_id) {
    std::vector<StatementGroup> out;
    for (const auto& st : group.statements) {
        if (const auto* up = std::get_if<UpdateStatement>(&st)) {
            UpdateStatement current = *up;
            VectorId next_temp = first_temp_id;
            for (;;) {
                std::set<VectorId> involved{current.out};
                for (const auto& term : current.terms) involved.insert(term.vec);
                if (involved.size() < 4 || current.terms.size() < 2) break;

                // Peel the trailing operand pair into a temporary.
                const int m = current.terms.front().coeff.cols();
                UpdateStatement peeled;
                peeled.out = next_temp++;
                peeled.terms.assign(current.terms.end() - 2, current.terms.end());
                out.push_back({{Statement{peeled}}});

                current.terms.resize(current.terms.size() - 2);
                current.terms.push_back({core::ColumnScalars::constant(m, 1.0), peeled.out});
            }
            out.push_back({{Statement{current}}});
        } else {
            out.push_back({{st}});
        }
    }
    return out;
}

}  // namespace mbstab::kernels
