#include "multirisk/divergence.hpp"

#include <cmath>
#include <string>

namespace multirisk {

namespace {

inline double xlog_ratio(double q, double m) {
    return q > 0.0 ? q * std::log(q / m) : 0.0;
}

}  // namespace

double kl_divergence(const CellEstimate& q, const ProbTable& m) {
    if (q.size() != m.cell_count()) {
        throw ValidationError(Errc::ShapeMismatch,
                              "estimate has " + std::to_string(q.size()) +
                                  " cells, table has " + std::to_string(m.cell_count()));
    }
    double d = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        d += xlog_ratio(q.cells[i], m.cell(i));
    }
    return d;
}

ChainDecomposition chain_decompose(const CellEstimate& q, const ProbTable& m) {
    if (q.size() != m.cell_count()) {
        throw ValidationError(Errc::ShapeMismatch,
                              "estimate has " + std::to_string(q.size()) +
                                  " cells, table has " + std::to_string(m.cell_count()));
    }
    const auto& grouping = m.grouping();
    ChainDecomposition out;
    out.first_stage = 0.0;
    out.per_group.assign(grouping.size(), 0.0);

    for (std::size_t i = 0; i < grouping.size(); ++i) {
        double qi = 0.0;
        for (std::size_t idx : grouping[i]) qi += q.cells[idx];
        if (qi <= 0.0) {
            throw ValidationError(Errc::ZeroGroupMass,
                                  "estimate puts no mass on group " + std::to_string(i + 1) +
                                      "; conditional distribution undefined");
        }
        out.first_stage += xlog_ratio(qi, m.group_sum(i));
        double d = 0.0;
        for (std::size_t idx : grouping[i]) {
            d += xlog_ratio(q.cells[idx] / qi, m.cell(idx) / m.group_sum(i));
        }
        out.per_group[i] = qi * d;
    }

    out.total = out.first_stage;
    for (double d : out.per_group) out.total += d;
    return out;
}

}  // namespace multirisk
