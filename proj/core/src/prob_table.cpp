#include "multirisk/prob_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace multirisk {

namespace {

constexpr double kStrictSumTol = 1e-9;
constexpr double kRenormSumTol = 1e-3;

}  // namespace

ProbTable ProbTable::validate(std::vector<double> cells, Grouping grouping,
                              bool renormalize) {
    if (cells.empty()) {
        throw ValidationError(Errc::NonPositiveCell, "table has no cells");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!std::isfinite(cells[i])) {
            throw ValidationError(Errc::NonPositiveCell,
                                  "cell " + std::to_string(i + 1) + " is not finite");
        }
        if (cells[i] <= 0.0) {
            throw ValidationError(Errc::NonPositiveCell,
                                  "cell " + std::to_string(i + 1) +
                                      " must be strictly positive, got " +
                                      std::to_string(cells[i]));
        }
    }

    std::vector<char> seen(cells.size(), 0);
    for (const auto& group : grouping) {
        if (group.empty()) {
            throw ValidationError(Errc::BadGrouping, "empty group in grouping");
        }
        for (std::size_t idx : group) {
            if (idx >= cells.size()) {
                throw ValidationError(Errc::BadGrouping,
                                      "group refers to cell " + std::to_string(idx + 1) +
                                          " but the table has only " +
                                          std::to_string(cells.size()) + " cells");
            }
            if (seen[idx]) {
                throw ValidationError(Errc::OverlappingGroups,
                                      "cell " + std::to_string(idx + 1) +
                                          " appears in more than one group");
            }
            seen[idx] = 1;
        }
    }
    // Cells absent from every restriction form one residual group.
    std::vector<std::size_t> residual;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!seen[i]) residual.push_back(i);
    }
    if (!residual.empty()) grouping.push_back(std::move(residual));

    double sum = 0.0;
    for (double c : cells) sum += c;
    const double dev = std::abs(sum - 1.0);
    if (renormalize) {
        if (dev > kRenormSumTol) {
            throw ValidationError(Errc::SumNotOne,
                                  "cells sum to " + std::to_string(sum) +
                                      "; too far from 1 even for renormalization");
        }
    } else if (dev > kStrictSumTol) {
        throw ValidationError(Errc::SumNotOne,
                              "cells sum to " + std::to_string(sum) +
                                  "; pass the renormalize flag for rounded tables");
    }
    // Rescale only when needed so that re-validating already normalized
    // cells is an exact round trip.
    if (dev > 1e-12) {
        for (double& c : cells) c /= sum;
    }

    ProbTable t;
    t.cells_ = std::move(cells);
    t.grouping_ = std::move(grouping);
    t.group_sums_.reserve(t.grouping_.size());
    for (const auto& group : t.grouping_) {
        double s = 0.0;
        for (std::size_t idx : group) s += t.cells_[idx];
        t.group_sums_.push_back(s);
    }
    return t;
}

double ProbTable::sum_inverse() const {
    double m = 0.0;
    for (double c : cells_) m += 1.0 / c;
    return m;
}

double ProbTable::group_sum_inverse() const {
    double m = 0.0;
    for (double s : group_sums_) m += 1.0 / s;
    return m;
}

std::vector<std::uint64_t> ProbTable::group_counts(const Counts& x) const {
    if (x.cells.size() != cells_.size()) {
        throw ValidationError(Errc::ShapeMismatch, "counts do not match table shape");
    }
    std::vector<std::uint64_t> out(grouping_.size(), 0);
    for (std::size_t i = 0; i < grouping_.size(); ++i) {
        for (std::size_t idx : grouping_[i]) out[i] += x.cells[idx];
    }
    return out;
}

}  // namespace multirisk
