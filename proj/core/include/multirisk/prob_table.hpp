#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "multirisk/errors.hpp"

namespace multirisk {

// Partition of flattened cell indices. Cells not listed in any group are
// collected into one implicit residual group during validation.
using Grouping = std::vector<std::vector<std::size_t>>;

// Plug-in probability vector, same shape as the table it estimates.
// Zero entries are allowed (an estimate may put no mass on unseen cells).
struct CellEstimate {
    std::vector<double> cells;

    std::size_t size() const noexcept { return cells.size(); }
};

// Observed cell counts of one multinomial sample.
struct Counts {
    std::vector<std::uint64_t> cells;

    std::uint64_t total() const noexcept {
        std::uint64_t n = 0;
        for (auto x : cells) n += x;
        return n;
    }
};

// A strictly positive probability table whose cells are partitioned into
// disjoint groups. Group sums and within-group conditionals are
// precomputed at construction.
class ProbTable {
public:
    ProbTable() = default;

    // Checks positivity, unit sum and that `grouping` partitions the cell
    // indices. With `renormalize` set, tables whose entries were rounded
    // (|sum - 1| <= 1e-3) are rescaled to sum to one.
    static ProbTable validate(std::vector<double> cells, Grouping grouping,
                              bool renormalize = false);

    std::size_t cell_count() const noexcept { return cells_.size(); }
    std::size_t group_count() const noexcept { return grouping_.size(); }
    std::size_t group_size(std::size_t i) const { return grouping_[i].size(); }

    double cell(std::size_t idx) const { return cells_[idx]; }
    const std::vector<double>& cells() const noexcept { return cells_; }
    const Grouping& grouping() const noexcept { return grouping_; }

    // m_i. and p_ij of the two-stage factorization.
    double group_sum(std::size_t i) const { return group_sums_[i]; }
    const std::vector<double>& group_sums() const noexcept { return group_sums_; }
    double conditional(std::size_t i, std::size_t j) const {
        return cells_[grouping_[i][j]] / group_sums_[i];
    }

    // Sum of reciprocal cell probabilities and of reciprocal group sums.
    double sum_inverse() const;
    double group_sum_inverse() const;

    // Per-group counts x_i. derived from flat cell counts.
    std::vector<std::uint64_t> group_counts(const Counts& x) const;

private:
    std::vector<double> cells_;
    Grouping grouping_;
    std::vector<double> group_sums_;
};

}  // namespace multirisk
