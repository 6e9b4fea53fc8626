#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "multirisk/prob_table.hpp"

namespace testsupport {

inline std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t k,
                                          double floor = 0.0) {
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> v(k);
    double sum = 0.0;
    for (double& x : v) {
        x = exp1(rng) + floor;
        sum += x;
    }
    for (double& x : v) x /= sum;
    return v;
}

inline multirisk::Grouping contiguous_grouping(const std::vector<std::size_t>& sizes) {
    multirisk::Grouping g;
    std::size_t next = 0;
    for (std::size_t s : sizes) {
        std::vector<std::size_t> group(s);
        for (std::size_t j = 0; j < s; ++j) group[j] = next++;
        g.push_back(std::move(group));
    }
    return g;
}

// Random grouped table with group count in [min_groups, max_groups] and
// group sizes in [min_cells, max_cells]. The floor keeps reciprocal cell
// probabilities from exploding in identity checks.
inline multirisk::ProbTable random_table(std::mt19937_64& rng, std::size_t min_groups,
                                         std::size_t max_groups, std::size_t min_cells,
                                         std::size_t max_cells) {
    std::uniform_int_distribution<std::size_t> gcount(min_groups, max_groups);
    std::uniform_int_distribution<std::size_t> gsize(min_cells, max_cells);
    std::vector<std::size_t> sizes(gcount(rng));
    std::size_t total = 0;
    for (std::size_t& s : sizes) {
        s = gsize(rng);
        total += s;
    }
    return multirisk::ProbTable::validate(random_simplex(rng, total, 0.05),
                                          contiguous_grouping(sizes));
}

}  // namespace testsupport
