#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multirisk/prob_table.hpp"

namespace multirisk {

// The three worked examples bundled with the CLI, each grouped by column
// (the known-column-sums prior).
struct BundledExample {
    int id;
    std::string name;
    std::vector<std::vector<double>> matrix;
    ProbTable table;
    std::vector<std::uint64_t> sample_sizes;  // the n values reported for it
};

// id 1: uniform 100x2 table (generated); id 2: breast cancer 3x5 table as
// exact case fractions over 285 individuals; id 3: household income/age
// 10x6 table of published relative frequencies (renormalized).
const BundledExample& bundled_example(int id);

}  // namespace multirisk
