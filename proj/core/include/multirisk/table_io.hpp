#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multirisk/prob_table.hpp"

namespace multirisk {

// How a matrix is cut into groups: one group per row, one per column, or
// explicit 1-based flattened (row-major) cell index lists.
struct GroupSpec {
    enum class Kind { ByRows, ByCols, Explicit };
    Kind kind = Kind::ByCols;
    Grouping explicit_groups;  // 0-based after parsing
};

// Parses "rows", "cols" or "i1,i2;i3,i4;..." (1-based cell indices).
GroupSpec parse_group_spec(std::string_view text);

// A parsed table file: numeric matrix plus optional directives.
//   # comment
//   @groups rows|cols|1,2;3,4
//   @sums 0.126,0.317,...
struct TableFile {
    std::vector<std::vector<double>> matrix;
    std::optional<GroupSpec> groups;
    std::optional<std::vector<double>> known_sums;
};

TableFile read_table_file(std::istream& in);
TableFile read_table_file(const std::filesystem::path& path);

Grouping make_grouping(const GroupSpec& spec, std::size_t rows, std::size_t cols);

// Validates the parsed file into a ProbTable. An explicit spec overrides
// the file's @groups directive; without either, grouping is by column.
// A @sums line is checked for consistency with the table's group sums
// (estimation always uses the exact sums).
ProbTable to_prob_table(const TableFile& file, const std::optional<GroupSpec>& override_groups,
                        bool renormalize);

// Writes a matrix with a @groups directive at full precision, so that
// reading it back reproduces the table bit for bit.
void write_table_file(std::ostream& out, const std::vector<std::vector<double>>& matrix,
                      const GroupSpec& spec);

}  // namespace multirisk
