#include "multirisk/table_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace multirisk {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, std::string_view seps) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || seps.find(s[i]) != std::string_view::npos) {
            if (i > start) out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

double parse_number(std::string_view token, int line, std::size_t column) {
    double value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line) + ", field " +
                         std::to_string(column) + ": '" + std::string(token) +
                         "' is not a number");
    }
    return value;
}

std::size_t parse_index(std::string_view token, int line) {
    std::size_t value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0) {
        throw ParseError("line " + std::to_string(line) + ": '" + std::string(token) +
                         "' is not a 1-based cell index");
    }
    return value - 1;
}

GroupSpec parse_group_spec_impl(std::string_view text, int line) {
    const std::string_view t = trim(text);
    GroupSpec spec;
    if (t == "rows") {
        spec.kind = GroupSpec::Kind::ByRows;
        return spec;
    }
    if (t == "cols" || t == "columns") {
        spec.kind = GroupSpec::Kind::ByCols;
        return spec;
    }
    spec.kind = GroupSpec::Kind::Explicit;
    for (std::string_view part : split(t, ";")) {
        std::vector<std::size_t> group;
        for (std::string_view tok : split(part, ", \t")) {
            group.push_back(parse_index(tok, line));
        }
        if (group.empty()) {
            throw ParseError("line " + std::to_string(line) + ": empty group in '" +
                             std::string(t) + "'");
        }
        spec.explicit_groups.push_back(std::move(group));
    }
    if (spec.explicit_groups.empty()) {
        throw ParseError("line " + std::to_string(line) + ": empty group specification");
    }
    return spec;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return parse_group_spec_impl(text, 0); }

TableFile read_table_file(std::istream& in) {
    TableFile file;
    std::string raw;
    int line_no = 0;
    std::size_t width = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '@') {
            const auto space = line.find_first_of(" \t");
            const std::string_view name = line.substr(0, space);
            const std::string_view value =
                space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
            if (name == "@groups") {
                file.groups = parse_group_spec_impl(value, line_no);
            } else if (name == "@sums") {
                std::vector<double> sums;
                std::size_t field = 0;
                for (std::string_view tok : split(value, ", \t")) {
                    sums.push_back(parse_number(tok, line_no, ++field));
                }
                if (sums.empty()) {
                    throw ParseError("line " + std::to_string(line_no) + ": @sums is empty");
                }
                file.known_sums = std::move(sums);
            } else {
                throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" +
                                 std::string(name) + "'");
            }
            continue;
        }

        std::vector<double> row;
        std::size_t field = 0;
        for (std::string_view tok : split(line, ", \t")) {
            row.push_back(parse_number(tok, line_no, ++field));
        }
        if (width == 0) {
            width = row.size();
        } else if (row.size() != width) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(width) + " fields, got " +
                             std::to_string(row.size()));
        }
        file.matrix.push_back(std::move(row));
    }
    if (file.matrix.empty()) {
        throw ParseError("table file contains no numeric rows");
    }
    return file;
}

TableFile read_table_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open table file: " + path.string());
    }
    return read_table_file(in);
}

Grouping make_grouping(const GroupSpec& spec, std::size_t rows, std::size_t cols) {
    Grouping grouping;
    switch (spec.kind) {
        case GroupSpec::Kind::ByRows:
            for (std::size_t r = 0; r < rows; ++r) {
                std::vector<std::size_t> g;
                for (std::size_t c = 0; c < cols; ++c) g.push_back(r * cols + c);
                grouping.push_back(std::move(g));
            }
            break;
        case GroupSpec::Kind::ByCols:
            for (std::size_t c = 0; c < cols; ++c) {
                std::vector<std::size_t> g;
                for (std::size_t r = 0; r < rows; ++r) g.push_back(r * cols + c);
                grouping.push_back(std::move(g));
            }
            break;
        case GroupSpec::Kind::Explicit:
            grouping = spec.explicit_groups;
            break;
    }
    return grouping;
}

ProbTable to_prob_table(const TableFile& file, const std::optional<GroupSpec>& override_groups,
                        bool renormalize) {
    const std::size_t rows = file.matrix.size();
    const std::size_t cols = file.matrix.front().size();
    std::vector<double> cells;
    cells.reserve(rows * cols);
    for (const auto& row : file.matrix) {
        cells.insert(cells.end(), row.begin(), row.end());
    }

    GroupSpec spec;  // defaults to by-column, the common contingency-table prior
    if (override_groups) {
        spec = *override_groups;
    } else if (file.groups) {
        spec = *file.groups;
    }
    ProbTable table = ProbTable::validate(std::move(cells), make_grouping(spec, rows, cols),
                                          renormalize);

    if (file.known_sums) {
        const auto& sums = *file.known_sums;
        if (sums.size() != table.group_count()) {
            throw ValidationError(Errc::InconsistentKnownSums,
                                  "@sums lists " + std::to_string(sums.size()) +
                                      " values for " + std::to_string(table.group_count()) +
                                      " groups");
        }
        for (std::size_t i = 0; i < sums.size(); ++i) {
            // Published sums are rounded; allow rounding-level slack.
            if (std::abs(sums[i] - table.group_sum(i)) > 5e-3) {
                throw ValidationError(Errc::InconsistentKnownSums,
                                      "@sums entry " + std::to_string(i + 1) +
                                          " disagrees with the table's group sum");
            }
        }
    }
    return table;
}

void write_table_file(std::ostream& out, const std::vector<std::vector<double>>& matrix,
                      const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::ByRows:
            out << "@groups rows\n";
            break;
        case GroupSpec::Kind::ByCols:
            out << "@groups cols\n";
            break;
        case GroupSpec::Kind::Explicit: {
            out << "@groups ";
            for (std::size_t i = 0; i < spec.explicit_groups.size(); ++i) {
                if (i) out << ';';
                for (std::size_t j = 0; j < spec.explicit_groups[i].size(); ++j) {
                    if (j) out << ',';
                    out << spec.explicit_groups[i][j] + 1;
                }
            }
            out << '\n';
            break;
        }
    }
    char buf[64];
    for (const auto& row : matrix) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", row[c]);
            if (c) out << ' ';
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace multirisk
