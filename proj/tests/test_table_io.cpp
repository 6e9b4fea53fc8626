#include <doctest.h>

#include <random>
#include <sstream>

#include "multirisk/table_io.hpp"
#include "test_support.hpp"

using namespace multirisk;

TEST_CASE("comments, blank lines and directives") {
    std::istringstream in(
        "# a 2x2 table\n"
        "\n"
        "@groups cols\n"
        "0.25 0.25   # trailing comment\n"
        "0.25\t0.25\n");
    const TableFile file = read_table_file(in);
    REQUIRE(file.matrix.size() == 2);
    CHECK(file.matrix[0] == std::vector<double>{0.25, 0.25});
    REQUIRE(file.groups.has_value());
    CHECK(file.groups->kind == GroupSpec::Kind::ByCols);
    CHECK_FALSE(file.known_sums.has_value());

    const ProbTable t = to_prob_table(file, std::nullopt, false);
    CHECK(t.group_count() == 2);
    CHECK(t.grouping()[0] == std::vector<std::size_t>{0, 2});
}

TEST_CASE("group specs parse in all three forms") {
    CHECK(parse_group_spec("rows").kind == GroupSpec::Kind::ByRows);
    CHECK(parse_group_spec("cols").kind == GroupSpec::Kind::ByCols);
    const GroupSpec g = parse_group_spec("1,2;3,4");
    REQUIRE(g.kind == GroupSpec::Kind::Explicit);
    CHECK(g.explicit_groups == Grouping{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(parse_group_spec("1,0;3"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("1,x"), ParseError);
}

TEST_CASE("by-row grouping and explicit override") {
    std::istringstream in(
        "@groups rows\n"
        "0.1 0.2\n"
        "0.3 0.4\n");
    const TableFile file = read_table_file(in);
    const ProbTable by_rows = to_prob_table(file, std::nullopt, false);
    CHECK(by_rows.grouping() == Grouping{{0, 1}, {2, 3}});

    const ProbTable overridden = to_prob_table(file, parse_group_spec("1,4;2,3"), false);
    CHECK(overridden.grouping() == Grouping{{0, 3}, {1, 2}});
}

TEST_CASE("default grouping is by column") {
    std::istringstream in("0.1 0.2\n0.3 0.4\n");
    const ProbTable t = to_prob_table(read_table_file(in), std::nullopt, false);
    CHECK(t.grouping() == Grouping{{0, 2}, {1, 3}});
}

TEST_CASE("consistent @sums pass, inconsistent ones fail") {
    std::istringstream ok(
        "@sums 0.4 0.6\n"
        "0.1 0.2\n"
        "0.3 0.4\n");
    CHECK(to_prob_table(read_table_file(ok), std::nullopt, false).group_count() == 2);

    std::istringstream bad_value(
        "@sums 0.5 0.5\n"
        "0.1 0.2\n"
        "0.3 0.4\n");
    try {
        to_prob_table(read_table_file(bad_value), std::nullopt, false);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.code() == Errc::InconsistentKnownSums);
    }

    std::istringstream bad_count(
        "@sums 0.4 0.3 0.3\n"
        "0.1 0.2\n"
        "0.3 0.4\n");
    CHECK_THROWS_AS(to_prob_table(read_table_file(bad_count), std::nullopt, false),
                    ValidationError);
}

TEST_CASE("parse errors carry the line and field position") {
    std::istringstream bad_number("0.1 0.2\n0.3 oops\n");
    CHECK_THROWS_WITH_AS(read_table_file(bad_number), doctest::Contains("line 2, field 2"),
                         ParseError);

    std::istringstream ragged("0.1 0.2\n0.3 0.3 0.1\n");
    CHECK_THROWS_WITH_AS(read_table_file(ragged), doctest::Contains("line 2"), ParseError);

    std::istringstream unknown("@sigma 1\n0.5 0.5\n");
    CHECK_THROWS_WITH_AS(read_table_file(unknown), doctest::Contains("@sigma"), ParseError);

    std::istringstream empty("# only a comment\n");
    CHECK_THROWS_AS(read_table_file(empty), ParseError);
}

TEST_CASE("write then read reproduces the matrix bit for bit") {
    std::mt19937_64 rng(8080);
    for (int trial = 0; trial < 50; ++trial) {
        const ProbTable m = testsupport::random_table(rng, 2, 5, 2, 5);
        // Lay the cells out as a single row; grouping survives explicitly.
        std::vector<std::vector<double>> matrix = {m.cells()};
        GroupSpec spec;
        spec.kind = GroupSpec::Kind::Explicit;
        spec.explicit_groups = m.grouping();

        std::stringstream buffer;
        write_table_file(buffer, matrix, spec);
        const TableFile back = read_table_file(buffer);
        CHECK(back.matrix == matrix);
        const ProbTable t = to_prob_table(back, std::nullopt, false);
        CHECK(t.cells() == m.cells());
        CHECK(t.grouping() == m.grouping());
    }
}
