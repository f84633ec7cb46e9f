#include <doctest.h>

#include <stdexcept>

#include "tss/csv.hpp"
#include "tss/grid.hpp"

using namespace tss;

TEST_CASE("timestamp parse and format round-trip") {
    const char* samples[] = {"2017-06-14T08:00:00Z", "2017-06-16T16:00:00Z",
                             "2020-02-29T10:30:45Z"};
    for (const char* s : samples) {
        CHECK(format_timestamp(parse_timestamp(s)) == s);
    }
    CHECK(parse_timestamp("2017-06-14 08:00:00").seconds_since_epoch ==
          parse_timestamp("2017-06-14T08:00:00Z").seconds_since_epoch);
    CHECK_THROWS_AS(parse_timestamp("not a date"), std::invalid_argument);
    CHECK_THROWS_AS(parse_timestamp("2017-13-01T00:00:00Z"), std::invalid_argument);
    CHECK_THROWS_AS(parse_timestamp("2017-02-30T00:00:00Z"), std::invalid_argument);
}

TEST_CASE("grid maps slot starts and floors interior timestamps") {
    SampleGrid grid = SampleGrid::default_grid();  // Wed 2017-06-14, 08:00, 5x2h

    CHECK(grid.slot_index(parse_timestamp("2017-06-14T08:00:00Z")) == 0);
    CHECK(grid.slot_index(parse_timestamp("2017-06-14T16:00:00Z")) == 4);
    CHECK(grid.slot_index(parse_timestamp("2017-06-15T08:00:00Z")) == 5);
    // 9:37 floors to the 8:00 slot
    CHECK(grid.slot_index(parse_timestamp("2017-06-14T09:37:00Z")) == 0);
    // Friday 16th is day 2; Monday 19th is day 3 (weekend skipped)
    CHECK(grid.slot_index(parse_timestamp("2017-06-16T10:00:00Z")) == 11);
    CHECK(grid.slot_index(parse_timestamp("2017-06-19T08:00:00Z")) == 15);

    for (std::int64_t idx : {0, 1, 4, 5, 11, 15, 23, 101}) {
        CHECK(grid.slot_index(grid.slot_start(idx)) == idx);
    }
    CHECK(format_timestamp(grid.slot_start(15)) == "2017-06-19T08:00:00Z");
}

TEST_CASE("grid rejects weekends, pre-start and out-of-window timestamps") {
    SampleGrid grid = SampleGrid::default_grid();
    CHECK_THROWS_AS(grid.slot_index(parse_timestamp("2017-06-17T10:00:00Z")),
                    std::invalid_argument);  // Saturday
    CHECK_THROWS_AS(grid.slot_index(parse_timestamp("2017-06-13T10:00:00Z")),
                    std::invalid_argument);  // before start
    CHECK_THROWS_AS(grid.slot_index(parse_timestamp("2017-06-14T07:59:59Z")),
                    std::invalid_argument);  // before the open
    CHECK_THROWS_AS(grid.slot_index(parse_timestamp("2017-06-14T18:00:00Z")),
                    std::invalid_argument);  // after the last slot's window

    SampleGrid weekend_start = grid;
    weekend_start.start = parse_timestamp("2017-06-17T08:00:00Z");
    CHECK_THROWS_AS(weekend_start.validate(), std::invalid_argument);
}

TEST_CASE("grid with weekends included counts calendar days") {
    SampleGrid grid = SampleGrid::default_grid();
    grid.skip_weekends = false;
    CHECK(grid.slot_index(parse_timestamp("2017-06-17T08:00:00Z")) == 15);  // Saturday
    CHECK(format_timestamp(grid.slot_start(15)) == "2017-06-17T08:00:00Z");
}

TEST_CASE("csv parser handles quoting, embedded commas and newlines") {
    auto rows = parse_csv("a,b\n\"x,y\",\"line1\nline2\"\nplain,\"he said \"\"hi\"\"\"\n");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].fields == std::vector<std::string>{"a", "b"});
    CHECK(rows[1].fields == std::vector<std::string>{"x,y", "line1\nline2"});
    CHECK(rows[1].line_no == 2);
    CHECK(rows[2].fields == std::vector<std::string>{"plain", "he said \"hi\""});
    CHECK(rows[2].line_no == 4);  // quoted newline advanced the physical line count
}

TEST_CASE("csv parser reports malformed input with line numbers") {
    CHECK_THROWS_WITH_AS(parse_csv("a,b\n\"unterminated\n"),
                         doctest::Contains("line 2"), std::runtime_error);
    CHECK_THROWS_AS(parse_csv("\"x\"junk,b\n"), std::runtime_error);
}

TEST_CASE("csv escape round-trips through the parser") {
    const std::string nasty = "comma, \"quote\" and\nnewline";
    auto rows = parse_csv(csv_escape(nasty) + "," + csv_escape("plain") + "\n");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].fields[0] == nasty);
    CHECK(rows[0].fields[1] == "plain");
}

TEST_CASE("double formatting is shortest round-trip") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-0.25) == "-0.25");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(7400.0) == "7400");
    for (double v : {0.1, 1.0 / 3.0, 123456.789, -2.5e-7}) {
        CHECK(parse_double_field(format_double(v), 1, "v") == v);
    }
}

TEST_CASE("field parsers flag junk with the line number") {
    CHECK_THROWS_WITH_AS(parse_double_field("12x", 7, "close"), doctest::Contains("line 7"),
                         std::runtime_error);
    CHECK_THROWS_AS(parse_int_field("3.5", 2, "sample_index"), std::runtime_error);
    CHECK_THROWS_AS(parse_double_field("", 3, "close"), std::runtime_error);
}
