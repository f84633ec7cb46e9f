#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tss {

struct CsvRow {
    std::vector<std::string> fields;
    std::size_t line_no = 0;  // physical line the row starts on, 1-based
};

// RFC-4180: fields containing commas, quotes or newlines are quoted, quotes
// are doubled. Parsing keeps bytes verbatim inside quoted fields so written
// files read back exactly. Throws std::runtime_error with a line number on
// malformed input (unterminated quote, junk after a closing quote).
std::vector<CsvRow> parse_csv(const std::string& text);
std::vector<CsvRow> read_csv_file(const std::string& path);

std::string csv_escape(const std::string& field);

// Shortest round-trip formatting (std::to_chars); deterministic across runs.
std::string format_double(double v);

double parse_double_field(const std::string& field, std::size_t line_no, const std::string& what);
std::int64_t parse_int_field(const std::string& field, std::size_t line_no,
                             const std::string& what);

// Throws when the first row is missing or differs from the expected header.
void require_header(const std::vector<CsvRow>& rows, const std::vector<std::string>& expected,
                    const std::string& path);

std::string read_file(const std::string& path);

// Writes to a temp file in the target directory, then renames into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace tss
