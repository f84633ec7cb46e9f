#include "tss/csv.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tss {

std::vector<CsvRow> parse_csv(const std::string& text) {
    std::vector<CsvRow> rows;
    std::size_t line = 1;
    std::size_t i = 0;
    const std::size_t n = text.size();

    while (i < n) {
        CsvRow row;
        row.line_no = line;
        std::string field;
        bool row_done = false;
        while (!row_done) {
            field.clear();
            if (i < n && text[i] == '"') {
                ++i;  // opening quote
                bool closed = false;
                while (i < n) {
                    char c = text[i];
                    if (c == '"') {
                        if (i + 1 < n && text[i + 1] == '"') {
                            field += '"';
                            i += 2;
                        } else {
                            ++i;
                            closed = true;
                            break;
                        }
                    } else {
                        if (c == '\n') ++line;
                        field += c;
                        ++i;
                    }
                }
                if (!closed) {
                    throw std::runtime_error("line " + std::to_string(row.line_no) +
                                             ": unterminated quoted field");
                }
                if (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
                    throw std::runtime_error("line " + std::to_string(line) +
                                             ": unexpected character after closing quote");
                }
            } else {
                while (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
                    field += text[i];
                    ++i;
                }
            }
            row.fields.push_back(field);
            if (i >= n) {
                row_done = true;
            } else if (text[i] == ',') {
                ++i;
            } else {  // \r or \n
                if (text[i] == '\r') ++i;
                if (i < n && text[i] == '\n') {
                    ++i;
                    ++line;
                }
                row_done = true;
            }
        }
        // a lone trailing newline produces an empty single-field row: drop it
        if (!(row.fields.size() == 1 && row.fields[0].empty() && i >= n)) {
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<CsvRow> read_csv_file(const std::string& path) {
    try {
        return parse_csv(read_file(path));
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string csv_escape(const std::string& field) {
    bool needs_quote = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quote) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double_field(const std::string& field, std::size_t line_no, const std::string& what) {
    double v = 0;
    auto* first = field.data();
    auto* last = field.data() + field.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last || field.empty()) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": non-numeric " + what +
                                 " '" + field + "'");
    }
    return v;
}

std::int64_t parse_int_field(const std::string& field, std::size_t line_no,
                             const std::string& what) {
    std::int64_t v = 0;
    auto* first = field.data();
    auto* last = field.data() + field.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last || field.empty()) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": non-integer " + what +
                                 " '" + field + "'");
    }
    return v;
}

void require_header(const std::vector<CsvRow>& rows, const std::vector<std::string>& expected,
                    const std::string& path) {
    std::string want;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) want += ',';
        want += expected[i];
    }
    if (rows.empty() || rows[0].fields != expected) {
        throw std::runtime_error(path + ": expected header '" + want + "'");
    }
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path dir = target.parent_path();
    if (dir.empty()) dir = ".";
    fs::path tmp = dir / (".tmp." + target.filename().string());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write file '" + tmp.string() + "'");
        out.write(content.data(), std::streamsize(content.size()));
        if (!out) throw std::runtime_error("short write to '" + tmp.string() + "'");
    }
    fs::rename(tmp, target);
}

}  // namespace tss
