#pragma once

// Row-oriented output in the three --format modes. Text is a padded column
// listing, CSV follows RFC 4180 quoting with a header row, JSON is an array of
// objects keyed by column name.

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace sumsq::cli {

enum class Format { text, csv, json };

using Cell = std::variant<std::int64_t, std::string, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string cell_text(const Cell& c);
std::string csv_escape(const std::string& field);
void write_table(std::ostream& out, const Table& t, Format f);

} // namespace sumsq::cli
