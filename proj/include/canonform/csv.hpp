#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace canonform::csv {

/// One parsed row; fields are unescaped.
using Row = std::vector<std::string>;

/// Reads an entire comma-separated stream. Fields may be double-quoted;
/// quoted fields may contain commas, newlines, and doubled quotes.
/// Throws canonform::ParseError on stray quotes or an unterminated field,
/// reporting the 1-based physical line.
std::vector<Row> read(std::istream& in);

/// Writes one row, quoting any field that needs it, terminated by '\n'.
void write_row(std::ostream& out, const Row& row);

/// Quotes a single field if it contains a comma, quote, or newline.
std::string escape(const std::string& field);

} // namespace canonform::csv
