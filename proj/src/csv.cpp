#include "canonform/csv.hpp"

#include "canonform/errors.hpp"

namespace canonform::csv {

std::vector<Row> read(std::istream& in) {
    std::vector<Row> rows;
    Row row;
    std::string field;
    bool in_quotes = false;
    bool row_started = false;
    std::size_t line = 1;
    std::size_t quote_open_line = 0;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
        row_started = false;
    };

    char c;
    while (in.get(c)) {
        if (c == '\r') continue;
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field.empty()) {
                    throw ParseError("line " + std::to_string(line) +
                                     ": quote inside unquoted field");
                }
                in_quotes = true;
                quote_open_line = line;
                row_started = true;
                break;
            case ',':
                end_field();
                row_started = true;
                break;
            case '\n':
                if (row_started || !field.empty() || !row.empty()) end_row();
                ++line;
                break;
            default:
                field += c;
                row_started = true;
                break;
        }
    }
    if (in_quotes) {
        throw ParseError("line " + std::to_string(quote_open_line) +
                         ": unterminated quoted field");
    }
    if (row_started || !field.empty() || !row.empty()) end_row();
    return rows;
}

std::string escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_row(std::ostream& out, const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        out << escape(row[i]);
    }
    out << '\n';
}

} // namespace canonform::csv
