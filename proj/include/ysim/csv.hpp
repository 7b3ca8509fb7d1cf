#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ysim::csv {

struct record {
    std::vector<std::string> fields;
    std::size_t line = 0; // 1-based physical line the record starts on
};

// Splits delimited text into records. Fields may be quoted with double
// quotes; quoted fields can contain the delimiter, doubled quotes, and line
// breaks. Records that consist solely of empty fields (blank lines) are
// dropped.
inline std::vector<record> parse(std::string_view text, char delimiter) {
    std::vector<record> records;
    record current;
    std::string field;
    bool in_quotes = false;
    std::size_t line = 1;
    current.line = 1;

    auto end_field = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
    };
    auto end_record = [&] {
        end_field();
        bool all_empty = true;
        for (const auto& f : current.fields)
            if (!f.empty()) all_empty = false;
        if (!all_empty) records.push_back(std::move(current));
        current = {};
        current.line = line;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == delimiter) {
            end_field();
        } else if (c == '\n') {
            ++line;
            end_record();
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    if (!field.empty() || !current.fields.empty()) end_record();
    return records;
}

inline bool needs_quoting(std::string_view field, char delimiter) {
    for (char c : field)
        if (c == delimiter || c == '"' || c == '\n' || c == '\r') return true;
    return false;
}

inline std::string escape(std::string_view field, char delimiter) {
    if (!needs_quoting(field, delimiter)) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += '"';
    return out;
}

inline std::string format_row(const std::vector<std::string>& fields, char delimiter) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out.push_back(delimiter);
        out += escape(fields[i], delimiter);
    }
    out.push_back('\n');
    return out;
}

} // namespace ysim::csv
