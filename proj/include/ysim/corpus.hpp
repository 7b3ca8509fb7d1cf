#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ysim/csv.hpp"
#include "ysim/errors.hpp"

namespace ysim {

struct work_record {
    std::string title;
    std::int64_t inlinks = 0;
    std::optional<int> year;

    bool operator==(const work_record&) const = default;
};

struct researcher_profile {
    std::string name;
    std::optional<int> award_year;
    std::vector<work_record> works;

    std::vector<std::int64_t> inlink_counts() const {
        std::vector<std::int64_t> counts;
        counts.reserve(works.size());
        for (const auto& w : works) counts.push_back(w.inlinks);
        return counts;
    }
};

// Column names vary across exporter versions, so the mapping is
// configurable; these defaults match the common export layout.
struct csv_schema {
    std::string cites_column = "Cites";
    std::string title_column = "Title";
    std::string year_column = "Year";
    char delimiter = ',';
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline std::optional<std::int64_t> parse_int(std::string_view cell) {
    const std::string_view t = trim(cell);
    if (t.empty()) return std::nullopt;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) return std::nullopt;
    return value;
}

inline std::optional<std::size_t> find_column(const std::vector<std::string>& header,
                                              const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (std::string(trim(header[i])) == name) return i;
    return std::nullopt;
}

} // namespace detail

// Parses a delimited export of one researcher's works. The header row is
// required and must contain the citation-count column; title and year
// columns are picked up when present. Rows come back in file order.
inline researcher_profile parse_citation_csv(std::string_view text,
                                             const csv_schema& schema = {},
                                             std::string name = {}) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3); // UTF-8 BOM
    const auto records = csv::parse(text, schema.delimiter);
    if (records.empty()) throw empty_input_error("parse_citation_csv: no content");

    const auto& header = records.front().fields;
    const auto cites_col = detail::find_column(header, schema.cites_column);
    if (!cites_col)
        throw schema_error("parse_citation_csv: citation column '" + schema.cites_column +
                           "' not found in header");
    const auto title_col = detail::find_column(header, schema.title_column);
    const auto year_col = detail::find_column(header, schema.year_column);

    researcher_profile profile;
    profile.name = std::move(name);
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (*cites_col >= rec.fields.size())
            throw parse_error("parse_citation_csv: row has no value in column '" +
                                  schema.cites_column + "'",
                              rec.line);
        if (detail::trim(rec.fields[*cites_col]).empty())
            throw parse_error("parse_citation_csv: empty citation cell", rec.line);
        const auto count = detail::parse_int(rec.fields[*cites_col]);
        if (!count)
            throw parse_error("parse_citation_csv: citation count '" +
                                  rec.fields[*cites_col] + "' is not a base-10 integer",
                              rec.line);
        if (*count < 0)
            throw parse_error("parse_citation_csv: negative citation count " +
                                  std::to_string(*count),
                              rec.line);

        work_record work;
        work.inlinks = *count;
        if (title_col && *title_col < rec.fields.size()) work.title = rec.fields[*title_col];
        if (year_col && *year_col < rec.fields.size()) {
            const std::string_view cell = detail::trim(rec.fields[*year_col]);
            if (!cell.empty()) {
                const auto year = detail::parse_int(cell);
                if (!year)
                    throw parse_error("parse_citation_csv: year '" + std::string(cell) +
                                          "' is not an integer",
                                      rec.line);
                work.year = static_cast<int>(*year);
            }
        }
        profile.works.push_back(std::move(work));
    }
    return profile;
}

inline researcher_profile parse_citation_csv(std::istream& in, const csv_schema& schema = {},
                                             std::string name = {}) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_citation_csv(buf.str(), schema, std::move(name));
}

// Serializes a profile back to delimited text with the schema's column
// names. Re-parsing the output yields the same works, field for field.
inline std::string profile_to_csv(const researcher_profile& profile,
                                  const csv_schema& schema = {}) {
    std::string out =
        csv::format_row({schema.title_column, schema.cites_column, schema.year_column},
                        schema.delimiter);
    for (const auto& w : profile.works) {
        out += csv::format_row(
            {w.title, std::to_string(w.inlinks), w.year ? std::to_string(*w.year) : ""},
            schema.delimiter);
    }
    return out;
}

// Advisory data-quality checks; reports, never throws.
inline std::vector<std::string> validate_profile(const researcher_profile& profile) {
    std::vector<std::string> warnings;
    if (profile.works.empty()) {
        warnings.push_back("empty profile: no works to analyze");
        return warnings;
    }
    bool any_cited = false;
    for (const auto& w : profile.works)
        if (w.inlinks > 0) any_cited = true;
    if (!any_cited) warnings.push_back("all works uncited");

    std::set<std::string_view> seen, reported;
    for (const auto& w : profile.works) {
        if (w.title.empty()) continue;
        if (!seen.insert(w.title).second && reported.insert(w.title).second)
            warnings.push_back("duplicate title: " + w.title);
    }
    return warnings;
}

inline researcher_profile load_profile(const std::string& path, const csv_schema& schema = {},
                                       std::string name = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open input file: " + path);
    return parse_citation_csv(in, schema, std::move(name));
}

} // namespace ysim
