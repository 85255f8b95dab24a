#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sanctionflow::csv {

/// RFC-4180 field quoting: quotes only when the value needs it.
std::string escape(std::string_view field);

/// Joins fields into one CSV line (no trailing newline).
std::string join(const std::vector<std::string>& fields);

/// Splits one CSV line into fields, honoring double-quote escaping.
/// Throws InputError on unterminated quotes.
std::vector<std::string> split(std::string_view line);

/// Streaming reader over header + data rows. Skips blank lines.
class Reader {
public:
    Reader(std::istream& in, std::string source_name);

    /// Header row, read on construction. Empty file -> empty header.
    const std::vector<std::string>& header() const { return header_; }

    /// Next data row; false at EOF. Rows are validated against the header
    /// width. line() reports the 1-based source line of the row just read.
    bool next(std::vector<std::string>& row);
    std::size_t line() const { return line_; }

    /// "file:line: message" InputError for the current row.
    [[noreturn]] void fail(const std::string& message) const;

private:
    std::istream& in_;
    std::string source_;
    std::vector<std::string> header_;
    std::size_t line_ = 0;
};

} // namespace sanctionflow::csv
