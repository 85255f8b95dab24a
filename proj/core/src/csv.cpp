#include "sanctionflow/csv.hpp"

#include "sanctionflow/types.hpp"

#include <istream>

namespace sanctionflow::csv {

std::string escape(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += escape(fields[i]);
    }
    return out;
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c == '\r' && i + 1 == line.size()) {
            // tolerate CRLF input
        } else {
            cur.push_back(c);
        }
        ++i;
    }
    if (quoted) throw InputError("unterminated quoted CSV field");
    fields.push_back(std::move(cur));
    return fields;
}

Reader::Reader(std::istream& in, std::string source_name)
    : in_(in), source_(std::move(source_name)) {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        header_ = split(line);
        break;
    }
}

bool Reader::next(std::vector<std::string>& row) {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        try {
            row = split(line);
        } catch (const InputError& e) {
            fail(e.what());
        }
        if (row.size() != header_.size()) {
            fail("expected " + std::to_string(header_.size()) + " fields, got " +
                 std::to_string(row.size()));
        }
        return true;
    }
    return false;
}

void Reader::fail(const std::string& message) const {
    throw InputError(source_ + ":" + std::to_string(line_) + ": " + message);
}

} // namespace sanctionflow::csv
