#pragma once

#include <string>
#include <vector>

namespace adcsim {

// Locale-independent decimal formatting ('.' separator, shortest-ish %g
// style with the given significant digits). All file output goes through
// this so repeated runs are byte-identical.
std::string format_double(double v, int significant = 10);

// Minimal RFC-4180-style writer: comma separators, LF line endings, one
// header row. Cells are written verbatim (callers avoid commas/quotes).
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void add_row(std::vector<std::string> cells);
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }
    const std::vector<std::string>& header() const { return header_; }
    std::string to_string() const;
    void write_file(const std::string& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// Space-aligned plain-text rendering of the same table.
std::string render_aligned(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows);

void write_text_file(const std::string& path, const std::string& content);

} // namespace adcsim
