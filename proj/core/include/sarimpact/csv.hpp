#ifndef SARIMPACT_CSV_HPP
#define SARIMPACT_CSV_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace sarimpact {

struct CsvTable {
	std::vector<std::string> header;
	std::vector<std::vector<std::string>> rows;
};

/// Comma-separated values with a header row. Fields containing commas or
/// quotes are double-quoted; embedded quotes are doubled. UTF-8, '.' decimal
/// separator, LF or CRLF line endings.
CsvTable read_csv(const std::filesystem::path &path);

std::string csv_escape(const std::string &field);

void write_csv(const std::filesystem::path &path, const std::vector<std::string> &header,
               const std::vector<std::vector<std::string>> &rows);

/// Strict double parse; rejects trailing junk, empty fields, and non-finite
/// spellings.
double parse_number(const std::string &field, const std::string &context);

}  // namespace sarimpact

#endif
