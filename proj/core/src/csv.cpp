#include "sarimpact/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sarimpact {

namespace {

std::vector<std::string> split_line(const std::string &line, const std::filesystem::path &path, std::size_t lineno) {
	std::vector<std::string> fields;
	std::string field;
	bool quoted = false;
	std::size_t i = 0;
	while (i < line.size()) {
		const char ch = line[i];
		if (quoted) {
			if (ch == '"') {
				if (i + 1 < line.size() && line[i + 1] == '"') {
					field.push_back('"');
					++i;
				} else {
					quoted = false;
				}
			} else {
				field.push_back(ch);
			}
		} else if (ch == '"') {
			if (!field.empty()) {
				throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
				                         ": quote inside unquoted field");
			}
			quoted = true;
		} else if (ch == ',') {
			fields.push_back(std::move(field));
			field.clear();
		} else {
			field.push_back(ch);
		}
		++i;
	}
	if (quoted) {
		throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": unterminated quoted field");
	}
	fields.push_back(std::move(field));
	return fields;
}

}  // namespace

CsvTable read_csv(const std::filesystem::path &path) {
	std::ifstream in(path);
	if (!in) {
		throw std::runtime_error("cannot open CSV file: " + path.string());
	}
	CsvTable table;
	std::string line;
	std::size_t lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		if (!line.empty() && line.back() == '\r') line.pop_back();
		if (line.empty()) continue;
		auto fields = split_line(line, path, lineno);
		if (table.header.empty()) {
			table.header = std::move(fields);
		} else {
			if (fields.size() != table.header.size()) {
				throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": expected " +
				                         std::to_string(table.header.size()) + " fields, got " +
				                         std::to_string(fields.size()));
			}
			table.rows.push_back(std::move(fields));
		}
	}
	if (table.header.empty()) {
		throw std::runtime_error("empty CSV file: " + path.string());
	}
	return table;
}

std::string csv_escape(const std::string &field) {
	if (field.find_first_of(",\"\n") == std::string::npos) {
		return field;
	}
	std::string out = "\"";
	for (char ch : field) {
		if (ch == '"') out += "\"\"";
		else out.push_back(ch);
	}
	out += "\"";
	return out;
}

void write_csv(const std::filesystem::path &path, const std::vector<std::string> &header,
               const std::vector<std::vector<std::string>> &rows) {
	std::ofstream out(path, std::ios::binary);  // binary keeps line endings byte-stable
	if (!out) {
		throw std::runtime_error("cannot write CSV file: " + path.string());
	}
	auto write_row = [&out](const std::vector<std::string> &fields) {
		for (std::size_t i = 0; i < fields.size(); ++i) {
			if (i) out << ',';
			out << csv_escape(fields[i]);
		}
		out << '\n';
	};
	write_row(header);
	for (const auto &row : rows) write_row(row);
	if (!out) {
		throw std::runtime_error("write failed: " + path.string());
	}
}

double parse_number(const std::string &field, const std::string &context) {
	if (field.empty()) {
		throw std::invalid_argument(context + ": empty numeric field");
	}
	errno = 0;
	char *end = nullptr;
	const double value = std::strtod(field.c_str(), &end);
	if (end != field.c_str() + field.size() || errno == ERANGE || !std::isfinite(value)) {
		throw std::invalid_argument(context + ": not a number: '" + field + "'");
	}
	return value;
}

}  // namespace sarimpact
