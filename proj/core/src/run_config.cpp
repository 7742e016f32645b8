#include "sarimpact/run_config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sarimpact/csv.hpp"

namespace sarimpact {

void RunConfig::validate() const {
	if (!(alpha > 0.0 && alpha < 1.0)) {
		throw std::invalid_argument("alpha must lie in (0, 1)");
	}
	if (arch_lags < 1 || ljung_box_lags < 1) {
		throw std::invalid_argument("diagnostic lags must be >= 1");
	}
	if (!(mkd_per_eur > 0.0)) {
		throw std::invalid_argument("mkd_per_eur must be positive");
	}
	if (holdout_quarters < 1) {
		throw std::invalid_argument("holdout_quarters must be >= 1");
	}
	if (log_offset < 0.0) {
		throw std::invalid_argument("log_offset must be >= 0");
	}
	grid.candidates();  // validates ranges
}

namespace {

std::string trim(const std::string &text) {
	const auto begin = text.find_first_not_of(" \t");
	if (begin == std::string::npos) return "";
	const auto end = text.find_last_not_of(" \t");
	return text.substr(begin, end - begin + 1);
}

int parse_int_value(const std::string &value, const std::string &key) {
	return static_cast<int>(parse_number(value, "config key " + key));
}

bool parse_bool_value(const std::string &value, const std::string &key) {
	if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
	if (value == "false" || value == "0" || value == "no" || value == "off") return false;
	throw std::invalid_argument("config key " + key + ": expected a boolean, got '" + value + "'");
}

std::vector<int> parse_int_list(const std::string &value, const std::string &key) {
	std::vector<int> out;
	std::stringstream ss(value);
	std::string item;
	while (std::getline(ss, item, ',')) {
		item = trim(item);
		if (item.empty()) continue;
		out.push_back(parse_int_value(item, key));
	}
	if (out.empty()) {
		throw std::invalid_argument("config key " + key + ": empty list");
	}
	return out;
}

}  // namespace

std::map<std::string, std::string> parse_config_file(const std::filesystem::path &path) {
	std::ifstream in(path);
	if (!in) {
		throw std::runtime_error("cannot open config file: " + path.string());
	}
	std::map<std::string, std::string> entries;
	std::string line;
	std::size_t lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		const auto hash = line.find('#');
		if (hash != std::string::npos) line.erase(hash);
		line = trim(line);
		if (line.empty()) continue;
		const auto eq = line.find('=');
		if (eq == std::string::npos) {
			throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
			                         ": expected 'key = value', got '" + line + "'");
		}
		const std::string key = trim(line.substr(0, eq));
		const std::string value = trim(line.substr(eq + 1));
		if (key.empty()) {
			throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": empty key");
		}
		entries[key] = value;
	}
	return entries;
}

void apply_config_entry(RunConfig &config, const std::string &key, const std::string &value) {
	if (key == "p_max") config.grid.p_max = parse_int_value(value, key);
	else if (key == "q_max") config.grid.q_max = parse_int_value(value, key);
	else if (key == "P_max") config.grid.P_max = parse_int_value(value, key);
	else if (key == "Q_max") config.grid.Q_max = parse_int_value(value, key);
	else if (key == "d_choices") config.grid.d_choices = parse_int_list(value, key);
	else if (key == "D_choices") config.grid.D_choices = parse_int_list(value, key);
	else if (key == "seasonal_period") config.grid.s = parse_int_value(value, key);
	else if (key == "alpha") config.alpha = parse_number(value, key);
	else if (key == "arch_lags") config.arch_lags = parse_int_value(value, key);
	else if (key == "ljung_box_lags") config.ljung_box_lags = parse_int_value(value, key);
	else if (key == "ljung_box_adjust_df") config.ljung_box_adjust_df = parse_bool_value(value, key);
	else if (key == "mkd_per_eur") config.mkd_per_eur = parse_number(value, key);
	else if (key == "back_transform") {
		if (value == "median") config.back_transform = BackTransform::kMedian;
		else if (value == "mean") config.back_transform = BackTransform::kMean;
		else throw std::invalid_argument("config key back_transform: expected median or mean, got '" + value + "'");
	} else if (key == "log_offset") config.log_offset = parse_number(value, key);
	else if (key == "holdout_quarters") config.holdout_quarters = parse_int_value(value, key);
	else if (key == "continue_on_error") config.continue_on_error = parse_bool_value(value, key);
	else if (key == "threads") config.threads = parse_int_value(value, key);
	else if (key == "output_dir") config.output_dir = value;
	else if (key == "intercept") {
		if (value == "auto") config.fit.intercept_override.reset();
		else if (value == "on") config.fit.intercept_override = true;
		else if (value == "off") config.fit.intercept_override = false;
		else throw std::invalid_argument("config key intercept: expected auto, on or off, got '" + value + "'");
	} else {
		throw std::invalid_argument("unknown config key '" + key + "'");
	}
}

void apply_config(RunConfig &config, const std::map<std::string, std::string> &entries) {
	for (const auto &[key, value] : entries) {
		apply_config_entry(config, key, value);
	}
}

}  // namespace sarimpact
