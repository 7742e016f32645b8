#include "sarimpact/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sarimpact/csv.hpp"
#include "sarimpact/stats.hpp"

namespace sarimpact {

std::vector<std::string> Dataset::class_names() const {
	std::vector<std::string> names;
	for (const auto &[key, value] : series) {
		if (names.empty() || names.back() != key.class_name) {
			names.push_back(key.class_name);
		}
	}
	names.erase(std::unique(names.begin(), names.end()), names.end());
	return names;
}

const QuarterlySeries &Dataset::at(const std::string &class_name, Activity activity) const {
	const auto it = series.find(SeriesKey{class_name, activity});
	if (it == series.end()) {
		throw std::out_of_range("no series for class '" + class_name + "' activity " + to_string(activity));
	}
	return it->second;
}

QuarterlySeries Dataset::estimation_window(const std::string &class_name, Activity activity) const {
	const QuarterlySeries &full = at(class_name, activity);
	return full.slice(full.start, estimation_end);
}

Dataset ingest(const std::filesystem::path &path, int holdout_quarters) {
	if (holdout_quarters < 0) {
		throw std::invalid_argument("holdout_quarters must be >= 0");
	}
	const CsvTable table = read_csv(path);
	const std::vector<std::string> expected_header{"class", "quarter", "gcp", "gwp"};
	if (table.header != expected_header) {
		throw std::runtime_error(path.string() + ": header must be exactly 'class,quarter,gcp,gwp'");
	}
	if (table.rows.empty()) {
		throw std::runtime_error(path.string() + ": no data rows");
	}

	std::map<std::string, std::map<QuarterIndex, std::pair<double, double>>> per_class;
	for (const auto &row : table.rows) {
		const std::string &cls = row[0];
		if (cls.empty()) {
			throw std::runtime_error(path.string() + ": empty class name");
		}
		const QuarterIndex quarter = parse_quarter(row[1]);
		const std::string context = cls + " " + to_string(quarter);
		const double gcp = parse_number(row[2], context + " gcp");
		const double gwp = parse_number(row[3], context + " gwp");
		auto [it, inserted] = per_class[cls].emplace(quarter, std::make_pair(gcp, gwp));
		(void)it;
		if (!inserted) {
			throw std::runtime_error(path.string() + ": duplicate row for class '" + cls + "' quarter " +
			                         to_string(quarter));
		}
	}

	// All classes must share one contiguous calendar span.
	const auto &first_class = *per_class.begin();
	const QuarterIndex span_start = first_class.second.begin()->first;
	const QuarterIndex span_end = first_class.second.rbegin()->first;
	const int span_len = quarters_between(span_start, span_end) + 1;

	Dataset dataset;
	for (const auto &[cls, rows] : per_class) {
		const QuarterIndex start = rows.begin()->first;
		const QuarterIndex end = rows.rbegin()->first;
		if (start != span_start || end != span_end) {
			throw std::runtime_error(path.string() + ": class '" + cls + "' covers " + to_string(start) + ".." +
			                         to_string(end) + " but '" + first_class.first + "' covers " +
			                         to_string(span_start) + ".." + to_string(span_end));
		}
		if (static_cast<int>(rows.size()) != span_len) {
			QuarterIndex probe = span_start;
			for (int i = 0; i < span_len; ++i, probe = advance(probe, 1)) {
				if (!rows.contains(probe)) {
					throw std::runtime_error(path.string() + ": class '" + cls + "' is missing quarter " +
					                         to_string(probe));
				}
			}
		}

		QuarterlySeries gcp_series;
		gcp_series.start = span_start;
		gcp_series.scale = Scale::kLevel;
		gcp_series.class_name = cls;
		gcp_series.activity = Activity::kGcp;
		QuarterlySeries gwp_series = gcp_series;
		gwp_series.activity = Activity::kGwp;
		for (const auto &[quarter, values] : rows) {
			gcp_series.values.push_back(values.first);
			gwp_series.values.push_back(values.second);
		}
		gcp_series.validate_level();
		gwp_series.validate_level();
		dataset.series.emplace(SeriesKey{cls, Activity::kGcp}, std::move(gcp_series));
		dataset.series.emplace(SeriesKey{cls, Activity::kGwp}, std::move(gwp_series));
	}

	if (span_len <= holdout_quarters) {
		throw std::runtime_error(path.string() + ": not enough quarters for a " +
		                         std::to_string(holdout_quarters) + "-quarter holdout");
	}
	dataset.estimation_end = advance(span_end, -holdout_quarters);
	for (int i = 1; i <= holdout_quarters; ++i) {
		dataset.holdout.push_back(advance(dataset.estimation_end, i));
	}
	return dataset;
}

std::vector<SeriesSummary> summarize(const Dataset &dataset) {
	std::vector<SeriesSummary> out;
	for (const auto &[key, full] : dataset.series) {
		const QuarterlySeries window = full.slice(full.start, dataset.estimation_end);
		SeriesSummary s;
		s.class_name = key.class_name;
		s.activity = key.activity;
		s.n = static_cast<int>(window.size());
		s.mean = mean(window.values);
		s.std_dev = std::sqrt(sample_variance(window.values));
		out.push_back(std::move(s));
	}
	return out;
}

}  // namespace sarimpact
