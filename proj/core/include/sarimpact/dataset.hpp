#ifndef SARIMPACT_DATASET_HPP
#define SARIMPACT_DATASET_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sarimpact/series.hpp"

namespace sarimpact {

struct SeriesKey {
	std::string class_name;
	Activity activity = Activity::kGcp;

	auto operator<=>(const SeriesKey &) const = default;
};

/// All series from one input file, split into an estimation window and a
/// holdout used only for impact measurement.
struct Dataset {
	std::map<SeriesKey, QuarterlySeries> series;
	QuarterIndex estimation_end;
	std::vector<QuarterIndex> holdout;

	std::vector<std::string> class_names() const;  // sorted, unique
	const QuarterlySeries &at(const std::string &class_name, Activity activity) const;
	QuarterlySeries estimation_window(const std::string &class_name, Activity activity) const;
};

/// Reads `class,quarter,gcp,gwp` rows (quarter as YYYYQn, values in thousand
/// MKD). Every class must cover the same contiguous quarter range with no
/// gaps or duplicates; the trailing `holdout_quarters` quarters form the
/// holdout. Errors name the offending class and quarter.
Dataset ingest(const std::filesystem::path &path, int holdout_quarters = 2);

struct SeriesSummary {
	std::string class_name;
	Activity activity;
	double mean = 0.0;
	double std_dev = 0.0;  // sample standard deviation over the estimation window
	int n = 0;
};

std::vector<SeriesSummary> summarize(const Dataset &dataset);

}  // namespace sarimpact

#endif
