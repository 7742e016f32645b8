#ifndef SARIMPACT_SERIES_HPP
#define SARIMPACT_SERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sarimpact/quarter.hpp"

namespace sarimpact {

enum class Scale { kLevel, kLog, kDifferenced };

enum class Activity { kGcp, kGwp };

std::string to_string(Activity a);
Activity parse_activity(std::string_view text);

/// Contiguous calendar-indexed quarterly observations for one
/// (insurance class, activity) pair. Values are in thousand MKD on the
/// level scale and dimensionless after a log transform.
struct QuarterlySeries {
	QuarterIndex start;
	std::vector<double> values;
	Scale scale = Scale::kLevel;

	std::string class_name;
	Activity activity = Activity::kGcp;

	std::size_t size() const { return values.size(); }
	bool empty() const { return values.empty(); }

	QuarterIndex quarter_at(std::size_t i) const { return advance(start, static_cast<int>(i)); }
	QuarterIndex last_quarter() const { return advance(start, static_cast<int>(values.size()) - 1); }

	/// Position of `q` in the series; throws std::out_of_range when `q` is
	/// outside [start, last_quarter()].
	std::size_t index_of(QuarterIndex q) const;

	double at(QuarterIndex q) const { return values[index_of(q)]; }

	/// Sub-series covering [from, to], both inclusive.
	QuarterlySeries slice(QuarterIndex from, QuarterIndex to) const;

	/// Requires level scale with strictly positive values (offset aside).
	void validate_level() const;
};

}  // namespace sarimpact

#endif
