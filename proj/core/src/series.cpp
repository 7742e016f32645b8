#include "sarimpact/series.hpp"

#include <stdexcept>

namespace sarimpact {

std::string to_string(Activity a) {
	return a == Activity::kGcp ? "gcp" : "gwp";
}

Activity parse_activity(std::string_view text) {
	if (text == "gcp" || text == "GCP") return Activity::kGcp;
	if (text == "gwp" || text == "GWP") return Activity::kGwp;
	throw std::invalid_argument("activity must be gcp or gwp: '" + std::string(text) + "'");
}

std::size_t QuarterlySeries::index_of(QuarterIndex q) const {
	const int offset = quarters_between(start, q);
	if (offset < 0 || offset >= static_cast<int>(values.size())) {
		throw std::out_of_range("quarter " + sarimpact::to_string(q) + " not covered by series starting " +
		                        sarimpact::to_string(start));
	}
	return static_cast<std::size_t>(offset);
}

QuarterlySeries QuarterlySeries::slice(QuarterIndex from, QuarterIndex to) const {
	const std::size_t i = index_of(from);
	const std::size_t j = index_of(to);
	if (j < i) {
		throw std::invalid_argument("slice range is reversed");
	}
	QuarterlySeries out = *this;
	out.start = from;
	out.values.assign(values.begin() + static_cast<long>(i), values.begin() + static_cast<long>(j) + 1);
	return out;
}

void QuarterlySeries::validate_level() const {
	if (scale != Scale::kLevel) {
		throw std::invalid_argument("series is not on the level scale");
	}
	for (std::size_t i = 0; i < values.size(); ++i) {
		if (!(values[i] > 0.0)) {
			throw std::domain_error("nonpositive level value at " + sarimpact::to_string(quarter_at(i)) +
			                        " in series '" + class_name + "'");
		}
	}
}

}  // namespace sarimpact
