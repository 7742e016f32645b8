#include "sarimpact/quarter.hpp"

#include <cctype>
#include <stdexcept>

namespace sarimpact {

QuarterIndex parse_quarter(std::string_view text) {
	if (text.size() != 6 || (text[4] != 'Q' && text[4] != 'q')) {
		throw std::invalid_argument("quarter must match YYYYQn: '" + std::string(text) + "'");
	}
	for (int i : {0, 1, 2, 3, 5}) {
		if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
			throw std::invalid_argument("quarter must match YYYYQn: '" + std::string(text) + "'");
		}
	}
	const int year = (text[0] - '0') * 1000 + (text[1] - '0') * 100 + (text[2] - '0') * 10 + (text[3] - '0');
	const int q = text[5] - '0';
	if (q < 1 || q > 4) {
		throw std::invalid_argument("quarter out of range 1..4: '" + std::string(text) + "'");
	}
	return {year, q};
}

std::string to_string(QuarterIndex q) {
	return std::to_string(q.year) + "Q" + std::to_string(q.quarter);
}

QuarterIndex advance(QuarterIndex q, int n) {
	int idx = q.year * 4 + (q.quarter - 1) + n;
	QuarterIndex out;
	out.year = idx / 4;
	out.quarter = idx % 4;
	if (out.quarter < 0) {  // negative years would need floored division; never hit for calendar data
		out.year -= 1;
		out.quarter += 4;
	}
	out.quarter += 1;
	return out;
}

int quarters_between(QuarterIndex from, QuarterIndex to) {
	return (to.year * 4 + to.quarter) - (from.year * 4 + from.quarter);
}

}  // namespace sarimpact
