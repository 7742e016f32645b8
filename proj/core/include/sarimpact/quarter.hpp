#ifndef SARIMPACT_QUARTER_HPP
#define SARIMPACT_QUARTER_HPP

#include <compare>
#include <string>
#include <string_view>

namespace sarimpact {

/// Calendar quarter, e.g. 2012Q2. Ordering is lexicographic on (year, quarter).
struct QuarterIndex {
	int year = 0;
	int quarter = 1;  // 1..4

	auto operator<=>(const QuarterIndex &) const = default;
};

/// Parses "YYYYQn" with n in 1..4. Throws std::invalid_argument on malformed
/// input or a quarter outside 1..4.
QuarterIndex parse_quarter(std::string_view text);

std::string to_string(QuarterIndex q);

/// Quarter n steps ahead (n may be negative).
QuarterIndex advance(QuarterIndex q, int n);

/// Number of quarters from `from` to `to`; advance(from, result) == to.
int quarters_between(QuarterIndex from, QuarterIndex to);

}  // namespace sarimpact

#endif
