#include "sarimpact/impact.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sarimpact {

double relative_error(double expected, double realized) {
	if (realized == 0.0) {
		throw std::domain_error("relative_error undefined for zero realized value");
	}
	return 100.0 * (expected - realized) / realized;
}

ImpactRow make_impact_row(std::string class_name, Activity activity, QuarterIndex quarter, double expected,
                          double realized) {
	ImpactRow row;
	row.class_name = std::move(class_name);
	row.activity = activity;
	row.quarter = quarter;
	row.expected = expected;
	row.realized = realized;
	row.relative_error_pct = relative_error(expected, realized);
	row.difference = realized - expected;
	return row;
}

namespace {

void require_same_column(std::span<const ImpactRow> rows, const char *what) {
	if (rows.empty()) {
		throw std::invalid_argument(std::string(what) + ": no rows");
	}
	for (const ImpactRow &row : rows) {
		if (row.quarter != rows.front().quarter || row.activity != rows.front().activity) {
			throw std::invalid_argument(std::string(what) + ": rows mix quarters or activities");
		}
	}
}

}  // namespace

double total_relative_error(std::span<const ImpactRow> rows) {
	require_same_column(rows, "total_relative_error");
	double expected_sum = 0.0;
	double realized_sum = 0.0;
	for (const ImpactRow &row : rows) {
		expected_sum += row.expected;
		realized_sum += row.realized;
	}
	if (realized_sum == 0.0) {
		throw std::domain_error("total_relative_error undefined for zero aggregate realized value");
	}
	return 100.0 * (expected_sum - realized_sum) / realized_sum;
}

NominalImpact nominal_impact(std::span<const ImpactRow> gcp_rows, std::span<const ImpactRow> gwp_rows,
                             double mkd_per_eur) {
	if (gcp_rows.empty() || gwp_rows.empty()) {
		throw std::invalid_argument("nominal_impact needs rows for both activities");
	}
	if (!(mkd_per_eur > 0.0)) {
		throw std::invalid_argument("exchange rate must be positive");
	}

	NominalImpact result;
	result.mkd_per_eur = mkd_per_eur;

	auto accumulate = [&](std::span<const ImpactRow> rows, Activity activity) {
		std::map<QuarterIndex, double> by_quarter;
		for (const ImpactRow &row : rows) {
			if (row.activity != activity) {
				throw std::invalid_argument("nominal_impact rows tagged with the wrong activity");
			}
			by_quarter[row.quarter] += row.expected - row.realized;
		}
		double total_eur = 0.0;
		for (const auto &[quarter, shortfall_mkd] : by_quarter) {
			NominalCell cell;
			cell.activity = activity;
			cell.quarter = quarter;
			cell.shortfall_mkd = shortfall_mkd;
			cell.shortfall_eur = shortfall_mkd / mkd_per_eur;
			total_eur += cell.shortfall_eur;
			result.cells.push_back(cell);
		}
		return total_eur;
	};

	result.gcp_shortfall_eur = accumulate(gcp_rows, Activity::kGcp);
	result.gwp_shortfall_eur = accumulate(gwp_rows, Activity::kGwp);
	result.gross_total_eur = result.gcp_shortfall_eur + result.gwp_shortfall_eur;
	result.net_loss_eur = result.gwp_shortfall_eur - result.gcp_shortfall_eur;
	return result;
}

ShareTable structural_shares(std::span<const ImpactRow> rows) {
	require_same_column(rows, "structural_shares");
	std::set<std::string> seen;
	double expected_total = 0.0;
	double realized_total = 0.0;
	for (const ImpactRow &row : rows) {
		if (!seen.insert(row.class_name).second) {
			throw std::invalid_argument("structural_shares: duplicate class '" + row.class_name + "'");
		}
		expected_total += row.expected;
		realized_total += row.realized;
	}
	if (expected_total == 0.0 || realized_total == 0.0) {
		throw std::domain_error("structural_shares undefined for zero column totals");
	}

	ShareTable table;
	table.activity = rows.front().activity;
	table.quarter = rows.front().quarter;
	table.rows.reserve(rows.size());
	for (const ImpactRow &row : rows) {
		ShareRow share;
		share.class_name = row.class_name;
		share.expected_share = row.expected / expected_total;
		share.realized_share = row.realized / realized_total;
		share.delta_pp = 100.0 * (share.realized_share - share.expected_share);
		table.rows.push_back(std::move(share));
	}
	return table;
}

}  // namespace sarimpact
