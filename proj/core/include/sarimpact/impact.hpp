#ifndef SARIMPACT_IMPACT_HPP
#define SARIMPACT_IMPACT_HPP

#include <span>
#include <string>
#include <vector>

#include "sarimpact/quarter.hpp"
#include "sarimpact/series.hpp"

namespace sarimpact {

/// One (class, activity, quarter) comparison of the counterfactual
/// expectation with the realized value, both in thousand MKD.
struct ImpactRow {
	std::string class_name;
	Activity activity = Activity::kGcp;
	QuarterIndex quarter;
	double expected = 0.0;
	double realized = 0.0;
	double relative_error_pct = 0.0;  // 100 (expected - realized) / realized
	double difference = 0.0;          // realized - expected
};

/// 100 * (expected - realized) / realized, in percent.
double relative_error(double expected, double realized);

ImpactRow make_impact_row(std::string class_name, Activity activity, QuarterIndex quarter, double expected,
                          double realized);

/// Ratio-of-sums total: 100 * (sum expected - sum realized) / sum realized.
/// Not the average of per-row errors. Rows must share quarter and activity.
double total_relative_error(std::span<const ImpactRow> rows);

struct NominalCell {
	Activity activity = Activity::kGcp;
	QuarterIndex quarter;
	double shortfall_mkd = 0.0;  // sum(expected - realized), thousand MKD
	double shortfall_eur = 0.0;  // thousand EUR
};

/// Nominal accounting of the shock. Gross shortfalls are reported per
/// activity and quarter; the net industry loss is the GWP shortfall minus
/// the GCP shortfall (revenue foregone net of claim payouts avoided), the
/// only aggregation consistent with treating claims as outflows.
struct NominalImpact {
	std::vector<NominalCell> cells;       // deterministic order: activity, then quarter
	double gcp_shortfall_eur = 0.0;       // thousand EUR, summed over quarters
	double gwp_shortfall_eur = 0.0;
	double gross_total_eur = 0.0;         // gcp + gwp shortfalls
	double net_loss_eur = 0.0;            // gwp - gcp shortfalls
	double mkd_per_eur = 0.0;
};

NominalImpact nominal_impact(std::span<const ImpactRow> gcp_rows, std::span<const ImpactRow> gwp_rows,
                             double mkd_per_eur = 61.5);

struct ShareRow {
	std::string class_name;
	double expected_share = 0.0;  // fraction of column total
	double realized_share = 0.0;
	double delta_pp = 0.0;        // realized - expected, percentage points
};

/// Per-class shares of the total expected and realized activity for one
/// (quarter, activity) column.
struct ShareTable {
	Activity activity = Activity::kGcp;
	QuarterIndex quarter;
	std::vector<ShareRow> rows;
};

ShareTable structural_shares(std::span<const ImpactRow> rows);

}  // namespace sarimpact

#endif
