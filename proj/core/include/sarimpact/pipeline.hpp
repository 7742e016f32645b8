#ifndef SARIMPACT_PIPELINE_HPP
#define SARIMPACT_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sarimpact/dataset.hpp"
#include "sarimpact/diagnostics.hpp"
#include "sarimpact/forecast.hpp"
#include "sarimpact/impact.hpp"
#include "sarimpact/run_config.hpp"
#include "sarimpact/selection.hpp"

namespace sarimpact {

/// Everything the pipeline produced for one (class, activity) series.
struct SeriesOutcome {
	SeriesKey key;
	bool failed = false;
	std::string error;

	FittedModel model;
	std::vector<RankedCandidate> ranked;
	TestResult arch;
	TestResult ljung;
	Forecast fc;
	std::vector<HoldoutRow> holdout;
};

struct PipelineResult {
	std::vector<SeriesOutcome> outcomes;  // sorted by (class, activity)
	std::vector<ImpactRow> impact_rows;   // successful series only
	std::optional<NominalImpact> nominal;
};

/// Full per-series pipeline: log transform, AIC grid search, residual
/// diagnostics, holdout forecast, impact rows. A failing series aborts the
/// run unless config.continue_on_error is set, in which case it is recorded
/// as failed and left out of every total.
PipelineResult run_pipeline(const Dataset &dataset, const RunConfig &config);

/// Writes the report bundle into config.output_dir:
///   table_descriptive_q<i>.csv  class, per-activity base p.y. / base p.q.
///                               growth rates (percent, 2 decimals)
///   table_models_gcp.csv and _gwp.csv
///                               class, order, aic, arch_lm_pvalue,
///                               ljung_box_pvalue
///   table_forecast_<act>_q<i>.csv
///                               class, lower, expected, upper, real,
///                               difference (thousand MKD, 3 decimals)
///   table_impact.csv            class, <act>_q<i> relative errors (percent)
///   table_shares.csv            class, activity, quarter, expected/realized
///                               share (percent) and delta (pp)
///   report.txt                  human-readable summary
/// Rerunning on identical inputs produces byte-identical files.
void write_reports(const PipelineResult &result, const Dataset &dataset, const RunConfig &config);

/// Fixed-point decimal rendering used by every table writer.
std::string format_fixed(double value, int decimals);

}  // namespace sarimpact

#endif
