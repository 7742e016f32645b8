#ifndef SARIMPACT_FORECAST_HPP
#define SARIMPACT_FORECAST_HPP

#include <vector>

#include "sarimpact/estimate.hpp"
#include "sarimpact/transforms.hpp"

namespace sarimpact {

/// Level-scale point forecast convention. kMedian exponentiates the log-scale
/// mean (the lognormal median); kMean adds the var/2 lognormal correction.
enum class BackTransform { kMedian, kMean };

struct Forecast {
	QuarterIndex start;               // first forecast quarter
	int horizon = 0;
	double alpha = 0.05;
	std::vector<double> mean_log;     // per-step predictive mean, log scale
	std::vector<double> var_log;      // per-step predictive variance, log scale
	std::vector<double> expected_level;
	std::vector<double> lower_level;
	std::vector<double> upper_level;
};

/// h-step out-of-sample forecast. `estimation` is the log-scale series the
/// model was fitted on (at minimum its trailing values; everything passed is
/// run through the filter to form the state). The log-scale mean is the
/// minimum-MSE predictor from the Kalman state, integrated back through the
/// differencing; the variance accumulates squared psi-weights of the
/// integrated process. Level intervals are exp(mean +- z sqrt(var)).
Forecast forecast(const FittedModel &model, const QuarterlySeries &estimation, int h, double alpha = 0.05,
                  BackTransform mode = BackTransform::kMedian, const LogOptions &log_opts = {});

struct HoldoutRow {
	QuarterIndex quarter;
	double expected = 0.0;
	double realized = 0.0;
	double difference = 0.0;  // realized - expected
};

/// Pairs each forecast step with the realized level value for the same
/// quarter. Throws when the realized series does not cover a forecast
/// quarter.
std::vector<HoldoutRow> holdout_compare(const Forecast &fc, const QuarterlySeries &realized);

}  // namespace sarimpact

#endif
