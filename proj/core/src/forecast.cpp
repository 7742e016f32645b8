#include "sarimpact/forecast.hpp"

#include <cmath>
#include <stdexcept>

#include "sarimpact/state_space.hpp"
#include "sarimpact/stats.hpp"

namespace sarimpact {

Forecast forecast(const FittedModel &model, const QuarterlySeries &estimation, int h, double alpha,
                  BackTransform mode, const LogOptions &log_opts) {
	if (!model.converged) {
		throw std::invalid_argument("forecast requires a converged model");
	}
	if (h < 1) {
		throw std::invalid_argument("forecast horizon must be >= 1");
	}
	if (!(alpha > 0.0 && alpha < 1.0)) {
		throw std::invalid_argument("alpha must lie in (0, 1)");
	}
	if (estimation.scale == Scale::kLevel) {
		throw std::invalid_argument("forecast expects the log-scale estimation series");
	}

	const SarimaOrder &order = model.order;
	const DifferenceSpec spec{order.d, order.D, order.s};
	const QuarterlySeries diffed = difference(estimation, spec);

	const StateSpaceSystem sys = state_space(order, model.params);
	const FilterResult filt = kalman_filter(sys, diffed.values);

	// Minimum-MSE forecasts of the differenced process from the filter state.
	std::vector<double> w_hat(static_cast<std::size_t>(h));
	Eigen::VectorXd state = filt.final_state;
	for (int j = 0; j < h; ++j) {
		w_hat[static_cast<std::size_t>(j)] = sys.mean + state(0);
		state = (sys.transition * state).eval();
	}

	Forecast fc;
	fc.start = advance(estimation.last_quarter(), 1);
	fc.horizon = h;
	fc.alpha = alpha;
	fc.mean_log = integrate_continue(estimation.values, w_hat, spec);

	const std::vector<double> psi = psi_weights(order, model.params, h);
	fc.var_log.resize(static_cast<std::size_t>(h));
	double accum = 0.0;
	for (int j = 0; j < h; ++j) {
		accum += psi[static_cast<std::size_t>(j)] * psi[static_cast<std::size_t>(j)];
		fc.var_log[static_cast<std::size_t>(j)] = model.params.sigma2 * accum;
	}

	const double z = normal_quantile(1.0 - alpha / 2.0);
	fc.expected_level.resize(static_cast<std::size_t>(h));
	fc.lower_level.resize(static_cast<std::size_t>(h));
	fc.upper_level.resize(static_cast<std::size_t>(h));
	for (int j = 0; j < h; ++j) {
		const double m = fc.mean_log[static_cast<std::size_t>(j)];
		const double sd = std::sqrt(fc.var_log[static_cast<std::size_t>(j)]);
		const double point = mode == BackTransform::kMean ? m + 0.5 * sd * sd : m;
		fc.expected_level[static_cast<std::size_t>(j)] = std::exp(point) - log_opts.offset;
		fc.lower_level[static_cast<std::size_t>(j)] = std::exp(m - z * sd) - log_opts.offset;
		fc.upper_level[static_cast<std::size_t>(j)] = std::exp(m + z * sd) - log_opts.offset;
	}
	return fc;
}

std::vector<HoldoutRow> holdout_compare(const Forecast &fc, const QuarterlySeries &realized) {
	if (realized.scale != Scale::kLevel) {
		throw std::invalid_argument("holdout_compare expects a level-scale realized series");
	}
	std::vector<HoldoutRow> rows;
	rows.reserve(static_cast<std::size_t>(fc.horizon));
	for (int j = 0; j < fc.horizon; ++j) {
		const QuarterIndex q = advance(fc.start, j);
		HoldoutRow row;
		row.quarter = q;
		row.expected = fc.expected_level[static_cast<std::size_t>(j)];
		row.realized = realized.at(q);  // throws std::out_of_range when misaligned
		row.difference = row.realized - row.expected;
		rows.push_back(row);
	}
	return rows;
}

}  // namespace sarimpact
