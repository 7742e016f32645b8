#include "sarimpact/estimate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "arma_likelihood.hpp"
#include "sarimpact/state_space.hpp"
#include "sarimpact/stats.hpp"
#include "sarimpact/transforms.hpp"

namespace sarimpact {

namespace {

struct ParamLayout {
	SarimaOrder order;
	bool intercept = false;
	int size() const { return order.coefficient_count() + (intercept ? 1 : 0) + 1; }
};

std::vector<double> block_from_pacf_space(const Eigen::VectorXd &z, int offset, int count, bool negate) {
	std::vector<double> pacf(static_cast<std::size_t>(count));
	for (int i = 0; i < count; ++i) {
		pacf[static_cast<std::size_t>(i)] = std::tanh(z(offset + i));
	}
	std::vector<double> coeffs = pacf_to_ar(pacf);
	if (negate) {
		for (double &c : coeffs) c = -c;
	}
	return coeffs;
}

SarimaParams decode(const ParamLayout &layout, const Eigen::VectorXd &z, double sigma2_floor) {
	const SarimaOrder &o = layout.order;
	SarimaParams params;
	int at = 0;
	params.phi = block_from_pacf_space(z, at, o.p, false);
	at += o.p;
	params.theta = block_from_pacf_space(z, at, o.q, true);
	at += o.q;
	params.sphi = block_from_pacf_space(z, at, o.P, false);
	at += o.P;
	params.stheta = block_from_pacf_space(z, at, o.Q, true);
	at += o.Q;
	double mean = 0.0;
	if (layout.intercept) {
		mean = z(at);
		at += 1;
	}
	params.sigma2 = std::max(std::exp(z(at)), sigma2_floor);

	// The optimizer works with the process mean; convert to the recurrence
	// intercept mu = mean * phi(1) * sphi(1).
	double phi1 = 1.0;
	for (double v : params.phi) phi1 -= v;
	double sphi1 = 1.0;
	for (double v : params.sphi) sphi1 -= v;
	params.mu = mean * phi1 * sphi1;
	return params;
}

}  // namespace

double log_likelihood(const SarimaOrder &order, const SarimaParams &params, const QuarterlySeries &diffed) {
	const StateSpaceSystem sys = state_space(order, params);
	return kalman_loglik(sys, diffed.values);
}

FittedModel fit(const QuarterlySeries &series, const SarimaOrder &order, const FitConfig &config) {
	order.validate();
	if (series.scale == Scale::kLevel) {
		throw std::invalid_argument("fit expects a log-scale series; apply log_transform first");
	}

	const DifferenceSpec spec{order.d, order.D, order.s};
	const QuarterlySeries diffed = difference(series, spec);
	const int n_eff = static_cast<int>(diffed.size());

	ParamLayout layout;
	layout.order = order;
	layout.intercept = config.intercept_override.value_or(order.has_intercept());
	const int k = layout.size();
	if (n_eff < k + 5) {
		throw std::invalid_argument("insufficient data for order " + to_string(order) + ": " +
		                            std::to_string(n_eff) + " differenced points for " + std::to_string(k) +
		                            " parameters");
	}

	const double data_mean = mean(diffed.values);
	double data_var = population_variance(diffed.values);
	if (!(data_var > 0.0)) data_var = config.sigma2_floor;

	// Hot loop: decode and expand into preallocated buffers; the only
	// allocations per evaluation happen inside Eigen's LU pivoting.
	detail::ArmaLikelihood workspace;
	ReducedForm rf;
	rf.ar.resize(static_cast<std::size_t>(order.p + order.P * order.s));
	rf.ma.resize(static_cast<std::size_t>(order.q + order.Q * order.s));
	std::vector<double> phi(static_cast<std::size_t>(order.p));
	std::vector<double> theta(static_cast<std::size_t>(order.q));
	std::vector<double> sphi(static_cast<std::size_t>(order.P));
	std::vector<double> stheta(static_cast<std::size_t>(order.Q));
	std::vector<double> work(static_cast<std::size_t>(std::max({order.p, order.q, order.P, order.Q})));

	auto decode_block = [&](const Eigen::VectorXd &z, int offset, std::vector<double> &out, bool negate) {
		for (std::size_t i = 0; i < out.size(); ++i) {
			const double r = std::tanh(z(offset + static_cast<int>(i)));
			if (!(std::abs(r) < 1.0)) throw std::domain_error("saturated coefficient");
			out[i] = r;
		}
		// Durbin-Levinson, in place
		for (std::size_t j = 1; j < out.size(); ++j) {
			const double r = out[j];
			for (std::size_t k = 0; k < j; ++k) work[k] = out[k] - r * out[j - k - 1];
			for (std::size_t k = 0; k < j; ++k) out[k] = work[k];
		}
		if (negate) {
			for (double &v : out) v = -v;
		}
	};

	auto objective = [&](const Eigen::VectorXd &z) -> double {
		try {
			decode_block(z, 0, phi, false);
			decode_block(z, order.p, theta, true);
			decode_block(z, order.p + order.q, sphi, false);
			decode_block(z, order.p + order.q + order.P, stheta, true);
			const double process_mean = layout.intercept ? z(order.coefficient_count()) : 0.0;
			const double sigma2 = std::max(std::exp(z(layout.size() - 1)), config.sigma2_floor);

			std::fill(rf.ar.begin(), rf.ar.end(), 0.0);
			for (int j = 1; j <= order.p; ++j) rf.ar[static_cast<std::size_t>(j - 1)] += phi[static_cast<std::size_t>(j - 1)];
			for (int J = 1; J <= order.P; ++J) {
				rf.ar[static_cast<std::size_t>(J * order.s - 1)] += sphi[static_cast<std::size_t>(J - 1)];
				for (int j = 1; j <= order.p; ++j) {
					rf.ar[static_cast<std::size_t>(J * order.s + j - 1)] -=
					    phi[static_cast<std::size_t>(j - 1)] * sphi[static_cast<std::size_t>(J - 1)];
				}
			}
			std::fill(rf.ma.begin(), rf.ma.end(), 0.0);
			for (int j = 1; j <= order.q; ++j) rf.ma[static_cast<std::size_t>(j - 1)] += theta[static_cast<std::size_t>(j - 1)];
			for (int J = 1; J <= order.Q; ++J) {
				rf.ma[static_cast<std::size_t>(J * order.s - 1)] += stheta[static_cast<std::size_t>(J - 1)];
				for (int j = 1; j <= order.q; ++j) {
					rf.ma[static_cast<std::size_t>(J * order.s + j - 1)] +=
					    theta[static_cast<std::size_t>(j - 1)] * stheta[static_cast<std::size_t>(J - 1)];
				}
			}

			workspace.filter(rf, process_mean, diffed.values);
			return -workspace.loglik(sigma2);
		} catch (const std::domain_error &) {
			return std::numeric_limits<double>::infinity();
		}
	};

	const int n_coeff = order.coefficient_count();
	auto make_start = [&](double ar_fill, double ma_fill) {
		Eigen::VectorXd z = Eigen::VectorXd::Zero(layout.size());
		int at = 0;
		for (int i = 0; i < order.p; ++i) z(at++) = ar_fill;
		for (int i = 0; i < order.q; ++i) z(at++) = ma_fill;
		for (int i = 0; i < order.P; ++i) z(at++) = ar_fill;
		for (int i = 0; i < order.Q; ++i) z(at++) = ma_fill;
		if (layout.intercept) z(at++) = data_mean;
		z(at) = std::log(data_var);
		return z;
	};

	const double eps = config.restart_perturbation;
	std::vector<Eigen::VectorXd> starts;
	starts.push_back(make_start(0.0, 0.0));
	if (n_coeff > 0) {
		starts.push_back(make_start(eps, eps));
		starts.push_back(make_start(-eps, -eps));
		starts.push_back(make_start(eps, -eps));
	}
	const int max_starts = std::min<int>(1 + std::max(0, config.max_restarts), static_cast<int>(starts.size()));

	OptimResult best;
	best.value = std::numeric_limits<double>::infinity();
	bool have_converged = false;
	int iterations_total = 0;
	for (int si = 0; si < max_starts; ++si) {
		OptimResult attempt = minimize_bfgs(objective, starts[static_cast<std::size_t>(si)], config.optimizer);
		iterations_total += attempt.iterations;
		const bool better = attempt.converged
		                        ? (!have_converged || attempt.value < best.value)
		                        : (!have_converged && attempt.value < best.value);
		if (better) {
			best = std::move(attempt);
			have_converged = best.converged;
		}
		if (have_converged) break;
	}

	FittedModel model;
	model.order = order;
	model.intercept = layout.intercept;
	model.params = decode(layout, best.x, config.sigma2_floor);
	model.n_used = n_eff;
	model.converged = have_converged && std::isfinite(best.value);
	model.iterations = iterations_total;
	model.loglik = -best.value;
	model.aic = 2.0 * k - 2.0 * model.loglik;

	// Degenerate data (e.g. all-zero differences) drives sigma2 to the floor;
	// flag such fits so selection can skip them.
	if (model.params.sigma2 <= config.sigma2_floor) {
		model.converged = false;
	}

	try {
		const StateSpaceSystem sys = state_space(order, model.params);
		const FilterResult filt = kalman_filter(sys, diffed.values);
		model.residuals.resize(filt.prediction_errors.size());
		for (std::size_t i = 0; i < filt.prediction_errors.size(); ++i) {
			model.residuals[i] = filt.prediction_errors[i] / std::sqrt(filt.prediction_variances[i]);
		}
	} catch (const std::domain_error &) {
		model.converged = false;
		model.residuals.assign(static_cast<std::size_t>(n_eff), 0.0);
	}
	return model;
}

}  // namespace sarimpact
