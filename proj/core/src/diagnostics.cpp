#include "sarimpact/diagnostics.hpp"

#include <Eigen/Dense>
#include <stdexcept>

#include "sarimpact/stats.hpp"

namespace sarimpact {

TestResult arch_lm(std::span<const double> residuals, int lags) {
	const int n = static_cast<int>(residuals.size());
	if (lags < 1) {
		throw std::invalid_argument("arch_lm needs lags >= 1");
	}
	if (n <= 2 * lags + 1) {
		throw std::invalid_argument("arch_lm needs more than 2*lags + 1 residuals");
	}

	std::vector<double> sq(residuals.size());
	for (std::size_t i = 0; i < residuals.size(); ++i) sq[i] = residuals[i] * residuals[i];

	const int rows = n - lags;
	Eigen::MatrixXd x(rows, lags + 1);
	Eigen::VectorXd y(rows);
	for (int t = 0; t < rows; ++t) {
		y(t) = sq[static_cast<std::size_t>(t + lags)];
		x(t, 0) = 1.0;
		for (int j = 1; j <= lags; ++j) {
			x(t, j) = sq[static_cast<std::size_t>(t + lags - j)];
		}
	}

	const double y_mean = y.mean();
	const double sst = (y.array() - y_mean).square().sum();
	TestResult result;
	result.lags = lags;
	result.df = lags;
	if (sst <= 0.0) {
		// no variation in squared residuals: nothing to explain
		result.statistic = 0.0;
		result.p_value = 1.0;
		return result;
	}

	const Eigen::VectorXd beta = (x.transpose() * x).ldlt().solve(x.transpose() * y);
	const double ssr = (y - x * beta).squaredNorm();
	double r2 = 1.0 - ssr / sst;
	if (r2 < 0.0) r2 = 0.0;
	if (r2 > 1.0) r2 = 1.0;

	result.statistic = static_cast<double>(rows) * r2;
	result.p_value = chi_square_upper_tail(result.statistic, static_cast<double>(lags));
	return result;
}

TestResult ljung_box(std::span<const double> residuals, int lags, int fit_df) {
	const int n = static_cast<int>(residuals.size());
	if (lags < 1) {
		throw std::invalid_argument("ljung_box needs lags >= 1");
	}
	if (n <= lags) {
		throw std::invalid_argument("ljung_box needs more residuals than lags");
	}
	if (fit_df < 0 || fit_df >= lags) {
		throw std::invalid_argument("ljung_box fit_df must be in [0, lags)");
	}

	const std::vector<double> rho = sample_autocorrelations(residuals, lags);
	double q = 0.0;
	for (int j = 1; j <= lags; ++j) {
		q += rho[static_cast<std::size_t>(j - 1)] * rho[static_cast<std::size_t>(j - 1)] /
		     static_cast<double>(n - j);
	}
	q *= static_cast<double>(n) * (static_cast<double>(n) + 2.0);

	TestResult result;
	result.statistic = q;
	result.lags = lags;
	result.df = lags - fit_df;
	result.p_value = chi_square_upper_tail(q, static_cast<double>(result.df));
	return result;
}

}  // namespace sarimpact
