#ifndef SARIMPACT_TEST_HELPERS_HPP
#define SARIMPACT_TEST_HELPERS_HPP

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "sarimpact/sarima.hpp"
#include "sarimpact/series.hpp"
#include "sarimpact/simulate.hpp"

namespace test_oracle {

// Naive polynomial product oracle. Inputs and output use dense coefficient
// vectors indexed by power of L, a[0] being the constant term.
inline std::vector<double> poly_multiply(const std::vector<double> &a, const std::vector<double> &b) {
	std::vector<double> out(a.size() + b.size() - 1, 0.0);
	for (std::size_t i = 0; i < a.size(); ++i) {
		for (std::size_t j = 0; j < b.size(); ++j) {
			out[i + j] += a[i] * b[j];
		}
	}
	return out;
}

// ARMA autocovariances by brute-force psi-weight truncation, independent of
// the state-space route: gamma_k = sigma2 * sum_j psi_j psi_{j+k}.
inline std::vector<double> arma_autocovariances(const sarimpact::SarimaOrder &order,
                                                const sarimpact::SarimaParams &params, int max_lag,
                                                int truncation = 4000) {
	sarimpact::SarimaOrder stationary = order;
	stationary.d = 0;
	stationary.D = 0;
	const std::vector<double> psi = sarimpact::psi_weights(stationary, params, truncation + max_lag);
	std::vector<double> gamma(static_cast<std::size_t>(max_lag) + 1, 0.0);
	for (int k = 0; k <= max_lag; ++k) {
		double sum = 0.0;
		for (int j = 0; j < truncation; ++j) {
			sum += psi[static_cast<std::size_t>(j)] * psi[static_cast<std::size_t>(j + k)];
		}
		gamma[static_cast<std::size_t>(k)] = params.sigma2 * sum;
	}
	return gamma;
}

// Dense multivariate-normal log-density with a Toeplitz autocovariance
// matrix; the independent oracle for the filter likelihood.
inline double dense_mvn_loglik(const std::vector<double> &gamma, const std::vector<double> &data, double mean) {
	const int n = static_cast<int>(data.size());
	Eigen::MatrixXd sigma(n, n);
	for (int i = 0; i < n; ++i) {
		for (int j = 0; j < n; ++j) {
			sigma(i, j) = gamma[static_cast<std::size_t>(std::abs(i - j))];
		}
	}
	Eigen::VectorXd x(n);
	for (int i = 0; i < n; ++i) x(i) = data[static_cast<std::size_t>(i)] - mean;
	const Eigen::LLT<Eigen::MatrixXd> llt(sigma);
	const Eigen::MatrixXd l = llt.matrixL();
	double logdet = 0.0;
	for (int i = 0; i < n; ++i) logdet += 2.0 * std::log(l(i, i));
	const double quad = x.dot(llt.solve(x));
	return -0.5 * (n * std::log(2.0 * M_PI) + logdet + quad);
}

// Uniformly scattered coefficients that stay well inside the stationary
// region: pacf entries bounded away from +-1.
inline std::vector<double> random_stable_block(sarimpact::NormalSampler &rng, int count, double bound = 0.6) {
	std::vector<double> pacf(static_cast<std::size_t>(count));
	for (double &r : pacf) {
		r = bound * std::tanh(rng.next());
	}
	return sarimpact::pacf_to_ar(pacf);
}

}  // namespace test_oracle

#endif
