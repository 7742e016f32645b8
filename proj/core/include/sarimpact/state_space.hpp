#ifndef SARIMPACT_STATE_SPACE_HPP
#define SARIMPACT_STATE_SPACE_HPP

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "sarimpact/sarima.hpp"

namespace sarimpact {

/// Time-invariant linear Gaussian system for a stationary ARMA process in
/// Harvey's form: alpha_{t+1} = T alpha_t + R eta_t, x_t = alpha_t(0),
/// eta ~ N(0, sigma2). State dimension m = max(p*, q* + 1) where p*, q* are
/// the reduced-form polynomial degrees.
struct StateSpaceSystem {
	Eigen::MatrixXd transition;      // T, m x m
	Eigen::VectorXd innovation;      // R, m x 1
	Eigen::MatrixXd state_cov;       // stationary Var(alpha), m x m
	double sigma2 = 1.0;
	double mean = 0.0;               // observation mean added outside the filter

	int dim() const { return static_cast<int>(transition.rows()); }
};

/// Builds the system for the reduced form of (order, params). Throws
/// std::domain_error for non-stationary AR parameters.
StateSpaceSystem state_space(const SarimaOrder &order, const SarimaParams &params);

/// Solves P = T P T' + sigma2 R R' for the stationary state covariance.
Eigen::MatrixXd stationary_covariance(const Eigen::MatrixXd &transition, const Eigen::VectorXd &innovation,
                                      double sigma2);

struct FilterResult {
	double loglik = 0.0;
	std::vector<double> prediction_errors;      // v_t
	std::vector<double> prediction_variances;   // f_t
	Eigen::VectorXd final_state;                // E[alpha_{n+1} | data]
	Eigen::MatrixXd final_state_cov;
	bool degenerate = false;                    // prediction variance hit the floor
};

/// Exact Gaussian log-likelihood of `data` under the system, by forward
/// filtering from the stationary initial distribution. Standardized
/// residuals are v_t / sqrt(f_t).
FilterResult kalman_filter(const StateSpaceSystem &system, std::span<const double> data);

double kalman_loglik(const StateSpaceSystem &system, std::span<const double> data);

/// Theoretical autocovariances gamma_0..gamma_max_lag of the system's
/// observation process.
std::vector<double> autocovariances(const StateSpaceSystem &system, int max_lag);

}  // namespace sarimpact

#endif
