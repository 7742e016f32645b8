#include "sarimpact/state_space.hpp"

#include <cmath>
#include <stdexcept>

namespace sarimpact {

Eigen::MatrixXd stationary_covariance(const Eigen::MatrixXd &transition, const Eigen::VectorXd &innovation,
                                      double sigma2) {
	const int m = static_cast<int>(transition.rows());
	const Eigen::MatrixXd q = sigma2 * innovation * innovation.transpose();

	// vec(P) = (I - T (x) T)^{-1} vec(Q)
	Eigen::MatrixXd a = Eigen::MatrixXd::Identity(m * m, m * m);
	for (int i = 0; i < m; ++i) {
		for (int j = 0; j < m; ++j) {
			a.block(i * m, j * m, m, m) -= transition(i, j) * transition;
		}
	}
	Eigen::VectorXd vec_q(m * m);
	for (int j = 0; j < m; ++j) {
		vec_q.segment(j * m, m) = q.col(j);
	}
	Eigen::VectorXd vec_p = a.partialPivLu().solve(vec_q);
	Eigen::MatrixXd p(m, m);
	for (int j = 0; j < m; ++j) {
		p.col(j) = vec_p.segment(j * m, m);
	}
	return 0.5 * (p + p.transpose());
}

StateSpaceSystem state_space(const SarimaOrder &order, const SarimaParams &params) {
	order.validate();
	params.validate_dimensions(order);
	if (!is_stationary(order, params)) {
		throw std::domain_error("AR parameters are not stationary for order " + to_string(order));
	}

	const ReducedForm rf = expand_polynomials(order, params);
	const int p = static_cast<int>(rf.ar.size());
	const int q = static_cast<int>(rf.ma.size());
	const int m = std::max(p, q + 1);

	StateSpaceSystem sys;
	sys.transition = Eigen::MatrixXd::Zero(m, m);
	for (int i = 0; i < p; ++i) {
		sys.transition(i, 0) = rf.ar[static_cast<std::size_t>(i)];
	}
	for (int i = 0; i + 1 < m; ++i) {
		sys.transition(i, i + 1) = 1.0;
	}
	sys.innovation = Eigen::VectorXd::Zero(m);
	sys.innovation(0) = 1.0;
	for (int i = 0; i < q; ++i) {
		sys.innovation(i + 1) = rf.ma[static_cast<std::size_t>(i)];
	}
	sys.sigma2 = params.sigma2;
	sys.mean = params.process_mean();
	sys.state_cov = stationary_covariance(sys.transition, sys.innovation, sys.sigma2);
	return sys;
}

FilterResult kalman_filter(const StateSpaceSystem &system, std::span<const double> data) {
	const int m = system.dim();
	const double log_2pi = std::log(2.0 * M_PI);
	const Eigen::MatrixXd q = system.sigma2 * system.innovation * system.innovation.transpose();

	Eigen::VectorXd state = Eigen::VectorXd::Zero(m);
	Eigen::MatrixXd cov = system.state_cov;

	FilterResult result;
	result.prediction_errors.reserve(data.size());
	result.prediction_variances.reserve(data.size());

	double loglik = 0.0;
	for (double y : data) {
		const double v = (y - system.mean) - state(0);
		const double f = cov(0, 0);
		if (!(f > 1e-280) || !std::isfinite(f)) {
			throw std::domain_error("prediction variance underflow in Kalman filter");
		}
		loglik -= 0.5 * (log_2pi + std::log(f) + v * v / f);
		result.prediction_errors.push_back(v);
		result.prediction_variances.push_back(f);

		const Eigen::VectorXd gain = system.transition * cov.col(0) / f;
		state = system.transition * state + gain * v;
		cov = system.transition * cov * system.transition.transpose() - gain * f * gain.transpose() + q;
		cov = 0.5 * (cov + cov.transpose()).eval();
	}
	result.loglik = loglik;
	result.final_state = std::move(state);
	result.final_state_cov = std::move(cov);
	return result;
}

double kalman_loglik(const StateSpaceSystem &system, std::span<const double> data) {
	return kalman_filter(system, data).loglik;
}

std::vector<double> autocovariances(const StateSpaceSystem &system, int max_lag) {
	if (max_lag < 0) {
		throw std::invalid_argument("max_lag must be >= 0");
	}
	std::vector<double> gamma(static_cast<std::size_t>(max_lag) + 1);
	Eigen::MatrixXd cross = system.state_cov;  // Cov(alpha_{t+k}, alpha_t)
	gamma[0] = cross(0, 0);
	for (int k = 1; k <= max_lag; ++k) {
		cross = (system.transition * cross).eval();
		gamma[static_cast<std::size_t>(k)] = cross(0, 0);
	}
	return gamma;
}

}  // namespace sarimpact
