// Internal fast path for the exact ARMA likelihood used inside the
// optimizer. Mathematically identical to state_space() + kalman_filter(),
// but tuned for repeated evaluation:
//
//  - The stationary covariance P solves P = T P T' + R R'. With T companion
//    by its first column, the recursion telescopes along diagonals, which
//    expresses every P(i,j) through the first-column entries C_k = P(k,0)
//    alone; only an m x m system remains instead of m(m+1)/2 unknowns.
//  - Every filter update is O(m^2) through the companion structure.
//  - The filter runs with unit innovation variance; the likelihood for any
//    sigma2 follows in closed form. Prediction variances and gains depend
//    only on the coefficients, so probes that move just the mean or sigma2
//    (half the finite-difference gradient) reuse the cached covariance
//    sequence and skip the expensive pass.

#ifndef SARIMPACT_ARMA_LIKELIHOOD_HPP
#define SARIMPACT_ARMA_LIKELIHOOD_HPP

#include <Eigen/Dense>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "sarimpact/sarima.hpp"

namespace sarimpact::detail {

class ArmaLikelihood {
public:
	void filter(const ReducedForm &rf, double mean, std::span<const double> data) {
		const int p = static_cast<int>(rf.ar.size());
		const int q = static_cast<int>(rf.ma.size());
		const int m = std::max(p, q + 1);
		const bool dims_changed = resize(m, static_cast<int>(data.size()));

		bool coeffs_changed = dims_changed || !cache_valid_;
		if (!coeffs_changed) {
			for (int i = 0; i < m && !coeffs_changed; ++i) {
				const double phi_i = i < p ? rf.ar[static_cast<std::size_t>(i)] : 0.0;
				const double r_i = i == 0 ? 1.0 : (i - 1 < q ? rf.ma[static_cast<std::size_t>(i - 1)] : 0.0);
				coeffs_changed = phi_[static_cast<std::size_t>(i)] != phi_i || r_[static_cast<std::size_t>(i)] != r_i;
			}
		}
		if (!coeffs_changed && mean == mean_) {
			return;  // identical up to sigma2; sums already valid
		}

		if (coeffs_changed) {
			cache_valid_ = false;
			for (int i = 0; i < m; ++i) {
				phi_[static_cast<std::size_t>(i)] = i < p ? rf.ar[static_cast<std::size_t>(i)] : 0.0;
				r_[static_cast<std::size_t>(i)] = i == 0 ? 1.0 : (i - 1 < q ? rf.ma[static_cast<std::size_t>(i - 1)] : 0.0);
			}
			solve_stationary_cov();
			full_pass(mean, data);
			cache_valid_ = true;
		} else {
			state_pass(mean, data);
		}
		mean_ = mean;
	}

	double loglik(double sigma2) const {
		return -0.5 * (n_ * std::log(2.0 * M_PI) + sum_log_f_ + n_ * std::log(sigma2) + sum_sq_ / sigma2);
	}

private:
	bool resize(int m, int n) {
		if (m == m_ && n == n_) return false;
		m_ = m;
		n_ = n;
		phi_.assign(static_cast<std::size_t>(m), 0.0);
		r_.assign(static_cast<std::size_t>(m), 0.0);
		a_.assign(static_cast<std::size_t>(m), 0.0);
		p_.resize(m, m);
		tp_.resize(m, m);
		sys_.resize(m, m);
		rhs_.resize(m);
		f_seq_.assign(static_cast<std::size_t>(n), 0.0);
		gain_seq_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(m), 0.0);
		return true;
	}

	// P(i,j) = phi_{i+1} phi_{j+1} P(0,0) + phi_{i+1} C_{j+1} + phi_{j+1} C_{i+1}
	//          + P(i+1,j+1) + r_i r_j,   C_k = P(k,0), entries beyond m vanish.
	// Telescoping down the diagonal leaves equations in C alone:
	//   C_i = sum_t [ phi_{i+1+t} phi_{1+t} C_0 + phi_{i+1+t} C_{1+t}
	//                 + phi_{1+t} C_{i+1+t} + r_{i+t} r_t ]
	void solve_stationary_cov() {
		const int m = m_;
		auto phi_at = [&](int k) { return k >= 1 && k <= m ? phi_[static_cast<std::size_t>(k - 1)] : 0.0; };

		sys_.setZero();
		rhs_.setZero();
		for (int i = 0; i < m; ++i) {
			sys_(i, i) += 1.0;
			double g_coeff = 0.0;
			for (int t = 0; t + i < m; ++t) {
				g_coeff += phi_at(i + 1 + t) * phi_at(1 + t);
				rhs_(i) += r_[static_cast<std::size_t>(i + t)] * r_[static_cast<std::size_t>(t)];
				const int k1 = 1 + t;
				if (k1 < m) sys_(i, k1) -= phi_at(i + 1 + t);
				const int k2 = i + 1 + t;
				if (k2 < m) sys_(i, k2) -= phi_at(1 + t);
			}
			sys_(i, 0) -= g_coeff;
		}
		Eigen::VectorXd c = sys_.partialPivLu().solve(rhs_);
		if (!c.allFinite()) {
			throw std::domain_error("stationary covariance solve failed");
		}

		// reconstruct P from the bottom-right corner downward-right to top-left
		auto c_at = [&](int k) { return k >= 0 && k < m ? c(k) : 0.0; };
		for (int i = m - 1; i >= 0; --i) {
			for (int j = i; j >= 0; --j) {
				const double next = (i + 1 < m && j + 1 < m) ? p_(i + 1, j + 1) : 0.0;
				const double value = phi_at(i + 1) * phi_at(j + 1) * c(0) + phi_at(i + 1) * c_at(j + 1) +
				                     phi_at(j + 1) * c_at(i + 1) + next +
				                     r_[static_cast<std::size_t>(i)] * r_[static_cast<std::size_t>(j)];
				p_(i, j) = value;
				p_(j, i) = value;
			}
		}
	}

	// Full covariance-and-state pass; records f_t and the gains so later
	// mean-only probes can rerun just the state recursion.
	void full_pass(double mean, std::span<const double> data) {
		const int m = m_;
		std::fill(a_.begin(), a_.end(), 0.0);
		sum_log_f_ = 0.0;
		sum_sq_ = 0.0;
		for (int t = 0; t < n_; ++t) {
			const double f = p_(0, 0);
			if (!(f > 1e-280) || !std::isfinite(f)) {
				throw std::domain_error("prediction variance underflow in Kalman filter");
			}
			const double v = data[static_cast<std::size_t>(t)] - mean - a_[0];
			sum_log_f_ += std::log(f);
			sum_sq_ += v * v / f;
			f_seq_[static_cast<std::size_t>(t)] = f;

			double *gain = &gain_seq_[static_cast<std::size_t>(t) * static_cast<std::size_t>(m)];
			for (int i = 0; i < m; ++i) {
				const double next = i + 1 < m ? p_(i + 1, 0) : 0.0;
				gain[i] = (phi_[static_cast<std::size_t>(i)] * f + next) / f;
			}
			const double a0 = a_[0];
			for (int i = 0; i < m; ++i) {
				const double next = i + 1 < m ? a_[static_cast<std::size_t>(i + 1)] : 0.0;
				a_[static_cast<std::size_t>(i)] = phi_[static_cast<std::size_t>(i)] * a0 + next + gain[i] * v;
			}
			// P <- T P T' - f gain gain' + R R'
			for (int i = 0; i < m; ++i) {
				const double p0 = p_(0, i);
				for (int j = 0; j < m; ++j) {
					const double next = j + 1 < m ? p_(j + 1, i) : 0.0;
					tp_(j, i) = phi_[static_cast<std::size_t>(j)] * p0 + next;
				}
			}
			for (int i = 0; i < m; ++i) {
				const double t0 = tp_(i, 0);
				for (int j = 0; j <= i; ++j) {
					const double next = j + 1 < m ? tp_(i, j + 1) : 0.0;
					const double value = phi_[static_cast<std::size_t>(j)] * t0 + next - f * gain[i] * gain[j] +
					                     r_[static_cast<std::size_t>(i)] * r_[static_cast<std::size_t>(j)];
					p_(i, j) = value;
					p_(j, i) = value;
				}
			}
		}
	}

	// Same innovations recursion with cached gains and variances.
	void state_pass(double mean, std::span<const double> data) {
		const int m = m_;
		std::fill(a_.begin(), a_.end(), 0.0);
		sum_log_f_ = 0.0;
		sum_sq_ = 0.0;
		for (int t = 0; t < n_; ++t) {
			const double f = f_seq_[static_cast<std::size_t>(t)];
			const double v = data[static_cast<std::size_t>(t)] - mean - a_[0];
			sum_log_f_ += std::log(f);
			sum_sq_ += v * v / f;
			const double *gain = &gain_seq_[static_cast<std::size_t>(t) * static_cast<std::size_t>(m)];
			const double a0 = a_[0];
			for (int i = 0; i < m; ++i) {
				const double next = i + 1 < m ? a_[static_cast<std::size_t>(i + 1)] : 0.0;
				a_[static_cast<std::size_t>(i)] = phi_[static_cast<std::size_t>(i)] * a0 + next + gain[i] * v;
			}
		}
	}

	int m_ = 0;
	int n_ = 0;
	bool cache_valid_ = false;
	double mean_ = 0.0;
	double sum_log_f_ = 0.0;
	double sum_sq_ = 0.0;
	std::vector<double> phi_;
	std::vector<double> r_;
	std::vector<double> a_;
	std::vector<double> f_seq_;
	std::vector<double> gain_seq_;
	Eigen::MatrixXd p_;
	Eigen::MatrixXd tp_;
	Eigen::MatrixXd sys_;
	Eigen::VectorXd rhs_;
};

}  // namespace sarimpact::detail

#endif
