#ifndef SARIMPACT_SARIMA_HPP
#define SARIMPACT_SARIMA_HPP

#include <span>
#include <string>
#include <vector>

namespace sarimpact {

/// Multiplicative seasonal model orders (p,d,q)(P,D,Q)_s.
struct SarimaOrder {
	int p = 0;
	int d = 0;
	int q = 0;
	int P = 0;
	int D = 0;
	int Q = 0;
	int s = 4;

	void validate() const;

	/// Intercept is estimated only when no differencing absorbs the mean.
	bool has_intercept() const { return d + D == 0; }

	/// Estimated-parameter count entering the AIC penalty: coefficients,
	/// optional intercept, innovation variance.
	int parameter_count() const { return p + q + P + Q + (has_intercept() ? 1 : 0) + 1; }

	int coefficient_count() const { return p + q + P + Q; }
	int differencing_lag() const { return d + D * s; }
};

/// Parses "(p,d,q)(P,D,Q)s" or "(p,d,q)x(P,D,Q)s"; the seasonal group is
/// optional and defaults to (0,0,0) with s = 4.
SarimaOrder parse_order(std::string_view text);
std::string to_string(const SarimaOrder &order);

/// Coefficients of a fitted model. Conventions:
///   AR blocks follow the recurrence sign, x_t = phi_1 x_{t-1} + ... + eps_t,
///   i.e. polynomial 1 - phi_1 L - ... ; MA blocks follow the plus sign,
///   eps_t + theta_1 eps_{t-1} + ..., i.e. polynomial 1 + theta_1 L + ... .
///   mu is the recurrence intercept A(t) = mu.
struct SarimaParams {
	std::vector<double> phi;     // p nonseasonal AR
	std::vector<double> theta;   // q nonseasonal MA
	std::vector<double> sphi;    // P seasonal AR
	std::vector<double> stheta;  // Q seasonal MA
	double mu = 0.0;
	double sigma2 = 1.0;

	void validate_dimensions(const SarimaOrder &order) const;

	/// Stationary-mean of the ARMA on the differenced scale implied by mu.
	double process_mean() const;
};

/// Single-polynomial expansion of the multiplicative form. `ar` holds the
/// recurrence coefficients a_1..a_{p+P*s} with x_t = sum a_j x_{t-j} + ...;
/// `ma` holds m_1..m_{q+Q*s} with eps_t + sum m_j eps_{t-j}.
struct ReducedForm {
	std::vector<double> ar;
	std::vector<double> ma;
};

ReducedForm expand_polynomials(const SarimaOrder &order, const SarimaParams &params);

/// True when every root of 1 - sum a_j z^j lies strictly outside the unit
/// circle. Checked through the Durbin-Levinson map: the polynomial is stable
/// iff all partial autocorrelations have modulus < 1.
bool is_stable_polynomial(std::span<const double> recurrence_coeffs);

bool is_stationary(const SarimaOrder &order, const SarimaParams &params);
bool is_invertible(const SarimaOrder &order, const SarimaParams &params);

/// Durbin-Levinson map from partial autocorrelations in (-1,1) to the
/// recurrence coefficients of a stable AR polynomial; bijective onto the
/// stationary region.
std::vector<double> pacf_to_ar(std::span<const double> pacf);

/// Inverse of pacf_to_ar. Throws std::domain_error when the coefficients are
/// not stable.
std::vector<double> ar_to_pacf(std::span<const double> ar);

/// psi-weights of the full integrated process
///   theta(L) theta~(L^s) / [ phi(L) phi~(L^s) (1-L)^d (1-L^s)^D ],
/// i.e. psi_0..psi_{count-1} with psi_0 = 1. The h-step forecast error
/// variance is sigma2 * sum_{j<h} psi_j^2.
std::vector<double> psi_weights(const SarimaOrder &order, const SarimaParams &params, int count);

}  // namespace sarimpact

#endif
