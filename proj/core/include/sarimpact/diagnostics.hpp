#ifndef SARIMPACT_DIAGNOSTICS_HPP
#define SARIMPACT_DIAGNOSTICS_HPP

#include <span>

namespace sarimpact {

struct TestResult {
	double statistic = 0.0;
	double p_value = 1.0;
	int lags = 0;
	int df = 0;
};

/// Engle's LM test for autoregressive conditional heteroscedasticity:
/// n * R^2 from the regression of squared residuals on their first `lags`
/// lagged squares plus an intercept, against chi-square(lags), upper tail.
/// Constant squared residuals give statistic 0, p-value 1.
TestResult arch_lm(std::span<const double> residuals, int lags = 4);

/// Ljung-Box portmanteau test:
/// Q = n (n+2) sum_{j=1..lags} rho_j^2 / (n-j), chi-square upper tail.
/// `fit_df` subtracts estimated ARMA parameters from the degrees of freedom
/// (0 keeps df = lags).
TestResult ljung_box(std::span<const double> residuals, int lags = 8, int fit_df = 0);

}  // namespace sarimpact

#endif
