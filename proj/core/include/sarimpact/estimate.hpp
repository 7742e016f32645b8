#ifndef SARIMPACT_ESTIMATE_HPP
#define SARIMPACT_ESTIMATE_HPP

#include <optional>
#include <vector>

#include "sarimpact/optim.hpp"
#include "sarimpact/sarima.hpp"
#include "sarimpact/series.hpp"

namespace sarimpact {

struct FitConfig {
	OptimOptions optimizer;
	/// Restarts are taken only when the previous start fails to converge.
	int max_restarts = 3;
	double restart_perturbation = 0.1;
	double sigma2_floor = 1e-12;
	/// Default rule: intercept iff d + D == 0.
	std::optional<bool> intercept_override;
};

struct FittedModel {
	SarimaOrder order;
	SarimaParams params;
	bool intercept = false;
	double loglik = 0.0;
	double aic = 0.0;
	/// One-step standardized prediction errors, one per differenced
	/// observation.
	std::vector<double> residuals;
	int n_used = 0;
	bool converged = false;
	int iterations = 0;

	int parameter_count() const { return order.coefficient_count() + (intercept ? 1 : 0) + 1; }
};

/// Exact Gaussian log-likelihood of an already-differenced series under
/// (order, params), by forward filtering with stationary initialization.
double log_likelihood(const SarimaOrder &order, const SarimaParams &params, const QuarterlySeries &diffed);

/// Maximum-likelihood fit on a log-scale level series. Differencing per the
/// order is applied internally; coefficients are optimized through the
/// partial-autocorrelation transform so every iterate is stationary and
/// invertible. Optimizer failure is reported through `converged`, not an
/// exception, so grid search can skip the candidate.
FittedModel fit(const QuarterlySeries &series, const SarimaOrder &order, const FitConfig &config = {});

}  // namespace sarimpact

#endif
