#ifndef SARIMPACT_OPTIM_HPP
#define SARIMPACT_OPTIM_HPP

#include <Eigen/Dense>
#include <functional>

namespace sarimpact {

struct OptimOptions {
	double gradient_step_rel = 1e-6;        // central-difference step, relative
	double gradient_tolerance = 1e-6;       // infinity norm
	double relative_change_tolerance = 1e-10;
	int max_iterations = 500;
	/// Per-iteration cap on the step infinity-norm. Keeps bounded
	/// reparameterizations (tanh) away from saturation, where the gradient
	/// vanishes far from any optimum.
	double max_step = 1.0;
};

struct OptimResult {
	Eigen::VectorXd x;
	double value = 0.0;
	bool converged = false;
	int iterations = 0;
	int evaluations = 0;
};

/// Quasi-Newton (BFGS) minimizer with central finite-difference gradients
/// and Armijo backtracking. Fully deterministic: no randomness, no
/// time-dependent behavior. The objective may return a large finite value or
/// +inf to mark an infeasible point; the line search backs off.
OptimResult minimize_bfgs(const std::function<double(const Eigen::VectorXd &)> &objective, Eigen::VectorXd start,
                          const OptimOptions &options = {});

}  // namespace sarimpact

#endif
