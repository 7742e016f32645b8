#include "sarimpact/optim.hpp"

#include <cmath>
#include <limits>

namespace sarimpact {

namespace {

Eigen::VectorXd central_gradient(const std::function<double(const Eigen::VectorXd &)> &f, const Eigen::VectorXd &x,
                                 double step_rel, int &evaluations) {
	Eigen::VectorXd g(x.size());
	Eigen::VectorXd probe = x;
	for (int i = 0; i < x.size(); ++i) {
		const double h = step_rel * std::max(1.0, std::abs(x(i)));
		probe(i) = x(i) + h;
		const double fp = f(probe);
		probe(i) = x(i) - h;
		const double fm = f(probe);
		probe(i) = x(i);
		evaluations += 2;
		g(i) = (fp - fm) / (2.0 * h);
	}
	return g;
}

}  // namespace

OptimResult minimize_bfgs(const std::function<double(const Eigen::VectorXd &)> &objective, Eigen::VectorXd start,
                          const OptimOptions &options) {
	const int n = static_cast<int>(start.size());
	OptimResult result;
	result.x = std::move(start);
	result.value = objective(result.x);
	result.evaluations = 1;
	if (n == 0) {
		result.converged = true;
		return result;
	}

	Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);
	Eigen::VectorXd grad = central_gradient(objective, result.x, options.gradient_step_rel, result.evaluations);

	constexpr double kArmijo = 1e-4;
	bool scaled_h_inv = false;
	for (int iter = 0; iter < options.max_iterations; ++iter) {
		result.iterations = iter + 1;
		if (!grad.allFinite()) {
			break;
		}
		if (grad.lpNorm<Eigen::Infinity>() < options.gradient_tolerance) {
			result.converged = true;
			break;
		}

		Eigen::VectorXd direction = -(h_inv * grad);
		double slope = grad.dot(direction);
		if (!(slope < 0.0)) {
			h_inv.setIdentity();
			direction = -grad;
			slope = grad.dot(direction);
		}
		const double dir_norm = direction.lpNorm<Eigen::Infinity>();
		if (dir_norm > options.max_step) {
			direction *= options.max_step / dir_norm;
			slope = grad.dot(direction);
		}

		double alpha = 1.0;
		double new_value = std::numeric_limits<double>::infinity();
		Eigen::VectorXd candidate;
		bool accepted = false;
		for (int ls = 0; ls < 60; ++ls) {
			candidate = result.x + alpha * direction;
			new_value = objective(candidate);
			++result.evaluations;
			if (std::isfinite(new_value) && new_value <= result.value + kArmijo * alpha * slope) {
				accepted = true;
				break;
			}
			alpha *= 0.5;
		}
		if (!accepted) {
			// No descent along the quasi-Newton direction at machine-step
			// sizes; treat as converged only if the gradient is honest noise.
			result.converged = grad.lpNorm<Eigen::Infinity>() < 1e2 * options.gradient_tolerance;
			break;
		}

		Eigen::VectorXd new_grad =
		    central_gradient(objective, candidate, options.gradient_step_rel, result.evaluations);
		const Eigen::VectorXd step = candidate - result.x;
		const Eigen::VectorXd grad_delta = new_grad - grad;
		const double curvature = grad_delta.dot(step);
		if (curvature > 1e-12 * step.norm() * grad_delta.norm()) {
			if (!scaled_h_inv) {
				// size the initial inverse Hessian from the first observed
				// curvature (Nocedal & Wright, eq. 6.20)
				h_inv *= curvature / grad_delta.squaredNorm();
				scaled_h_inv = true;
			}
			const double rho = 1.0 / curvature;
			const Eigen::MatrixXd outer = step * grad_delta.transpose();
			h_inv = (Eigen::MatrixXd::Identity(n, n) - rho * outer) * h_inv *
			            (Eigen::MatrixXd::Identity(n, n) - rho * outer.transpose()) +
			        rho * step * step.transpose();
		}

		const double change = std::abs(result.value - new_value);
		result.x = std::move(candidate);
		result.value = new_value;
		grad = std::move(new_grad);

		if (change < options.relative_change_tolerance * (std::abs(result.value) + 1.0)) {
			result.converged = true;
			break;
		}
	}
	return result;
}

}  // namespace sarimpact
