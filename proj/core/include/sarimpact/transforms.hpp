#ifndef SARIMPACT_TRANSFORMS_HPP
#define SARIMPACT_TRANSFORMS_HPP

#include <span>
#include <vector>

#include "sarimpact/series.hpp"

namespace sarimpact {

/// Optional additive offset applied before the log and removed after the
/// back-transform. Zero by default: nonpositive values are rejected.
struct LogOptions {
	double offset = 0.0;
};

/// Element-wise natural log of a level series.
QuarterlySeries log_transform(const QuarterlySeries &series, const LogOptions &opts = {});

/// Inverse of log_transform.
QuarterlySeries exp_transform(const QuarterlySeries &series, const LogOptions &opts = {});

/// Differencing orders: (1-L)^d (1-L^s)^D.
struct DifferenceSpec {
	int d = 0;
	int D = 0;
	int s = 4;

	int total_lag() const { return d + D * s; }
	void validate() const;
};

/// Coefficients c_0..c_r of (1-L)^d (1-L^s)^D with c_0 = 1, r = d + D*s.
std::vector<double> difference_polynomial(const DifferenceSpec &spec);

/// Applies (1-L)^d (1-L^s)^D. Output length = input length - d - D*s.
QuarterlySeries difference(const QuarterlySeries &series, const DifferenceSpec &spec);

/// Inverse of difference. `anchors` are the d + D*s leading values of the
/// original series, in original order:
///   integrate(difference(x, spec), x[0..d+D*s), spec) == x.
QuarterlySeries integrate(const QuarterlySeries &diffed, std::span<const double> anchors,
                          const DifferenceSpec &spec);

/// Extends an integrated series past its end: given the trailing d + D*s
/// values of the original series and future differenced values, returns the
/// implied future original values. Used to map differenced-scale forecasts
/// back to the log scale.
std::vector<double> integrate_continue(std::span<const double> tail, std::span<const double> future_diffs,
                                       const DifferenceSpec &spec);

/// r_t = 100 * (y_t - y_{t-lag}) / y_{t-lag} for t = lag..n-1, in percent.
std::vector<double> growth_rate(const QuarterlySeries &series, int lag);

}  // namespace sarimpact

#endif
