#ifndef SARIMPACT_STATS_HPP
#define SARIMPACT_STATS_HPP

#include <span>
#include <vector>

namespace sarimpact {

/// Regularized upper incomplete gamma Q(a, x), a > 0, x >= 0.
/// Series expansion below the a+1 crossover, Lentz continued fraction above;
/// relative accuracy around 1e-14.
double regularized_gamma_q(double a, double x);

/// Upper-tail probability P[X > x] for X ~ chi-square(df).
double chi_square_upper_tail(double x, double df);

/// Standard normal quantile (Wichura's AS 241, double precision).
double normal_quantile(double p);

/// Standard normal CDF.
double normal_cdf(double x);

double mean(std::span<const double> xs);

/// Sample variance with divisor n - 1.
double sample_variance(std::span<const double> xs);

/// Population variance with divisor n.
double population_variance(std::span<const double> xs);

/// Sample autocorrelations rho_1..rho_max_lag (mean-adjusted, divisor-n
/// autocovariances normalized by the lag-0 value).
std::vector<double> sample_autocorrelations(std::span<const double> xs, int max_lag);

}  // namespace sarimpact

#endif
