#include "sarimpact/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sarimpact {

namespace {

// Lower regularized gamma P(a, x) by series expansion, valid for x < a + 1.
double gamma_p_series(double a, double x) {
	const double lg = std::lgamma(a);
	double term = 1.0 / a;
	double sum = term;
	double ap = a;
	for (int n = 0; n < 1000; ++n) {
		ap += 1.0;
		term *= x / ap;
		sum += term;
		if (std::abs(term) < std::abs(sum) * 1e-16) break;
	}
	return sum * std::exp(-x + a * std::log(x) - lg);
}

// Upper regularized gamma Q(a, x) by modified Lentz continued fraction,
// valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
	const double lg = std::lgamma(a);
	const double tiny = 1e-300;
	double b = x + 1.0 - a;
	double c = 1.0 / tiny;
	double d = 1.0 / b;
	double h = d;
	for (int i = 1; i <= 1000; ++i) {
		const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
		b += 2.0;
		d = an * d + b;
		if (std::abs(d) < tiny) d = tiny;
		c = b + an / c;
		if (std::abs(c) < tiny) c = tiny;
		d = 1.0 / d;
		const double delta = d * c;
		h *= delta;
		if (std::abs(delta - 1.0) < 1e-16) break;
	}
	return std::exp(-x + a * std::log(x) - lg) * h;
}

}  // namespace

double regularized_gamma_q(double a, double x) {
	if (!(a > 0.0) || x < 0.0 || !std::isfinite(a) || !std::isfinite(x)) {
		throw std::domain_error("regularized_gamma_q requires a > 0 and x >= 0");
	}
	if (x == 0.0) return 1.0;
	if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
	return gamma_q_cf(a, x);
}

double chi_square_upper_tail(double x, double df) {
	if (!(df > 0.0)) {
		throw std::domain_error("chi_square_upper_tail requires df > 0");
	}
	if (x <= 0.0) return 1.0;
	return regularized_gamma_q(df / 2.0, x / 2.0);
}

double normal_quantile(double p) {
	if (!(p > 0.0 && p < 1.0)) {
		throw std::domain_error("normal_quantile requires p in (0, 1)");
	}
	// Wichura (1988), algorithm AS 241, PPND16.
	const double q = p - 0.5;
	if (std::abs(q) <= 0.425) {
		const double r = 0.180625 - q * q;
		return q *
		       (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r + 6.7265770927008700853e+4) * r +
		             4.5921953931549871457e+4) *
		                r +
		            1.3731693765509461125e+4) *
		               r +
		           1.9715909503065514427e+3) *
		              r +
		          1.3314166789178437745e+2) *
		             r +
		         3.3871328727963666080e+0) /
		       (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r + 3.9307895800092710610e+4) * r +
		             2.1213794301586595867e+4) *
		                r +
		            5.3941960214247511077e+3) *
		               r +
		           6.8718700749205790830e+2) *
		              r +
		          4.2313330701600911252e+1) *
		             r +
		         1.0);
	}
	double r = q < 0.0 ? p : 1.0 - p;
	r = std::sqrt(-std::log(r));
	double value;
	if (r <= 5.0) {
		r -= 1.6;
		value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r + 2.41780725177450611770e-1) * r +
		              1.27045825245236838258e+0) *
		                 r +
		             3.64784832476320460504e+0) *
		                r +
		            5.76949722146069140550e+0) *
		               r +
		           4.63033784615654529590e+0) *
		              r +
		          1.42343711074968357734e+0) /
		        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r + 1.51986665636164571966e-2) * r +
		              1.48103976427480074590e-1) *
		                 r +
		             6.89767334985100004550e-1) *
		                r +
		            1.67638483018380384940e+0) *
		               r +
		           2.05319162663775882187e+0) *
		              r +
		          1.0);
	} else {
		r -= 5.0;
		value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r + 1.24266094738807843860e-3) * r +
		              2.65321895265761230930e-2) *
		                 r +
		             2.96560571828504891230e-1) *
		                r +
		            1.78482653991729133580e+0) *
		               r +
		           5.46378491116411436990e+0) *
		              r +
		          6.65790464350110377720e+0) /
		        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r + 1.84631831751005468180e-5) * r +
		              7.86869131145613259100e-4) *
		                 r +
		             1.48753612908506148525e-2) *
		                r +
		            1.36929880922735805310e-1) *
		               r +
		           5.99832206555887937690e-1) *
		              r +
		          1.0);
	}
	return q < 0.0 ? -value : value;
}

double normal_cdf(double x) {
	return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double mean(std::span<const double> xs) {
	if (xs.empty()) {
		throw std::invalid_argument("mean of empty range");
	}
	double s = 0.0;
	for (double x : xs) s += x;
	return s / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
	if (xs.size() < 2) {
		throw std::invalid_argument("sample_variance needs at least two values");
	}
	const double m = mean(xs);
	double s = 0.0;
	for (double x : xs) s += (x - m) * (x - m);
	return s / static_cast<double>(xs.size() - 1);
}

double population_variance(std::span<const double> xs) {
	const double m = mean(xs);
	double s = 0.0;
	for (double x : xs) s += (x - m) * (x - m);
	return s / static_cast<double>(xs.size());
}

std::vector<double> sample_autocorrelations(std::span<const double> xs, int max_lag) {
	const int n = static_cast<int>(xs.size());
	if (max_lag < 1 || n <= max_lag) {
		throw std::invalid_argument("sample_autocorrelations needs more observations than lags");
	}
	const double m = mean(xs);
	double c0 = 0.0;
	for (double x : xs) c0 += (x - m) * (x - m);
	std::vector<double> rho(static_cast<std::size_t>(max_lag));
	if (c0 == 0.0) {
		return rho;  // constant input: all autocorrelations 0 by convention
	}
	for (int k = 1; k <= max_lag; ++k) {
		double ck = 0.0;
		for (int t = k; t < n; ++t) {
			ck += (xs[static_cast<std::size_t>(t)] - m) * (xs[static_cast<std::size_t>(t - k)] - m);
		}
		rho[static_cast<std::size_t>(k - 1)] = ck / c0;
	}
	return rho;
}

}  // namespace sarimpact
