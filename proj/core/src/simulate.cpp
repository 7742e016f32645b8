#include "sarimpact/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "sarimpact/stats.hpp"
#include "sarimpact/transforms.hpp"

namespace sarimpact {

std::uint64_t NormalSampler::next_u64() {
	// splitmix64 (Steele, Lea, Flood 2014)
	state_ += 0x9E3779B97F4A7C15ULL;
	std::uint64_t z = state_;
	z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
	z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
	return z ^ (z >> 31);
}

double NormalSampler::next() {
	// uniform in (0, 1) with 53 significant bits, never exactly 0 or 1
	const double u = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
	return normal_quantile(u);
}

QuarterlySeries simulate(const SarimaOrder &order, const SarimaParams &params, int n, std::uint64_t seed,
                         QuarterIndex start) {
	order.validate();
	params.validate_dimensions(order);
	if (n < 1) {
		throw std::invalid_argument("simulate needs n >= 1");
	}
	if (!is_stationary(order, params) || !is_invertible(order, params)) {
		throw std::domain_error("simulate requires stationary and invertible parameters");
	}

	const ReducedForm rf = expand_polynomials(order, params);
	const int p = static_cast<int>(rf.ar.size());
	const int q = static_cast<int>(rf.ma.size());
	const double sigma = std::sqrt(params.sigma2);
	const double process_mean = params.process_mean();

	const int r = order.differencing_lag();
	const int n_arma = n - r;
	if (n_arma < 1) {
		throw std::invalid_argument("simulate needs n > d + D*s");
	}

	const int burn_in = 200 + 10 * (p + q);
	const int total = burn_in + n_arma;

	NormalSampler sampler(seed);
	std::vector<double> eps(static_cast<std::size_t>(total));
	for (double &e : eps) e = sigma * sampler.next();

	std::vector<double> w(static_cast<std::size_t>(total), 0.0);
	for (int t = 0; t < total; ++t) {
		double value = eps[static_cast<std::size_t>(t)];
		for (int j = 1; j <= q && j <= t; ++j) {
			value += rf.ma[static_cast<std::size_t>(j - 1)] * eps[static_cast<std::size_t>(t - j)];
		}
		for (int j = 1; j <= p && j <= t; ++j) {
			value += rf.ar[static_cast<std::size_t>(j - 1)] * w[static_cast<std::size_t>(t - j)];
		}
		w[static_cast<std::size_t>(t)] = value;
	}

	QuarterlySeries diffed;
	diffed.start = advance(start, r);
	diffed.scale = Scale::kDifferenced;
	diffed.values.assign(w.end() - n_arma, w.end());
	for (double &v : diffed.values) v += process_mean;

	if (r == 0) {
		diffed.scale = Scale::kLog;
		diffed.start = start;
		return diffed;
	}
	const std::vector<double> anchors(static_cast<std::size_t>(r), 0.0);
	QuarterlySeries out = integrate(diffed, anchors, DifferenceSpec{order.d, order.D, order.s});
	out.start = start;
	out.scale = Scale::kLog;
	return out;
}

}  // namespace sarimpact
