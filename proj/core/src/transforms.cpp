#include "sarimpact/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace sarimpact {

QuarterlySeries log_transform(const QuarterlySeries &series, const LogOptions &opts) {
	if (series.scale != Scale::kLevel) {
		throw std::invalid_argument("log_transform expects a level-scale series");
	}
	QuarterlySeries out = series;
	for (std::size_t i = 0; i < out.values.size(); ++i) {
		const double shifted = out.values[i] + opts.offset;
		if (!(shifted > 0.0)) {
			throw std::domain_error("log of nonpositive value at " + to_string(series.quarter_at(i)) +
			                        " in series '" + series.class_name + "'");
		}
		out.values[i] = std::log(shifted);
	}
	out.scale = Scale::kLog;
	return out;
}

QuarterlySeries exp_transform(const QuarterlySeries &series, const LogOptions &opts) {
	if (series.scale != Scale::kLog) {
		throw std::invalid_argument("exp_transform expects a log-scale series");
	}
	QuarterlySeries out = series;
	for (double &v : out.values) {
		v = std::exp(v) - opts.offset;
	}
	out.scale = Scale::kLevel;
	return out;
}

void DifferenceSpec::validate() const {
	if (d < 0 || D < 0 || s < 1) {
		throw std::invalid_argument("invalid differencing spec: d, D must be >= 0 and s >= 1");
	}
}

std::vector<double> difference_polynomial(const DifferenceSpec &spec) {
	spec.validate();
	std::vector<double> c{1.0};
	auto multiply_factor = [&c](int lag) {
		// c(L) *= (1 - L^lag)
		std::vector<double> next(c.size() + static_cast<std::size_t>(lag), 0.0);
		for (std::size_t i = 0; i < c.size(); ++i) {
			next[i] += c[i];
			next[i + static_cast<std::size_t>(lag)] -= c[i];
		}
		c = std::move(next);
	};
	for (int i = 0; i < spec.d; ++i) multiply_factor(1);
	for (int i = 0; i < spec.D; ++i) multiply_factor(spec.s);
	return c;
}

QuarterlySeries difference(const QuarterlySeries &series, const DifferenceSpec &spec) {
	spec.validate();
	const int r = spec.total_lag();
	if (static_cast<int>(series.size()) <= r) {
		throw std::invalid_argument("series too short to difference: length " + std::to_string(series.size()) +
		                            ", needs > " + std::to_string(r));
	}
	std::vector<double> w = series.values;
	auto apply = [&w](int lag) {
		std::vector<double> next(w.size() - static_cast<std::size_t>(lag));
		for (std::size_t t = static_cast<std::size_t>(lag); t < w.size(); ++t) {
			next[t - static_cast<std::size_t>(lag)] = w[t] - w[t - static_cast<std::size_t>(lag)];
		}
		w = std::move(next);
	};
	for (int i = 0; i < spec.d; ++i) apply(1);
	for (int i = 0; i < spec.D; ++i) apply(spec.s);

	QuarterlySeries out = series;
	out.start = advance(series.start, r);
	out.values = std::move(w);
	out.scale = Scale::kDifferenced;
	return out;
}

QuarterlySeries integrate(const QuarterlySeries &diffed, std::span<const double> anchors,
                          const DifferenceSpec &spec) {
	spec.validate();
	const std::size_t r = static_cast<std::size_t>(spec.total_lag());
	if (anchors.size() != r) {
		throw std::invalid_argument("integrate needs exactly d + D*s anchors, got " +
		                            std::to_string(anchors.size()) + ", expected " + std::to_string(r));
	}
	const std::vector<double> c = difference_polynomial(spec);
	std::vector<double> x(anchors.begin(), anchors.end());
	x.reserve(r + diffed.size());
	for (double w : diffed.values) {
		// w_t = sum_i c_i x_{t-i}, c_0 = 1  =>  x_t = w_t - sum_{i>=1} c_i x_{t-i}
		double value = w;
		const std::size_t t = x.size();
		for (std::size_t i = 1; i < c.size(); ++i) {
			value -= c[i] * x[t - i];
		}
		x.push_back(value);
	}

	QuarterlySeries out = diffed;
	out.start = advance(diffed.start, -static_cast<int>(r));
	out.values = std::move(x);
	out.scale = r == 0 ? diffed.scale : Scale::kLog;
	return out;
}

std::vector<double> integrate_continue(std::span<const double> tail, std::span<const double> future_diffs,
                                       const DifferenceSpec &spec) {
	spec.validate();
	const std::size_t r = static_cast<std::size_t>(spec.total_lag());
	if (tail.size() < r) {
		throw std::invalid_argument("integrate_continue needs at least d + D*s trailing values");
	}
	const std::vector<double> c = difference_polynomial(spec);
	std::vector<double> x(tail.end() - static_cast<long>(r), tail.end());
	for (double w : future_diffs) {
		double value = w;
		const std::size_t t = x.size();
		for (std::size_t i = 1; i < c.size(); ++i) {
			value -= c[i] * x[t - i];
		}
		x.push_back(value);
	}
	return {x.begin() + static_cast<long>(r), x.end()};
}

std::vector<double> growth_rate(const QuarterlySeries &series, int lag) {
	if (series.scale != Scale::kLevel) {
		throw std::invalid_argument("growth_rate expects a level-scale series");
	}
	if (lag < 1) {
		throw std::invalid_argument("growth_rate lag must be >= 1");
	}
	const std::size_t n = series.size();
	if (n <= static_cast<std::size_t>(lag)) {
		throw std::invalid_argument("series too short for growth rate at lag " + std::to_string(lag));
	}
	std::vector<double> rates(n - static_cast<std::size_t>(lag));
	for (std::size_t t = static_cast<std::size_t>(lag); t < n; ++t) {
		const double base = series.values[t - static_cast<std::size_t>(lag)];
		if (base == 0.0) {
			throw std::domain_error("zero denominator in growth rate at " +
			                        to_string(series.quarter_at(t - static_cast<std::size_t>(lag))));
		}
		rates[t - static_cast<std::size_t>(lag)] = 100.0 * (series.values[t] - base) / base;
	}
	return rates;
}

}  // namespace sarimpact
