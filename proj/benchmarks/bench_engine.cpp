#include <benchmark/benchmark.h>

#include "sarimpact/estimate.hpp"
#include "sarimpact/forecast.hpp"
#include "sarimpact/selection.hpp"
#include "sarimpact/simulate.hpp"
#include "sarimpact/state_space.hpp"
#include "sarimpact/transforms.hpp"

namespace {

using namespace sarimpact;

QuarterlySeries quarterly_draw(const char *order_text, int n, std::uint64_t seed) {
	const SarimaOrder order = parse_order(order_text);
	SarimaParams params;
	params.phi.assign(static_cast<std::size_t>(order.p), 0.4);
	params.theta.assign(static_cast<std::size_t>(order.q), 0.2);
	params.sphi.assign(static_cast<std::size_t>(order.P), -0.4);
	params.stheta.assign(static_cast<std::size_t>(order.Q), 0.1);
	params.sigma2 = 0.04;
	return simulate(order, params, n, seed);
}

void LogLikelihood(benchmark::State &state) {
	const SarimaOrder order = parse_order("(1,0,0)(2,1,0)4");
	SarimaParams params;
	params.phi = {0.45};
	params.sphi = {-0.5, -0.25};
	params.sigma2 = 0.002;
	const auto draw = quarterly_draw("(1,0,0)(2,1,0)4", 31, 7);
	const auto diffed = difference(draw, DifferenceSpec{0, 1, 4});
	for (auto _ : state) {
		benchmark::DoNotOptimize(log_likelihood(order, params, diffed));
	}
}
BENCHMARK(LogLikelihood);

void FitSeasonalAr(benchmark::State &state) {
	const auto draw = quarterly_draw("(1,0,0)(2,1,0)4", 31, 11);
	const SarimaOrder order = parse_order("(1,0,0)(2,1,0)4");
	for (auto _ : state) {
		benchmark::DoNotOptimize(fit(draw, order));
	}
}
BENCHMARK(FitSeasonalAr);

void FitSeasonalMa(benchmark::State &state) {
	const auto draw = quarterly_draw("(0,1,2)(2,1,0)4", 31, 13);
	const SarimaOrder order = parse_order("(0,1,2)(2,1,0)4");
	for (auto _ : state) {
		benchmark::DoNotOptimize(fit(draw, order));
	}
}
BENCHMARK(FitSeasonalMa);

void GridSearchOneSeries(benchmark::State &state) {
	const auto draw = quarterly_draw("(1,0,0)(0,1,0)4", 31, 17);
	const SearchGrid grid;
	for (auto _ : state) {
		benchmark::DoNotOptimize(grid_search(draw, grid, FitConfig{}, static_cast<int>(state.range(0))));
	}
}
BENCHMARK(GridSearchOneSeries)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void ForecastEightSteps(benchmark::State &state) {
	const auto draw = quarterly_draw("(1,0,0)(0,1,0)4", 31, 19);
	const FittedModel model = fit(draw, parse_order("(1,0,0)(0,1,0)4"));
	for (auto _ : state) {
		benchmark::DoNotOptimize(forecast(model, draw, 8, 0.05));
	}
}
BENCHMARK(ForecastEightSteps);

}  // namespace

BENCHMARK_MAIN();
