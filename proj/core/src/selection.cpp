#include "sarimpact/selection.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "sarimpact/transforms.hpp"

namespace sarimpact {

double aic(double loglik, int k) {
	if (k < 1) {
		throw std::invalid_argument("aic needs k >= 1");
	}
	return 2.0 * static_cast<double>(k) - 2.0 * loglik;
}

std::vector<SarimaOrder> SearchGrid::candidates() const {
	if (p_max < 0 || q_max < 0 || P_max < 0 || Q_max < 0 || d_choices.empty() || D_choices.empty() || s < 1) {
		throw std::invalid_argument("search grid ranges must be nonempty and nonnegative");
	}
	std::vector<SarimaOrder> out;
	for (int p = 0; p <= p_max; ++p)
		for (int d : d_choices)
			for (int q = 0; q <= q_max; ++q)
				for (int P = 0; P <= P_max; ++P)
					for (int D : D_choices)
						for (int Q = 0; Q <= Q_max; ++Q)
							out.push_back(SarimaOrder{p, d, q, P, D, Q, s});
	return out;
}

namespace {

auto order_tuple(const SarimaOrder &o) {
	return std::make_tuple(o.p, o.d, o.q, o.P, o.D, o.Q);
}

}  // namespace

SelectionResult grid_search(const QuarterlySeries &series, const SearchGrid &grid, const FitConfig &config,
                            int threads) {
	const std::vector<SarimaOrder> candidates = grid.candidates();
	const int n = static_cast<int>(series.size());

	struct Slot {
		bool attempted = false;
		FittedModel model;
		std::string skip_reason;
	};
	std::vector<Slot> slots(candidates.size());

	auto evaluate = [&](std::size_t i) {
		const SarimaOrder &order = candidates[i];
		const int n_eff = n - order.differencing_lag();
		const int k = order.parameter_count();
		if (n_eff < 1) {
			slots[i].skip_reason = "series too short to difference";
			return;
		}
		if (3 * k > n_eff) {
			slots[i].skip_reason = "too many parameters for " + std::to_string(n_eff) + " points";
			return;
		}
		try {
			slots[i].model = fit(series, order, config);
			slots[i].attempted = true;
		} catch (const std::exception &ex) {
			slots[i].skip_reason = ex.what();
		}
	};

	int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
	n_threads = std::clamp(n_threads, 1, 16);
	if (n_threads == 1 || candidates.size() < 2) {
		for (std::size_t i = 0; i < candidates.size(); ++i) evaluate(i);
	} else {
		std::atomic<std::size_t> next{0};
		std::vector<std::thread> pool;
		pool.reserve(static_cast<std::size_t>(n_threads));
		for (int t = 0; t < n_threads; ++t) {
			pool.emplace_back([&] {
				for (std::size_t i = next.fetch_add(1); i < candidates.size(); i = next.fetch_add(1)) {
					evaluate(i);
				}
			});
		}
		for (auto &th : pool) th.join();
	}

	SelectionResult result;
	std::vector<std::size_t> attempted;
	for (std::size_t i = 0; i < candidates.size(); ++i) {
		if (slots[i].attempted) {
			attempted.push_back(i);
			result.ranked.push_back(RankedCandidate{candidates[i], slots[i].model.aic, slots[i].model.loglik,
			                                        slots[i].model.converged});
		} else {
			result.skipped.push_back(SkippedCandidate{candidates[i], slots[i].skip_reason});
		}
	}

	auto better = [&](const RankedCandidate &a, const RankedCandidate &b) {
		const bool a_ok = std::isfinite(a.aic);
		const bool b_ok = std::isfinite(b.aic);
		if (a_ok != b_ok) return a_ok;
		if (a.aic != b.aic) return a.aic < b.aic;
		const int ka = a.order.parameter_count();
		const int kb = b.order.parameter_count();
		if (ka != kb) return ka < kb;
		return order_tuple(a.order) < order_tuple(b.order);
	};
	std::sort(result.ranked.begin(), result.ranked.end(), better);

	const RankedCandidate *winner = nullptr;
	for (const RankedCandidate &c : result.ranked) {
		if (c.converged && std::isfinite(c.aic)) {
			winner = &c;
			break;
		}
	}
	if (winner == nullptr) {
		throw std::runtime_error("grid search: no candidate converged for series '" + series.class_name + "'");
	}
	for (std::size_t i : attempted) {
		if (order_tuple(candidates[i]) == order_tuple(winner->order) && candidates[i].s == winner->order.s) {
			result.best = slots[i].model;
			break;
		}
	}
	return result;
}

}  // namespace sarimpact
