#include "sarimpact/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "sarimpact/csv.hpp"
#include "sarimpact/transforms.hpp"

namespace sarimpact {

std::string format_fixed(double value, int decimals) {
	char buffer[64];
	std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
	// avoid the "-0.00" artifact
	for (const char *c = buffer; *c; ++c) {
		if (*c >= '1' && *c <= '9') return buffer;
	}
	if (buffer[0] == '-') return buffer + 1;
	return buffer;
}

namespace {

SeriesOutcome run_series(const Dataset &dataset, const RunConfig &config, const SeriesKey &key,
                         int grid_threads) {
	SeriesOutcome outcome;
	outcome.key = key;

	const QuarterlySeries window = dataset.estimation_window(key.class_name, key.activity);
	const QuarterlySeries logged = log_transform(window, LogOptions{config.log_offset});

	SelectionResult selection = grid_search(logged, config.grid, config.fit, grid_threads);
	outcome.model = std::move(selection.best);
	outcome.ranked = std::move(selection.ranked);

	int lb_fit_df = 0;
	if (config.ljung_box_adjust_df) {
		lb_fit_df = std::min(outcome.model.order.coefficient_count(), config.ljung_box_lags - 1);
	}
	outcome.arch = arch_lm(outcome.model.residuals, config.arch_lags);
	outcome.ljung = ljung_box(outcome.model.residuals, config.ljung_box_lags, lb_fit_df);

	const int h = static_cast<int>(dataset.holdout.size());
	outcome.fc = forecast(outcome.model, logged, h, config.alpha, config.back_transform,
	                      LogOptions{config.log_offset});

	const QuarterlySeries &full = dataset.at(key.class_name, key.activity);
	outcome.holdout = holdout_compare(outcome.fc, full);
	return outcome;
}

}  // namespace

PipelineResult run_pipeline(const Dataset &dataset, const RunConfig &config) {
	config.validate();
	if (dataset.series.empty()) {
		throw std::invalid_argument("empty dataset");
	}
	if (dataset.holdout.empty()) {
		throw std::invalid_argument("dataset has no holdout quarters to compare against");
	}

	std::vector<SeriesKey> keys;
	keys.reserve(dataset.series.size());
	for (const auto &[key, series] : dataset.series) {
		(void)series;
		keys.push_back(key);
	}

	// Series are independent; spread them over a pool and keep each grid
	// search single-threaded for better load balance. Results are assembled
	// in key order, so the outcome is identical for any thread count.
	int pool_size = config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency());
	pool_size = std::clamp(pool_size, 1, 16);
	pool_size = std::min<int>(pool_size, static_cast<int>(keys.size()));

	std::vector<SeriesOutcome> outcomes(keys.size());
	auto evaluate = [&](std::size_t i) {
		try {
			outcomes[i] = run_series(dataset, config, keys[i], /*grid_threads=*/1);
		} catch (const std::exception &ex) {
			outcomes[i].key = keys[i];
			outcomes[i].failed = true;
			outcomes[i].error = ex.what();
		}
	};
	if (pool_size <= 1) {
		for (std::size_t i = 0; i < keys.size(); ++i) evaluate(i);
	} else {
		std::atomic<std::size_t> next{0};
		std::vector<std::thread> pool;
		pool.reserve(static_cast<std::size_t>(pool_size));
		for (int t = 0; t < pool_size; ++t) {
			pool.emplace_back([&] {
				for (std::size_t i = next.fetch_add(1); i < keys.size(); i = next.fetch_add(1)) {
					evaluate(i);
				}
			});
		}
		for (auto &th : pool) th.join();
	}

	PipelineResult result;
	for (std::size_t i = 0; i < keys.size(); ++i) {
		SeriesOutcome &outcome = outcomes[i];
		if (outcome.failed && !config.continue_on_error) {
			throw std::runtime_error("series '" + outcome.key.class_name + "' (" +
			                         to_string(outcome.key.activity) + "): " + outcome.error);
		}
		if (!outcome.failed) {
			for (const HoldoutRow &row : outcome.holdout) {
				result.impact_rows.push_back(make_impact_row(outcome.key.class_name, outcome.key.activity,
				                                             row.quarter, row.expected, row.realized));
			}
		}
		result.outcomes.push_back(std::move(outcome));
	}

	std::vector<ImpactRow> gcp_rows;
	std::vector<ImpactRow> gwp_rows;
	for (const ImpactRow &row : result.impact_rows) {
		(row.activity == Activity::kGcp ? gcp_rows : gwp_rows).push_back(row);
	}
	if (!gcp_rows.empty() && !gwp_rows.empty()) {
		result.nominal = nominal_impact(gcp_rows, gwp_rows, config.mkd_per_eur);
	}
	return result;
}

namespace {

const SeriesOutcome *find_outcome(const PipelineResult &result, const std::string &cls, Activity activity) {
	for (const SeriesOutcome &o : result.outcomes) {
		if (o.key.class_name == cls && o.key.activity == activity) return &o;
	}
	return nullptr;
}

std::vector<ImpactRow> column_rows(const PipelineResult &result, Activity activity, QuarterIndex quarter) {
	std::vector<ImpactRow> rows;
	for (const ImpactRow &row : result.impact_rows) {
		if (row.activity == activity && row.quarter == quarter) rows.push_back(row);
	}
	return rows;
}

void write_descriptive_tables(const Dataset &dataset, const RunConfig &config,
                              const std::filesystem::path &dir) {
	const std::vector<std::string> classes = dataset.class_names();
	for (std::size_t hi = 0; hi < dataset.holdout.size(); ++hi) {
		const QuarterIndex quarter = dataset.holdout[hi];
		std::vector<std::vector<std::string>> rows;
		double totals[2][2] = {};  // [activity][py|pq], level sums
		double totals_prev_year[2] = {};
		double totals_prev_quarter[2] = {};

		for (const std::string &cls : classes) {
			std::vector<std::string> row{cls};
			for (Activity activity : {Activity::kGcp, Activity::kGwp}) {
				const QuarterlySeries &series = dataset.at(cls, activity);
				const double current = series.at(quarter);
				const double prev_year = series.at(advance(quarter, -4));
				const double prev_quarter = series.at(advance(quarter, -1));
				row.push_back(format_fixed(100.0 * (current - prev_year) / prev_year, 2));
				row.push_back(format_fixed(100.0 * (current - prev_quarter) / prev_quarter, 2));
				const int a = activity == Activity::kGcp ? 0 : 1;
				totals[a][0] += current;
				totals[a][1] += current;
				totals_prev_year[a] += prev_year;
				totals_prev_quarter[a] += prev_quarter;
			}
			rows.push_back(std::move(row));
		}
		std::vector<std::string> total_row{"TOTAL"};
		for (int a : {0, 1}) {
			total_row.push_back(format_fixed(100.0 * (totals[a][0] - totals_prev_year[a]) / totals_prev_year[a], 2));
			total_row.push_back(
			    format_fixed(100.0 * (totals[a][1] - totals_prev_quarter[a]) / totals_prev_quarter[a], 2));
		}
		rows.push_back(std::move(total_row));

		write_csv(dir / ("table_descriptive_q" + std::to_string(hi + 1) + ".csv"),
		          {"class", "gcp_base_py", "gcp_base_pq", "gwp_base_py", "gwp_base_pq"}, rows);
	}
	(void)config;
}

void write_model_tables(const PipelineResult &result, const Dataset &dataset,
                        const std::filesystem::path &dir) {
	const std::vector<std::string> classes = dataset.class_names();
	for (Activity activity : {Activity::kGcp, Activity::kGwp}) {
		std::vector<std::vector<std::string>> rows;
		for (const std::string &cls : classes) {
			const SeriesOutcome *o = find_outcome(result, cls, activity);
			if (o == nullptr || o->failed) continue;
			rows.push_back({cls, to_string(o->model.order), format_fixed(o->model.aic, 2),
			                format_fixed(o->arch.p_value, 4), format_fixed(o->ljung.p_value, 4)});
		}
		write_csv(dir / ("table_models_" + to_string(activity) + ".csv"),
		          {"class", "order", "aic", "arch_lm_pvalue", "ljung_box_pvalue"}, rows);
	}
}

void write_forecast_tables(const PipelineResult &result, const Dataset &dataset,
                           const std::filesystem::path &dir) {
	const std::vector<std::string> classes = dataset.class_names();
	for (Activity activity : {Activity::kGcp, Activity::kGwp}) {
		for (std::size_t hi = 0; hi < dataset.holdout.size(); ++hi) {
			std::vector<std::vector<std::string>> rows;
			double sums[5] = {};
			for (const std::string &cls : classes) {
				const SeriesOutcome *o = find_outcome(result, cls, activity);
				if (o == nullptr || o->failed) continue;
				const HoldoutRow &h = o->holdout[hi];
				const double lower = o->fc.lower_level[hi];
				const double upper = o->fc.upper_level[hi];
				rows.push_back({cls, format_fixed(lower, 3), format_fixed(h.expected, 3),
				                format_fixed(upper, 3), format_fixed(h.realized, 3),
				                format_fixed(h.difference, 3)});
				sums[0] += lower;
				sums[1] += h.expected;
				sums[2] += upper;
				sums[3] += h.realized;
				sums[4] += h.difference;
			}
			std::vector<std::string> total{"TOTAL"};
			for (double s : sums) total.push_back(format_fixed(s, 3));
			rows.push_back(std::move(total));
			write_csv(dir / ("table_forecast_" + to_string(activity) + "_q" + std::to_string(hi + 1) + ".csv"),
			          {"class", "lower", "expected", "upper", "real", "difference"}, rows);
		}
	}
}

void write_impact_table(const PipelineResult &result, const Dataset &dataset,
                        const std::filesystem::path &dir) {
	const std::vector<std::string> classes = dataset.class_names();
	std::vector<std::string> header{"class"};
	for (Activity activity : {Activity::kGcp, Activity::kGwp}) {
		for (std::size_t hi = 0; hi < dataset.holdout.size(); ++hi) {
			header.push_back(to_string(activity) + "_q" + std::to_string(hi + 1));
		}
	}

	std::vector<std::vector<std::string>> rows;
	for (const std::string &cls : classes) {
		std::vector<std::string> row{cls};
		bool any = false;
		for (Activity activity : {Activity::kGcp, Activity::kGwp}) {
			const SeriesOutcome *o = find_outcome(result, cls, activity);
			for (std::size_t hi = 0; hi < dataset.holdout.size(); ++hi) {
				if (o == nullptr || o->failed) {
					row.push_back("");
				} else {
					row.push_back(format_fixed(
					    relative_error(o->holdout[hi].expected, o->holdout[hi].realized), 2));
					any = true;
				}
			}
		}
		if (any) rows.push_back(std::move(row));
	}

	std::vector<std::string> total{"TOTAL"};
	for (Activity activity : {Activity::kGcp, Activity::kGwp}) {
		for (std::size_t hi = 0; hi < dataset.holdout.size(); ++hi) {
			const auto column = column_rows(result, activity, dataset.holdout[hi]);
			total.push_back(column.empty() ? "" : format_fixed(total_relative_error(column), 2));
		}
	}
	rows.push_back(std::move(total));
	write_csv(dir / "table_impact.csv", header, rows);
}

void write_share_table(const PipelineResult &result, const Dataset &dataset,
                       const std::filesystem::path &dir) {
	std::vector<std::vector<std::string>> rows;
	for (Activity activity : {Activity::kGcp, Activity::kGwp}) {
		for (const QuarterIndex quarter : dataset.holdout) {
			const auto column = column_rows(result, activity, quarter);
			if (column.empty()) continue;
			const ShareTable table = structural_shares(column);
			for (const ShareRow &share : table.rows) {
				rows.push_back({share.class_name, to_string(activity), to_string(quarter),
				                format_fixed(100.0 * share.expected_share, 4),
				                format_fixed(100.0 * share.realized_share, 4),
				                format_fixed(share.delta_pp, 4)});
			}
		}
	}
	write_csv(dir / "table_shares.csv",
	          {"class", "activity", "quarter", "expected_share_pct", "realized_share_pct", "delta_pp"}, rows);
}

void write_text_report(const PipelineResult &result, const Dataset &dataset, const RunConfig &config,
                       const std::filesystem::path &dir) {
	std::ofstream out(dir / "report.txt", std::ios::binary);
	if (!out) {
		throw std::runtime_error("cannot write report.txt");
	}

	out << "Counterfactual impact report\n";
	out << "============================\n\n";
	out << "Estimation window ends " << to_string(dataset.estimation_end) << "; holdout quarters:";
	for (const QuarterIndex q : dataset.holdout) out << " " << to_string(q);
	out << "\n\n";

	out << "Selected models\n---------------\n";
	for (const SeriesOutcome &o : result.outcomes) {
		out << "  " << o.key.class_name << " [" << to_string(o.key.activity) << "] ";
		if (o.failed) {
			out << "FAILED: " << o.error << "\n";
			continue;
		}
		out << to_string(o.model.order) << "  aic=" << format_fixed(o.model.aic, 2)
		    << "  arch_lm_p=" << format_fixed(o.arch.p_value, 4)
		    << "  ljung_box_p=" << format_fixed(o.ljung.p_value, 4)
		    << (o.model.converged ? "" : "  (not converged)") << "\n";
	}
	out << "\n";

	out << "Impact totals (relative error, percent)\n----------------------------------------\n";
	for (Activity activity : {Activity::kGcp, Activity::kGwp}) {
		for (std::size_t hi = 0; hi < dataset.holdout.size(); ++hi) {
			const auto column = column_rows(result, activity, dataset.holdout[hi]);
			out << "  " << to_string(activity) << " " << to_string(dataset.holdout[hi]) << ": "
			    << (column.empty() ? "n/a" : format_fixed(total_relative_error(column), 2)) << "\n";
		}
	}
	out << "\n";

	if (result.nominal.has_value()) {
		const NominalImpact &nom = *result.nominal;
		out << "Nominal accounting (" << format_fixed(nom.mkd_per_eur, 1) << " MKD = 1 EUR)\n";
		out << "--------------------------------------\n";
		for (const NominalCell &cell : nom.cells) {
			out << "  " << to_string(cell.activity) << " " << to_string(cell.quarter)
			    << " shortfall: " << format_fixed(cell.shortfall_mkd, 0) << " thousand MKD = "
			    << format_fixed(cell.shortfall_eur / 1000.0, 1) << " M EUR\n";
		}
		out << "  gross shortfall total (GCP + GWP): " << format_fixed(nom.gross_total_eur / 1000.0, 1)
		    << " M EUR\n";
		out << "  net industry loss = GWP shortfall - GCP shortfall: "
		    << format_fixed(nom.net_loss_eur / 1000.0, 1) << " M EUR\n";
		out << "  (net formula: premiums foregone minus claim payouts avoided; the gross total\n"
		    << "   counts both sides of the balance sheet as losses)\n";
	}
	out << "\n";

	bool any_failed = false;
	for (const SeriesOutcome &o : result.outcomes) any_failed |= o.failed;
	if (any_failed) {
		out << "Warnings\n--------\n";
		for (const SeriesOutcome &o : result.outcomes) {
			if (o.failed) {
				out << "  " << o.key.class_name << " [" << to_string(o.key.activity)
				    << "] omitted from totals: " << o.error << "\n";
			}
		}
		out << "\n";
	}
	(void)config;
}

}  // namespace

void write_reports(const PipelineResult &result, const Dataset &dataset, const RunConfig &config) {
	const std::filesystem::path dir(config.output_dir);
	std::filesystem::create_directories(dir);
	write_descriptive_tables(dataset, config, dir);
	write_model_tables(result, dataset, dir);
	write_forecast_tables(result, dataset, dir);
	write_impact_table(result, dataset, dir);
	write_share_table(result, dataset, dir);
	write_text_report(result, dataset, config, dir);
}

}  // namespace sarimpact
