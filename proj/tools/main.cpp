// Command line front end: ingestion checks, single fits, grid search,
// forecasting, impact measurement and the full report pipeline.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "sarimpact/csv.hpp"
#include "sarimpact/dataset.hpp"
#include "sarimpact/pipeline.hpp"
#include "sarimpact/transforms.hpp"

namespace {

using namespace sarimpact;

struct CommonArgs {
	std::string data_path;
	std::string config_path;
	std::map<std::string, std::string> overrides;
};

// Registers --config plus one flag per config key so anything the file can
// set, the command line can override.
void add_config_options(CLI::App *cmd, CommonArgs &args) {
	cmd->add_option("--config", args.config_path, "key = value configuration file");
	static const char *keys[] = {"p_max",          "q_max",
	                             "P_max",          "Q_max",
	                             "d_choices",      "D_choices",
	                             "seasonal_period", "alpha",
	                             "arch_lags",      "ljung_box_lags",
	                             "ljung_box_adjust_df", "mkd_per_eur",
	                             "back_transform", "log_offset",
	                             "holdout_quarters", "continue_on_error",
	                             "threads",        "output_dir",
	                             "intercept"};
	for (const char *key : keys) {
		cmd->add_option_function<std::string>(
		    std::string("--") + key,
		    [&args, key](const std::string &value) { args.overrides[key] = value; },
		    "config key " + std::string(key));
	}
}

RunConfig build_config(const CommonArgs &args) {
	RunConfig config;
	if (!args.config_path.empty()) {
		apply_config(config, parse_config_file(args.config_path));
	}
	for (const auto &[key, value] : args.overrides) {
		apply_config_entry(config, key, value);
	}
	config.validate();
	return config;
}

QuarterlySeries estimation_log_series(const Dataset &dataset, const RunConfig &config, const std::string &cls,
                                      const std::string &activity) {
	const QuarterlySeries window = dataset.estimation_window(cls, parse_activity(activity));
	return log_transform(window, LogOptions{config.log_offset});
}

void print_model(const FittedModel &model, const TestResult &arch, const TestResult &ljung) {
	std::cout << "order=" << to_string(model.order) << "\n";
	std::cout << "converged=" << (model.converged ? "true" : "false") << "\n";
	std::cout << "iterations=" << model.iterations << "\n";
	std::cout << "n_used=" << model.n_used << "\n";
	std::cout << "loglik=" << format_fixed(model.loglik, 6) << "\n";
	std::cout << "aic=" << format_fixed(model.aic, 6) << "\n";
	std::cout << "sigma2=" << format_fixed(model.params.sigma2, 12) << "\n";
	std::cout << "mu=" << format_fixed(model.params.mu, 12) << "\n";
	auto print_block = [](const char *name, const std::vector<double> &values) {
		for (std::size_t i = 0; i < values.size(); ++i) {
			std::cout << name << i + 1 << "=" << format_fixed(values[i], 12) << "\n";
		}
	};
	print_block("phi", model.params.phi);
	print_block("theta", model.params.theta);
	print_block("sphi", model.params.sphi);
	print_block("stheta", model.params.stheta);
	std::cout << "arch_lm_p=" << format_fixed(arch.p_value, 6) << "\n";
	std::cout << "ljung_box_p=" << format_fixed(ljung.p_value, 6) << "\n";
}

int cmd_ingest_check(const CommonArgs &args) {
	const RunConfig config = build_config(args);
	const Dataset dataset = ingest(args.data_path, config.holdout_quarters);
	std::cout << "classes=" << dataset.class_names().size() << "\n";
	std::cout << "series=" << dataset.series.size() << "\n";
	std::cout << "estimation_end=" << to_string(dataset.estimation_end) << "\n";
	for (const SeriesSummary &s : summarize(dataset)) {
		std::cout << s.class_name << " [" << to_string(s.activity) << "] n=" << s.n
		          << " mean=" << format_fixed(s.mean, 2) << " std_dev=" << format_fixed(s.std_dev, 2) << "\n";
	}
	return 0;
}

int cmd_fit(const CommonArgs &args, const std::string &cls, const std::string &activity,
            const std::string &order_text) {
	const RunConfig config = build_config(args);
	const Dataset dataset = ingest(args.data_path, config.holdout_quarters);
	const QuarterlySeries logged = estimation_log_series(dataset, config, cls, activity);
	const SarimaOrder order = parse_order(order_text);
	const FittedModel model = fit(logged, order, config.fit);
	TestResult arch;
	TestResult ljung;
	if (model.converged) {
		arch = arch_lm(model.residuals, config.arch_lags);
		int lb_fit_df = 0;
		if (config.ljung_box_adjust_df) {
			lb_fit_df = std::min(model.order.coefficient_count(), config.ljung_box_lags - 1);
		}
		ljung = ljung_box(model.residuals, config.ljung_box_lags, lb_fit_df);
	}
	print_model(model, arch, ljung);
	return model.converged ? 0 : 1;
}

int cmd_select(const CommonArgs &args, const std::string &cls, const std::string &activity, int top) {
	const RunConfig config = build_config(args);
	const Dataset dataset = ingest(args.data_path, config.holdout_quarters);

	std::vector<SeriesKey> keys;
	if (cls.empty()) {
		for (const auto &[key, series] : dataset.series) {
			(void)series;
			keys.push_back(key);
		}
	} else {
		keys.push_back(SeriesKey{cls, parse_activity(activity)});
	}

	for (const SeriesKey &key : keys) {
		const QuarterlySeries logged = estimation_log_series(dataset, config, key.class_name,
		                                                     to_string(key.activity));
		const SelectionResult result = grid_search(logged, config.grid, config.fit, config.threads);
		std::cout << key.class_name << " [" << to_string(key.activity)
		          << "] best=" << to_string(result.best.order) << " aic=" << format_fixed(result.best.aic, 4)
		          << " candidates=" << result.ranked.size() << " skipped=" << result.skipped.size() << "\n";
		for (int i = 0; i < top && i < static_cast<int>(result.ranked.size()); ++i) {
			const RankedCandidate &c = result.ranked[static_cast<std::size_t>(i)];
			std::cout << "  " << to_string(c.order) << " aic=" << format_fixed(c.aic, 4)
			          << (c.converged ? "" : " (not converged)") << "\n";
		}
	}
	return 0;
}

int cmd_forecast(const CommonArgs &args, const std::string &cls, const std::string &activity,
                 const std::string &order_text, int horizon) {
	const RunConfig config = build_config(args);
	const Dataset dataset = ingest(args.data_path, config.holdout_quarters);
	const QuarterlySeries logged = estimation_log_series(dataset, config, cls, activity);

	FittedModel model;
	if (order_text.empty()) {
		model = grid_search(logged, config.grid, config.fit, config.threads).best;
	} else {
		model = fit(logged, parse_order(order_text), config.fit);
	}
	const int h = horizon > 0 ? horizon : static_cast<int>(dataset.holdout.size());
	const Forecast fc = forecast(model, logged, h, config.alpha, config.back_transform,
	                             LogOptions{config.log_offset});

	const QuarterlySeries &full = dataset.at(cls, parse_activity(activity));
	std::cout << "quarter,mean_log,var_log,lower,expected,upper,real,difference\n";
	for (int j = 0; j < h; ++j) {
		const QuarterIndex q = advance(fc.start, j);
		std::cout << to_string(q) << "," << format_fixed(fc.mean_log[static_cast<std::size_t>(j)], 8) << ","
		          << format_fixed(fc.var_log[static_cast<std::size_t>(j)], 8) << ","
		          << format_fixed(fc.lower_level[static_cast<std::size_t>(j)], 3) << ","
		          << format_fixed(fc.expected_level[static_cast<std::size_t>(j)], 3) << ","
		          << format_fixed(fc.upper_level[static_cast<std::size_t>(j)], 3);
		try {
			const double real = full.at(q);
			std::cout << "," << format_fixed(real, 3) << ","
			          << format_fixed(real - fc.expected_level[static_cast<std::size_t>(j)], 3);
		} catch (const std::out_of_range &) {
			std::cout << ",,";
		}
		std::cout << "\n";
	}
	return 0;
}

int cmd_impact(const CommonArgs &args) {
	const RunConfig config = build_config(args);
	const Dataset dataset = ingest(args.data_path, config.holdout_quarters);
	const PipelineResult result = run_pipeline(dataset, config);

	std::cout << "class,activity,quarter,expected,real,relative_error_pct,difference\n";
	for (const ImpactRow &row : result.impact_rows) {
		std::cout << csv_escape(row.class_name) << "," << to_string(row.activity) << ","
		          << to_string(row.quarter) << "," << format_fixed(row.expected, 3) << ","
		          << format_fixed(row.realized, 3) << "," << format_fixed(row.relative_error_pct, 2) << ","
		          << format_fixed(row.difference, 3) << "\n";
	}
	std::cout << "\n";
	for (Activity activity : {Activity::kGcp, Activity::kGwp}) {
		for (const QuarterIndex quarter : dataset.holdout) {
			std::vector<ImpactRow> column;
			for (const ImpactRow &row : result.impact_rows) {
				if (row.activity == activity && row.quarter == quarter) column.push_back(row);
			}
			if (column.empty()) continue;
			std::cout << "total_" << to_string(activity) << "_" << to_string(quarter) << "="
			          << format_fixed(total_relative_error(column), 2) << "\n";
		}
	}
	if (result.nominal.has_value()) {
		std::cout << "gcp_shortfall_meur=" << format_fixed(result.nominal->gcp_shortfall_eur / 1000.0, 2) << "\n";
		std::cout << "gwp_shortfall_meur=" << format_fixed(result.nominal->gwp_shortfall_eur / 1000.0, 2) << "\n";
		std::cout << "gross_total_meur=" << format_fixed(result.nominal->gross_total_eur / 1000.0, 2) << "\n";
		std::cout << "net_loss_meur=" << format_fixed(result.nominal->net_loss_eur / 1000.0, 2) << "\n";
	}
	return 0;
}

int cmd_report(const CommonArgs &args) {
	const RunConfig config = build_config(args);
	const Dataset dataset = ingest(args.data_path, config.holdout_quarters);
	const PipelineResult result = run_pipeline(dataset, config);
	write_reports(result, dataset, config);
	std::cout << "report written to " << config.output_dir << "\n";
	return 0;
}

}  // namespace

int main(int argc, char **argv) {
	CLI::App app{"Seasonal ARIMA counterfactual impact engine for quarterly insurance activity"};
	app.require_subcommand(1);

	CommonArgs args;
	std::string cls;
	std::string activity = "gcp";
	std::string order_text;
	int top = 5;
	int horizon = 0;

	auto add_data_option = [&args](CLI::App *cmd, bool required = true) {
		auto *opt = cmd->add_option("--data", args.data_path, "input CSV (class,quarter,gcp,gwp)");
		if (required) opt->required();
	};

	CLI::App *ingest_cmd = app.add_subcommand("ingest-check", "validate an input file and print summaries");
	add_data_option(ingest_cmd);
	add_config_options(ingest_cmd, args);

	CLI::App *fit_cmd = app.add_subcommand("fit", "fit one series under an explicit order");
	add_data_option(fit_cmd);
	fit_cmd->add_option("--class", cls, "insurance class name")->required();
	fit_cmd->add_option("--activity", activity, "gcp or gwp");
	fit_cmd->add_option("--order", order_text, "model order, e.g. (1,0,0)(0,1,0)4")->required();
	add_config_options(fit_cmd, args);

	CLI::App *select_cmd = app.add_subcommand("select", "AIC grid search for one series or all");
	add_data_option(select_cmd);
	select_cmd->add_option("--class", cls, "insurance class name (omit for all series)");
	select_cmd->add_option("--activity", activity, "gcp or gwp");
	select_cmd->add_option("--top", top, "ranked candidates to print");
	add_config_options(select_cmd, args);

	CLI::App *forecast_cmd = app.add_subcommand("forecast", "out-of-sample forecast for one series");
	add_data_option(forecast_cmd);
	forecast_cmd->add_option("--class", cls, "insurance class name")->required();
	forecast_cmd->add_option("--activity", activity, "gcp or gwp");
	forecast_cmd->add_option("--order", order_text, "model order (defaults to the grid-search winner)");
	forecast_cmd->add_option("--horizon", horizon, "horizon (defaults to the holdout length)");
	add_config_options(forecast_cmd, args);

	CLI::App *impact_cmd = app.add_subcommand("impact", "full pipeline, impact rows to stdout");
	add_data_option(impact_cmd);
	add_config_options(impact_cmd, args);

	CLI::App *report_cmd = app.add_subcommand("report", "full pipeline, report bundle to output_dir");
	add_data_option(report_cmd);
	add_config_options(report_cmd, args);

	CLI11_PARSE(app, argc, argv);

	try {
		if (ingest_cmd->parsed()) return cmd_ingest_check(args);
		if (fit_cmd->parsed()) return cmd_fit(args, cls, activity, order_text);
		if (select_cmd->parsed()) return cmd_select(args, cls, activity, top);
		if (forecast_cmd->parsed()) return cmd_forecast(args, cls, activity, order_text, horizon);
		if (impact_cmd->parsed()) return cmd_impact(args);
		if (report_cmd->parsed()) return cmd_report(args);
	} catch (const std::exception &ex) {
		std::cerr << "error: " << ex.what() << "\n";
		return 1;
	}
	return 0;
}
