#ifndef SARIMPACT_RUN_CONFIG_HPP
#define SARIMPACT_RUN_CONFIG_HPP

#include <filesystem>
#include <map>
#include <string>

#include "sarimpact/estimate.hpp"
#include "sarimpact/forecast.hpp"
#include "sarimpact/selection.hpp"

namespace sarimpact {

/// Everything the pipeline needs beyond the input data. Defaults reproduce
/// the reference analysis.
struct RunConfig {
	SearchGrid grid;
	FitConfig fit;
	double alpha = 0.05;
	int arch_lags = 4;
	int ljung_box_lags = 8;
	bool ljung_box_adjust_df = false;
	double mkd_per_eur = 61.5;
	BackTransform back_transform = BackTransform::kMedian;
	double log_offset = 0.0;
	int holdout_quarters = 2;
	bool continue_on_error = false;
	int threads = 0;  // 0 = hardware concurrency
	std::string output_dir = "out";

	void validate() const;
};

/// `key = value` lines with '#' comments; later assignments win.
std::map<std::string, std::string> parse_config_file(const std::filesystem::path &path);

/// Applies one key to the config; throws std::invalid_argument for unknown
/// keys or unparseable values. Recognized keys:
///   p_max, q_max, P_max, Q_max, d_choices, D_choices, seasonal_period,
///   alpha, arch_lags, ljung_box_lags, ljung_box_adjust_df, mkd_per_eur,
///   back_transform (median|mean), log_offset, holdout_quarters,
///   continue_on_error, threads, output_dir, intercept (auto|on|off).
void apply_config_entry(RunConfig &config, const std::string &key, const std::string &value);

void apply_config(RunConfig &config, const std::map<std::string, std::string> &entries);

}  // namespace sarimpact

#endif
