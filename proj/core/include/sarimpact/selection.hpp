#ifndef SARIMPACT_SELECTION_HPP
#define SARIMPACT_SELECTION_HPP

#include <string>
#include <vector>

#include "sarimpact/estimate.hpp"

namespace sarimpact {

/// AIC = 2k - 2 loglik.
double aic(double loglik, int k);

struct SearchGrid {
	int p_max = 3;
	int q_max = 4;
	int P_max = 2;
	int Q_max = 1;
	std::vector<int> d_choices{0, 1};
	std::vector<int> D_choices{0, 1};
	int s = 4;

	std::vector<SarimaOrder> candidates() const;
};

struct RankedCandidate {
	SarimaOrder order;
	double aic = 0.0;
	double loglik = 0.0;
	bool converged = false;
};

struct SkippedCandidate {
	SarimaOrder order;
	std::string reason;
};

struct SelectionResult {
	FittedModel best;
	std::vector<RankedCandidate> ranked;   // every attempted candidate, ascending AIC
	std::vector<SkippedCandidate> skipped;
};

/// Fits every candidate in the grid and picks the converged one with minimal
/// AIC; ties break toward fewer parameters, then lexicographic
/// (p,d,q,P,D,Q). Candidates the sample cannot support (k > n_eff / 3) are
/// skipped with a reason. Throws std::runtime_error when nothing converges.
/// Deterministic for fixed inputs regardless of `threads`.
SelectionResult grid_search(const QuarterlySeries &series, const SearchGrid &grid, const FitConfig &config = {},
                            int threads = 0);

}  // namespace sarimpact

#endif
