#ifndef SARIMPACT_SIMULATE_HPP
#define SARIMPACT_SIMULATE_HPP

#include <cstdint>
#include <vector>

#include "sarimpact/sarima.hpp"
#include "sarimpact/series.hpp"

namespace sarimpact {

/// Deterministic standard-normal stream: splitmix64 uniforms mapped through
/// the inverse normal CDF, identical across platforms and standard
/// libraries.
class NormalSampler {
public:
	explicit NormalSampler(std::uint64_t seed) : state_(seed) {}
	double next();

private:
	std::uint64_t next_u64();
	std::uint64_t state_;
};

/// Draws n observations from the model. The stationary ARMA part is
/// generated by the reduced-form recurrence with a discarded burn-in, then
/// integrated per (d, D, s) with zero anchors. Deterministic given the seed.
QuarterlySeries simulate(const SarimaOrder &order, const SarimaParams &params, int n, std::uint64_t seed,
                         QuarterIndex start = {2000, 1});

}  // namespace sarimpact

#endif
