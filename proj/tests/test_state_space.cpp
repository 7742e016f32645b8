#include <doctest.h>

#include <stdexcept>

#include "sarimpact/state_space.hpp"
#include "test_helpers.hpp"

using namespace sarimpact;

TEST_CASE("white noise system is one-dimensional") {
	SarimaOrder order{0, 0, 0, 0, 0, 0, 4};
	SarimaParams params;
	params.sigma2 = 2.5;
	const StateSpaceSystem sys = state_space(order, params);
	CHECK(sys.dim() == 1);
	CHECK(sys.state_cov(0, 0) == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("AR(1) stationary variance") {
	SarimaOrder order{1, 0, 0, 0, 0, 0, 4};
	SarimaParams params;
	params.phi = {0.5};
	params.sigma2 = 1.0;
	const StateSpaceSystem sys = state_space(order, params);
	CHECK(sys.state_cov(0, 0) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("ARMA(1,1) autocovariances match the textbook closed form") {
	const double phi = 0.6;
	const double theta = 0.4;
	const double sigma2 = 1.7;
	SarimaOrder order{1, 0, 1, 0, 0, 0, 4};
	SarimaParams params;
	params.phi = {phi};
	params.theta = {theta};
	params.sigma2 = sigma2;
	const StateSpaceSystem sys = state_space(order, params);
	const auto gamma = autocovariances(sys, 5);

	const double gamma0 = sigma2 * (1.0 + 2.0 * phi * theta + theta * theta) / (1.0 - phi * phi);
	const double gamma1 = sigma2 * (1.0 + phi * theta) * (phi + theta) / (1.0 - phi * phi);
	CHECK(gamma[0] == doctest::Approx(gamma0).epsilon(1e-12));
	CHECK(gamma[1] == doctest::Approx(gamma1).epsilon(1e-12));
	CHECK(gamma[2] == doctest::Approx(phi * gamma1).epsilon(1e-12));
	CHECK(gamma[3] == doctest::Approx(phi * phi * gamma1).epsilon(1e-12));
}

TEST_CASE("state-space autocovariances agree with the psi-weight oracle") {
	NormalSampler rng(4242);
	for (int rep = 0; rep < 10; ++rep) {
		SarimaOrder order{2, 0, 1, 1, 0, 1, 4};
		SarimaParams params;
		params.phi = test_oracle::random_stable_block(rng, 2);
		{
			auto block = test_oracle::random_stable_block(rng, 1);
			for (double &v : block) v = -v;
			params.theta = block;
		}
		params.sphi = test_oracle::random_stable_block(rng, 1);
		{
			auto block = test_oracle::random_stable_block(rng, 1);
			for (double &v : block) v = -v;
			params.stheta = block;
		}
		params.sigma2 = 0.5 + std::abs(rng.next());

		const StateSpaceSystem sys = state_space(order, params);
		const auto gamma = autocovariances(sys, 8);
		const auto oracle = test_oracle::arma_autocovariances(order, params, 8);
		for (int k = 0; k <= 8; ++k) {
			CHECK(gamma[static_cast<std::size_t>(k)] ==
			      doctest::Approx(oracle[static_cast<std::size_t>(k)]).epsilon(1e-8));
		}
	}
}

TEST_CASE("non-stationary parameters are rejected") {
	SarimaOrder order{1, 0, 0, 0, 0, 0, 4};
	SarimaParams params;
	params.phi = {1.05};
	CHECK_THROWS_AS(state_space(order, params), std::domain_error);
}

TEST_CASE("seasonal AR(1) with s=1 equals plain AR(1)") {
	SarimaOrder seasonal{0, 0, 0, 1, 0, 0, 1};
	SarimaParams sp;
	sp.sphi = {0.7};
	sp.sigma2 = 1.3;
	SarimaOrder plain{1, 0, 0, 0, 0, 0, 4};
	SarimaParams pp;
	pp.phi = {0.7};
	pp.sigma2 = 1.3;
	const auto a = autocovariances(state_space(seasonal, sp), 4);
	const auto b = autocovariances(state_space(plain, pp), 4);
	for (int k = 0; k <= 4; ++k) {
		CHECK(a[static_cast<std::size_t>(k)] == doctest::Approx(b[static_cast<std::size_t>(k)]).epsilon(1e-12));
	}
}
