#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "sarimpact/simulate.hpp"
#include "sarimpact/transforms.hpp"

using namespace sarimpact;

namespace {

QuarterlySeries make_series(std::vector<double> values, Scale scale = Scale::kLevel,
                            QuarterIndex start = {2012, 2}) {
	QuarterlySeries s;
	s.start = start;
	s.values = std::move(values);
	s.scale = scale;
	s.class_name = "test";
	return s;
}

}  // namespace

TEST_CASE("quarter parsing and arithmetic") {
	CHECK(parse_quarter("2012Q2") == QuarterIndex{2012, 2});
	CHECK(parse_quarter("2019Q4") == QuarterIndex{2019, 4});
	CHECK_THROWS_AS(parse_quarter("2020Q5"), std::invalid_argument);
	CHECK_THROWS_AS(parse_quarter("2020-1"), std::invalid_argument);
	CHECK_THROWS_AS(parse_quarter("20Q1"), std::invalid_argument);

	CHECK(advance({2019, 4}, 1) == QuarterIndex{2020, 1});
	CHECK(advance({2020, 1}, -1) == QuarterIndex{2019, 4});
	CHECK(advance({2012, 2}, 30) == QuarterIndex{2019, 4});
	CHECK(quarters_between({2012, 2}, {2019, 4}) == 30);
	CHECK(QuarterIndex{2019, 4} < QuarterIndex{2020, 1});
	CHECK(to_string(QuarterIndex{2012, 2}) == "2012Q2");
}

TEST_CASE("log transform") {
	const double e = std::exp(1.0);
	const auto logged = log_transform(make_series({1.0, e, e * e}));
	CHECK(logged.scale == Scale::kLog);
	CHECK(logged.values[0] == doctest::Approx(0.0).epsilon(1e-12));
	CHECK(logged.values[1] == doctest::Approx(1.0).epsilon(1e-12));
	CHECK(logged.values[2] == doctest::Approx(2.0).epsilon(1e-12));

	CHECK_THROWS_AS(log_transform(make_series({1.0, 0.0})), std::domain_error);
	const auto with_offset = log_transform(make_series({1.0, 0.0}), LogOptions{1.0});
	CHECK(with_offset.values[1] == doctest::Approx(0.0));

	// Table value: MTPL gross claims, 2020Q1
	const auto mtpl = log_transform(make_series({486558.0}));
	CHECK(mtpl.values[0] == doctest::Approx(13.0951113924).epsilon(1e-9));

	// round trip
	const auto series = make_series({486558.0, 860049.0, 12.5});
	const auto back = exp_transform(log_transform(series));
	for (std::size_t i = 0; i < series.size(); ++i) {
		CHECK(back.values[i] == doctest::Approx(series.values[i]).epsilon(1e-12));
	}
}

TEST_CASE("differencing") {
	SUBCASE("constant series dies under d=1") {
		const auto diffed = difference(make_series({5.0, 5.0, 5.0, 5.0}), DifferenceSpec{1, 0, 4});
		CHECK(diffed.values == std::vector<double>{0.0, 0.0, 0.0});
		CHECK(diffed.scale == Scale::kDifferenced);
		CHECK(diffed.start == QuarterIndex{2012, 3});
	}
	SUBCASE("period-4 series dies under D=1") {
		const auto diffed =
		    difference(make_series({1.0, 2.0, 3.0, 7.0, 1.0, 2.0, 3.0, 7.0}), DifferenceSpec{0, 1, 4});
		CHECK(diffed.values == std::vector<double>{0.0, 0.0, 0.0, 0.0});
	}
	SUBCASE("second differences by hand") {
		const auto diffed = difference(make_series({1.0, 2.0, 4.0, 7.0, 11.0}), DifferenceSpec{2, 0, 4});
		CHECK(diffed.values == std::vector<double>{1.0, 1.0, 1.0});
	}
	SUBCASE("length contract and short-series error") {
		const auto series = make_series(std::vector<double>(12, 1.0));
		CHECK(difference(series, DifferenceSpec{1, 1, 4}).size() == 7);
		CHECK_THROWS_AS(difference(make_series({1.0, 2.0}), DifferenceSpec{1, 1, 4}), std::invalid_argument);
	}
}

TEST_CASE("integration inverts differencing") {
	SUBCASE("zeros with one anchor give a constant") {
		const auto diffed = make_series({0.0, 0.0, 0.0}, Scale::kDifferenced);
		const double anchor[] = {3.25};
		const auto series = integrate(diffed, anchor, DifferenceSpec{1, 0, 4});
		CHECK(series.values == std::vector<double>{3.25, 3.25, 3.25, 3.25});
	}
	SUBCASE("hand round trip, d=2") {
		const auto original = make_series({1.0, 2.0, 4.0, 7.0, 11.0});
		const DifferenceSpec spec{2, 0, 4};
		const auto diffed = difference(original, spec);
		const double anchors[] = {1.0, 2.0};
		const auto back = integrate(diffed, anchors, spec);
		CHECK(back.values == original.values);
		CHECK(back.start == original.start);
	}
	SUBCASE("random round trips, d=1 D=1 s=4") {
		NormalSampler rng(20240517);
		const DifferenceSpec spec{1, 1, 4};
		for (int rep = 0; rep < 50; ++rep) {
			std::vector<double> values(20);
			for (double &v : values) v = 10.0 + rng.next();
			const auto original = make_series(values, Scale::kLog);
			const auto diffed = difference(original, spec);
			const auto back =
			    integrate(diffed, std::span<const double>(values).subspan(0, 5), spec);
			REQUIRE(back.size() == original.size());
			for (std::size_t i = 0; i < values.size(); ++i) {
				CHECK(back.values[i] == doctest::Approx(values[i]).epsilon(1e-10));
			}
		}
	}
	SUBCASE("anchor count is checked") {
		const auto diffed = make_series({0.0, 0.0}, Scale::kDifferenced);
		const double anchors[] = {1.0, 2.0};
		CHECK_THROWS_AS(integrate(diffed, anchors, DifferenceSpec{1, 0, 4}), std::invalid_argument);
	}
	SUBCASE("integrate_continue extends the recursion") {
		const auto original = make_series({1.0, 4.0, 9.0, 16.0, 25.0, 36.0});
		const DifferenceSpec spec{2, 0, 4};
		const auto diffed = difference(original, spec);  // all 2s
		const std::vector<double> history(original.values.begin(), original.values.begin() + 4);
		const std::vector<double> future{2.0, 2.0};
		const auto extended = integrate_continue(history, future, spec);
		CHECK(extended[0] == doctest::Approx(25.0));
		CHECK(extended[1] == doctest::Approx(36.0));
	}
}

TEST_CASE("growth rates") {
	SUBCASE("no change means zero") {
		const auto rates = growth_rate(make_series({7.0, 7.0, 7.0}), 1);
		CHECK(rates == std::vector<double>{0.0, 0.0});
	}
	SUBCASE("published MTPL quarter-on-quarter cell") {
		const auto rates = growth_rate(make_series({486558.0, 860049.0}), 1);
		CHECK(rates.size() == 1);
		CHECK(std::round(rates[0] * 100.0) / 100.0 == doctest::Approx(76.76));
	}
	SUBCASE("scale invariance") {
		NormalSampler rng(7);
		std::vector<double> values(12);
		for (double &v : values) v = 100.0 + 10.0 * std::abs(rng.next());
		std::vector<double> scaled = values;
		for (double &v : scaled) v *= 37.5;
		const auto a = growth_rate(make_series(values), 4);
		const auto b = growth_rate(make_series(scaled), 4);
		REQUIRE(a.size() == b.size());
		for (std::size_t i = 0; i < a.size(); ++i) {
			CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
		}
	}
	SUBCASE("errors") {
		CHECK_THROWS_AS(growth_rate(make_series({1.0}), 1), std::invalid_argument);
		auto series = make_series({1.0, 2.0});
		series.scale = Scale::kLog;
		CHECK_THROWS_AS(growth_rate(series, 1), std::invalid_argument);
	}
}
