#include "sarimpact/sarima.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "sarimpact/transforms.hpp"

namespace sarimpact {

void SarimaOrder::validate() const {
	if (p < 0 || d < 0 || q < 0 || P < 0 || D < 0 || Q < 0) {
		throw std::invalid_argument("model orders must be nonnegative");
	}
	if (s < 1) {
		throw std::invalid_argument("seasonal period must be >= 1");
	}
}

namespace {

void skip_spaces(std::string_view text, std::size_t &i) {
	while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
}

int parse_int(std::string_view text, std::size_t &i) {
	skip_spaces(text, i);
	std::size_t start = i;
	while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
	if (i == start) {
		throw std::invalid_argument("malformed model order: '" + std::string(text) + "'");
	}
	return std::atoi(std::string(text.substr(start, i - start)).c_str());
}

void expect(std::string_view text, std::size_t &i, char ch) {
	skip_spaces(text, i);
	if (i >= text.size() || text[i] != ch) {
		throw std::invalid_argument("malformed model order: '" + std::string(text) + "'");
	}
	++i;
}

}  // namespace

SarimaOrder parse_order(std::string_view text) {
	SarimaOrder order;
	std::size_t i = 0;
	expect(text, i, '(');
	order.p = parse_int(text, i);
	expect(text, i, ',');
	order.d = parse_int(text, i);
	expect(text, i, ',');
	order.q = parse_int(text, i);
	expect(text, i, ')');
	skip_spaces(text, i);
	if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) ++i;
	skip_spaces(text, i);
	if (i < text.size()) {
		expect(text, i, '(');
		order.P = parse_int(text, i);
		expect(text, i, ',');
		order.D = parse_int(text, i);
		expect(text, i, ',');
		order.Q = parse_int(text, i);
		expect(text, i, ')');
		skip_spaces(text, i);
		if (i < text.size()) {
			order.s = parse_int(text, i);
			skip_spaces(text, i);
		}
	}
	if (i != text.size()) {
		throw std::invalid_argument("malformed model order: '" + std::string(text) + "'");
	}
	order.validate();
	return order;
}

std::string to_string(const SarimaOrder &order) {
	return "(" + std::to_string(order.p) + "," + std::to_string(order.d) + "," + std::to_string(order.q) + ")(" +
	       std::to_string(order.P) + "," + std::to_string(order.D) + "," + std::to_string(order.Q) + ")" +
	       std::to_string(order.s);
}

void SarimaParams::validate_dimensions(const SarimaOrder &order) const {
	if (static_cast<int>(phi.size()) != order.p || static_cast<int>(theta.size()) != order.q ||
	    static_cast<int>(sphi.size()) != order.P || static_cast<int>(stheta.size()) != order.Q) {
		throw std::invalid_argument("parameter dimensions do not match order " + to_string(order));
	}
	if (!(sigma2 > 0.0)) {
		throw std::invalid_argument("innovation variance must be positive");
	}
}

double SarimaParams::process_mean() const {
	double phi1 = 1.0;
	for (double v : phi) phi1 -= v;
	double sphi1 = 1.0;
	for (double v : sphi) sphi1 -= v;
	const double denom = phi1 * sphi1;
	if (denom == 0.0) {
		throw std::domain_error("AR polynomial has a unit root; process mean undefined");
	}
	return mu / denom;
}

namespace {

// Product of (1 - sum a_i L^i) and (1 - sum b_I L^{s*I}), returned in the
// same minus convention as the inputs.
std::vector<double> multiply_minus_convention(std::span<const double> a, std::span<const double> b, int s) {
	std::vector<double> poly(a.size() + b.size() * static_cast<std::size_t>(s) + 1, 0.0);
	poly[0] = 1.0;
	for (std::size_t i = 0; i < a.size(); ++i) poly[i + 1] = -a[i];
	std::vector<double> out(poly.size(), 0.0);
	// multiply by (1 - sum b_I L^{sI})
	for (std::size_t j = 0; j < poly.size(); ++j) out[j] = poly[j];
	for (std::size_t bi = 0; bi < b.size(); ++bi) {
		const std::size_t lag = (bi + 1) * static_cast<std::size_t>(s);
		for (std::size_t j = 0; j + lag < poly.size(); ++j) {
			out[j + lag] -= b[bi] * poly[j];
		}
	}
	// back to coefficient list a'_1..a'_deg with minus convention
	std::vector<double> coeffs(out.size() - 1);
	for (std::size_t j = 1; j < out.size(); ++j) coeffs[j - 1] = -out[j];
	return coeffs;
}

}  // namespace

ReducedForm expand_polynomials(const SarimaOrder &order, const SarimaParams &params) {
	order.validate();
	params.validate_dimensions(order);

	ReducedForm rf;
	rf.ar = multiply_minus_convention(params.phi, params.sphi, order.s);

	// MA uses the plus convention; negate into the minus convention, multiply,
	// negate back.
	std::vector<double> ma_minus(params.theta.size());
	for (std::size_t i = 0; i < params.theta.size(); ++i) ma_minus[i] = -params.theta[i];
	std::vector<double> sma_minus(params.stheta.size());
	for (std::size_t i = 0; i < params.stheta.size(); ++i) sma_minus[i] = -params.stheta[i];
	rf.ma = multiply_minus_convention(ma_minus, sma_minus, order.s);
	for (double &v : rf.ma) v = -v;

	return rf;
}

std::vector<double> pacf_to_ar(std::span<const double> pacf) {
	for (double r : pacf) {
		if (!(std::abs(r) < 1.0)) {
			throw std::domain_error("partial autocorrelations must lie in (-1, 1)");
		}
	}
	std::vector<double> a(pacf.begin(), pacf.end());
	std::vector<double> work(a);
	for (std::size_t j = 1; j < a.size(); ++j) {
		for (std::size_t k = 0; k < j; ++k) {
			work[k] = a[k] - pacf[j] * a[j - k - 1];
		}
		for (std::size_t k = 0; k < j; ++k) a[k] = work[k];
	}
	return a;
}

std::vector<double> ar_to_pacf(std::span<const double> ar) {
	std::vector<double> a(ar.begin(), ar.end());
	std::vector<double> pacf(a.size(), 0.0);
	for (std::size_t j = a.size(); j-- > 0;) {
		const double r = a[j];
		if (!(std::abs(r) < 1.0)) {
			throw std::domain_error("AR polynomial is not stable");
		}
		pacf[j] = r;
		if (j == 0) break;
		std::vector<double> prev(j);
		const double denom = 1.0 - r * r;
		for (std::size_t k = 0; k < j; ++k) {
			prev[k] = (a[k] + r * a[j - k - 1]) / denom;
		}
		for (std::size_t k = 0; k < j; ++k) a[k] = prev[k];
	}
	return pacf;
}

bool is_stable_polynomial(std::span<const double> recurrence_coeffs) {
	// Drop trailing zeros so padded representations behave like their
	// minimal-degree equivalents.
	std::size_t deg = recurrence_coeffs.size();
	while (deg > 0 && recurrence_coeffs[deg - 1] == 0.0) --deg;
	if (deg == 0) return true;
	try {
		ar_to_pacf(recurrence_coeffs.subspan(0, deg));
	} catch (const std::domain_error &) {
		return false;
	}
	return true;
}

bool is_stationary(const SarimaOrder &order, const SarimaParams &params) {
	(void)order;
	std::vector<double> sphi_as_nonseasonal(params.sphi.begin(), params.sphi.end());
	return is_stable_polynomial(params.phi) && is_stable_polynomial(sphi_as_nonseasonal);
}

bool is_invertible(const SarimaOrder &order, const SarimaParams &params) {
	(void)order;
	std::vector<double> neg(params.theta);
	for (double &v : neg) v = -v;
	std::vector<double> sneg(params.stheta);
	for (double &v : sneg) v = -v;
	return is_stable_polynomial(neg) && is_stable_polynomial(sneg);
}

std::vector<double> psi_weights(const SarimaOrder &order, const SarimaParams &params, int count) {
	if (count < 1) {
		throw std::invalid_argument("psi_weights count must be >= 1");
	}
	const ReducedForm rf = expand_polynomials(order, params);

	// Full AR side including the integration factors, recurrence convention.
	DifferenceSpec spec{order.d, order.D, order.s};
	const std::vector<double> diff_poly = difference_polynomial(spec);
	std::vector<double> full(rf.ar.size() + diff_poly.size() - 1, 0.0);
	{
		// minus-convention product of (1 - sum ar L^j) with diff_poly
		std::vector<double> arpoly(rf.ar.size() + 1, 0.0);
		arpoly[0] = 1.0;
		for (std::size_t i = 0; i < rf.ar.size(); ++i) arpoly[i + 1] = -rf.ar[i];
		std::vector<double> prod(arpoly.size() + diff_poly.size() - 1, 0.0);
		for (std::size_t i = 0; i < arpoly.size(); ++i) {
			for (std::size_t j = 0; j < diff_poly.size(); ++j) {
				prod[i + j] += arpoly[i] * diff_poly[j];
			}
		}
		for (std::size_t j = 1; j < prod.size(); ++j) full[j - 1] = -prod[j];
	}

	std::vector<double> psi(static_cast<std::size_t>(count), 0.0);
	psi[0] = 1.0;
	for (int k = 1; k < count; ++k) {
		double value = k <= static_cast<int>(rf.ma.size()) ? rf.ma[static_cast<std::size_t>(k - 1)] : 0.0;
		const int jmax = std::min<int>(k, static_cast<int>(full.size()));
		for (int j = 1; j <= jmax; ++j) {
			value += full[static_cast<std::size_t>(j - 1)] * psi[static_cast<std::size_t>(k - j)];
		}
		psi[static_cast<std::size_t>(k)] = value;
	}
	return psi;
}

}  // namespace sarimpact
