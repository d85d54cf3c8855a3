#include "struveint/gtsf.hpp"

#include <cmath>
#include <string>

#include "struveint/detail/series.hpp"
#include "struveint/errors.hpp"
#include "struveint/specfun.hpp"
#include "struveint/wright.hpp"

namespace struveint {

namespace {

bool integer_within_tol(double x) { return std::abs(x - std::round(x)) <= kPoleTol; }

// Handles the z = 0 / z < 0 edge cases shared by both evaluation routes.
// Returns true when the value is fully determined without summing.
bool prefactor_shortcut(const GtsfParams& g, double z, double* out) {
    const double p1 = g.p + 1.0;
    if (z == 0.0) {
        if (p1 > 0.0) {
            *out = 0.0;
            return true;
        }
        if (p1 == 0.0) {
            // (z/2)^0 = 1; only the k = 0 term survives.
            *out = reciprocal_gamma(g.delta) * reciprocal_gamma(g.series_shift());
            return true;
        }
        throw DomainError("gtsf_eval: z = 0 with p + 1 < 0");
    }
    if (z < 0.0 && !integer_within_tol(p1)) {
        throw DomainError("gtsf_eval: z < 0 requires integer p + 1");
    }
    return false;
}

}  // namespace

void GtsfParams::validate() const {
    if (ord_a < 1) {
        throw ValidationError("GtsfParams: ord_a must be >= 1");
    }
    if (!(xi > 0.0)) {
        throw ValidationError("GtsfParams: xi must be > 0");
    }
    if (!(nu > 0.0)) {
        throw ValidationError("GtsfParams: nu must be > 0");
    }
    for (double v : {p, b, c, xi, nu, delta}) {
        if (!std::isfinite(v)) {
            throw ValidationError("GtsfParams: all parameters must be finite");
        }
    }
}

double gtsf_eval(const GtsfParams& params, double z) {
    params.validate();
    if (!std::isfinite(z)) {
        throw DomainError("gtsf_eval: non-finite argument");
    }
    double shortcut = 0.0;
    if (prefactor_shortcut(params, z, &shortcut)) {
        return shortcut;
    }

    const SignedLog pref = pow_signed(z / 2.0, params.p + 1.0);
    const double log_zsq = 2.0 * std::log(std::abs(z) / 2.0);  // log((z/2)^2)
    const double q = params.series_shift();

    const auto term = [&](int k) -> double {
        SignedLog t = pow_signed(-params.c, static_cast<double>(k));
        if (t.is_zero()) {
            return 0.0;
        }
        t *= reciprocal_gamma_signed(params.nu * k + params.delta);
        t *= reciprocal_gamma_signed(params.ord_a * static_cast<double>(k) + q);
        if (t.is_zero()) {
            return 0.0;
        }
        t *= SignedLog{k * log_zsq, 1};
        t *= pref;
        return t.value();
    };
    return detail::sum_series(term, "gtsf_eval");
}

double struve_h_eval(double p, double b, double c, double z) {
    GtsfParams g;
    g.ord_a = 1;
    g.p = p;
    g.b = b;
    g.c = c;
    g.xi = 1.0;
    g.nu = 1.0;
    g.delta = 1.5;
    return gtsf_eval(g, z);
}

double gtsf_wright_form(const GtsfParams& params, double z) {
    params.validate();
    if (!std::isfinite(z)) {
        throw DomainError("gtsf_wright_form: non-finite argument");
    }
    double shortcut = 0.0;
    if (prefactor_shortcut(params, z, &shortcut)) {
        return shortcut;
    }

    WrightSeries series;
    series.upper = {{1.0, 1.0}};
    series.lower = {{params.delta, params.nu},
                    {params.series_shift(), static_cast<double>(params.ord_a)}};
    const double arg = -params.c * (z / 2.0) * (z / 2.0);
    const SignedLog pref = pow_signed(z / 2.0, params.p + 1.0);
    return (pref * SignedLog::from_value(wright_eval(series, arg))).value();
}

std::vector<double> gtsf_terms(const GtsfParams& params, double z, int max_terms) {
    params.validate();
    std::vector<double> terms;
    if (max_terms <= 0 || !std::isfinite(z)) {
        return terms;
    }
    double shortcut = 0.0;
    if (prefactor_shortcut(params, z, &shortcut)) {
        terms.push_back(shortcut);
        return terms;
    }
    const SignedLog pref = pow_signed(z / 2.0, params.p + 1.0);
    const double log_zsq = 2.0 * std::log(std::abs(z) / 2.0);
    const double q = params.series_shift();
    terms.reserve(static_cast<size_t>(max_terms));
    for (int k = 0; k < max_terms; ++k) {
        SignedLog t = pow_signed(-params.c, static_cast<double>(k));
        t *= reciprocal_gamma_signed(params.nu * k + params.delta);
        t *= reciprocal_gamma_signed(params.ord_a * static_cast<double>(k) + q);
        t *= SignedLog{k * log_zsq, 1};
        t *= pref;
        terms.push_back(t.value());
    }
    return terms;
}

}  // namespace struveint
