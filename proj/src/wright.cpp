#include "struveint/wright.hpp"

#include <cmath>
#include <string>

#include "struveint/detail/series.hpp"
#include "struveint/errors.hpp"
#include "struveint/specfun.hpp"

namespace struveint {

namespace {

void check_finite(const WrightSeries& s, double z) {
    for (const auto& [a, al] : s.upper) {
        if (!std::isfinite(a) || !std::isfinite(al)) {
            throw DomainError("wright_eval: non-finite upper parameter");
        }
    }
    for (const auto& [b, be] : s.lower) {
        if (!std::isfinite(b) || !std::isfinite(be)) {
            throw DomainError("wright_eval: non-finite lower parameter");
        }
    }
    if (!std::isfinite(z)) {
        throw DomainError("wright_eval: non-finite argument");
    }
}

}  // namespace

double convergence_index(const WrightSeries& series) {
    double idx = 0.0;
    for (const auto& [b, be] : series.lower) {
        (void)b;
        idx += be;
    }
    for (const auto& [a, al] : series.upper) {
        (void)a;
        idx -= al;
    }
    return idx;
}

double wright_eval(const WrightSeries& series, double z) {
    check_finite(series, z);
    if (!(convergence_index(series) > -1.0)) {
        throw ConvergenceViolationError("wright_eval: convergence index " +
                                        std::to_string(convergence_index(series)) +
                                        " is not > -1");
    }

    const auto term = [&](int k) -> double {
        SignedLog t = SignedLog::one();
        for (const auto& [a, al] : series.upper) {
            const double arg = a + al * k;
            if (is_nonpositive_integer(arg)) {
                throw PoleError("wright_eval: numerator gamma pole at term k=" + std::to_string(k));
            }
            t *= log_gamma_signed(arg);
        }
        for (const auto& [b, be] : series.lower) {
            t *= reciprocal_gamma_signed(b + be * k);
            if (t.is_zero()) {
                return 0.0;
            }
        }
        t *= pow_signed(z, static_cast<double>(k));
        t *= reciprocal_gamma_signed(static_cast<double>(k) + 1.0);  // 1/k!
        return t.value();
    };
    return detail::sum_series(term, "wright_eval");
}

double pfq_eval(const std::vector<double>& upper, const std::vector<double>& lower, double z) {
    for (double b : lower) {
        if (is_nonpositive_integer(b)) {
            throw DomainError("pfq_eval: lower parameter " + std::to_string(b) +
                              " is a non-positive integer");
        }
        if (!std::isfinite(b)) {
            throw DomainError("pfq_eval: non-finite lower parameter");
        }
    }
    for (double a : upper) {
        if (!std::isfinite(a)) {
            throw DomainError("pfq_eval: non-finite upper parameter");
        }
    }
    if (!std::isfinite(z)) {
        throw DomainError("pfq_eval: non-finite argument");
    }

    double term = 1.0;
    const auto next = [&](int k) -> double {
        if (k == 0) {
            term = 1.0;
            return term;
        }
        const double n = static_cast<double>(k - 1);
        double factor = z / static_cast<double>(k);
        for (double a : upper) {
            factor *= a + n;
        }
        for (double b : lower) {
            factor /= b + n;
        }
        term *= factor;
        return term;
    };
    return detail::sum_series(next, "pfq_eval");
}

}  // namespace struveint
