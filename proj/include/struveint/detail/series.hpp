#pragma once

#include <cmath>
#include <string>

#include "struveint/errors.hpp"

namespace struveint::detail {

/// Neumaier-compensated accumulator.  Alternating gamma-ratio series can
/// cancel several digits; the correction term recovers most of them.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double term) {
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + comp; }
};

inline constexpr double kSeriesTailRel = 1e-16;
inline constexpr int kSeriesMinIndex = 4;
inline constexpr int kSeriesMaxTerms = 10000;

/// Shared truncation rule: stop after term k once |term_k| <= 1e-16 |S_k|
/// held for two consecutive k with k >= 4.  The two-consecutive requirement
/// guards against stopping inside the hump of an alternating series.
template <typename TermFn>
double sum_series(TermFn&& term_fn, const char* what) {
    CompensatedSum acc;
    int small_run = 0;
    for (int k = 0; k < kSeriesMaxTerms; ++k) {
        const double term = term_fn(k);
        if (!std::isfinite(term)) {
            throw OverflowError(std::string(what) + ": series term at k=" + std::to_string(k) +
                                " exceeds double range");
        }
        acc.add(term);
        if (std::abs(term) <= kSeriesTailRel * std::abs(acc.value())) {
            ++small_run;
            if (small_run >= 2 && k >= kSeriesMinIndex) {
                return acc.value();
            }
        } else {
            small_run = 0;
        }
    }
    throw NonConvergenceError(std::string(what) + ": no convergence within " +
                              std::to_string(kSeriesMaxTerms) + " terms");
}

}  // namespace struveint::detail
