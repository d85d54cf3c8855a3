#pragma once

#include <utility>
#include <vector>

namespace struveint {

/// Parameter pairs of the generalized Wright hypergeometric series
///   sum_k  prod_i Gamma(a_i + alpha_i k) / prod_j Gamma(b_j + beta_j k) * z^k / k!
/// upper holds (a_i, alpha_i), lower holds (b_j, beta_j).
struct WrightSeries {
    std::vector<std::pair<double, double>> upper;
    std::vector<std::pair<double, double>> lower;
};

/// sum(beta_j) - sum(alpha_i).  The series converges for every argument when
/// this exceeds -1.
double convergence_index(const WrightSeries& series);

/// Evaluate the Wright series at z.  Numerator gamma factors are formed in
/// SignedLog; denominator factors use the reciprocal-gamma zero convention,
/// so a denominator pole silently kills that term.  Raises
/// ConvergenceViolationError when the convergence index is <= -1 and
/// PoleError if a numerator gamma lands on a pole at some required k.
double wright_eval(const WrightSeries& series, double z);

/// Generalized hypergeometric series pFq via Pochhammer recurrences.
/// Raises DomainError when a lower parameter is a non-positive integer.
double pfq_eval(const std::vector<double>& upper, const std::vector<double>& lower, double z);

}  // namespace struveint
