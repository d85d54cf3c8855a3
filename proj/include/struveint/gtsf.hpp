#pragma once

#include <vector>

namespace struveint {

/// Parameter bundle of the generalized Galue-type Struve series
///   sum_k (-c)^k / (Gamma(nu k + delta) Gamma(ord_a k + p/xi + (b+2)/2))
///         * (z/2)^(2k+p+1).
struct GtsfParams {
    int ord_a = 1;  // integer series order (>= 1)
    double p = 0.0;
    double b = 0.0;
    double c = 0.0;
    double xi = 1.0;     // > 0
    double nu = 1.0;     // > 0
    double delta = 1.0;  // arbitrary; pole terms vanish by convention

    /// Second gamma-argument offset p/xi + (b+2)/2.
    double series_shift() const { return p / xi + 0.5 * b + 1.0; }

    /// Throws ValidationError naming the violated invariant.
    void validate() const;
};

/// Direct series evaluation.  Entire in z; z < 0 requires integer p+1
/// (DomainError otherwise), z = 0 with p+1 > 0 gives 0.
double gtsf_eval(const GtsfParams& params, double z);

/// The two-parameter Struve generalization: gtsf_eval at
/// ord_a = 1, nu = 1, delta = 3/2, xi = 1 (shared code path).
double struve_h_eval(double p, double b, double c, double z);

/// Same function through the Wright-series route,
///   (z/2)^(p+1) * 1Psi2[(1,1); (delta,nu), (p/xi + b/2 + 1, ord_a); -c z^2/4],
/// used as a consistency oracle against gtsf_eval.
double gtsf_wright_form(const GtsfParams& params, double z);

/// First max_terms series terms as summed by gtsf_eval (introspection hook
/// for partial-sum assertions).
std::vector<double> gtsf_terms(const GtsfParams& params, double z, int max_terms);

}  // namespace struveint
