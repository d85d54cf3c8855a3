#pragma once

#include <functional>

namespace struveint {

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;  // level-to-level difference, safety factor 10
    long evaluations = 0;             // integrand calls
};

/// Tanh-sinh quadrature on (0, 1).  Absorbs algebraic endpoint singularities
/// x^(a-1), (1-x)^(b-1) with a, b > 0 without integrand-specific weights.
///
/// Nodes mapped within 1e-300 of an endpoint, or rounding onto one, are
/// skipped; with a plain real->real integrand, behavior steeper than about
/// (1-x)^(-1/2) at the *upper* endpoint is therefore resolved only to the
/// double-representable neighborhood of 1.  The lower endpoint has no such
/// limit (doubles are dense near 0).
///
/// Raises NonConvergenceError when the level cap leaves the estimate above
/// tolerance and NanError when f returns a non-finite value at a node.
QuadResult integrate_unit_interval(const std::function<double(double)>& f, double tol);

/// Exp-sinh quadrature on (0, inf) for integrands singular at 0 at worst as
/// x^(m-1) with m > 0 and decaying at least as x^-(1+eps).  Same error
/// contract as integrate_unit_interval.
QuadResult integrate_half_line(const std::function<double(double)>& f, double tol);

}  // namespace struveint
