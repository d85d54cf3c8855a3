#pragma once

#include <cmath>

namespace struveint {

/// Absolute tolerance inside which an argument counts as a non-positive
/// integer (gamma pole).  Parameters in this library are user-supplied exact
/// reals; near-pole evaluation is not a supported regime.
inline constexpr double kPoleTol = 1e-12;

/// A real number stored as (log of magnitude, sign), so that products of
/// gamma factors never overflow.  sign == 0 encodes an exact zero and makes
/// log_abs meaningless.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;

    static SignedLog zero() { return {0.0, 0}; }
    static SignedLog one() { return {0.0, 1}; }
    static SignedLog from_value(double v);

    bool is_zero() const { return sign == 0; }

    /// sign * exp(log_abs).  May overflow to +/-inf or underflow to 0; the
    /// caller decides whether that is an error.
    double value() const;

    SignedLog& operator*=(const SignedLog& o);
    SignedLog operator*(const SignedLog& o) const {
        SignedLog r = *this;
        r *= o;
        return r;
    }
    SignedLog operator/(const SignedLog& o) const;
};

/// base^expo as a SignedLog.  Negative bases require an integer exponent
/// (within kPoleTol); 0^0 is 1, 0^negative raises DomainError.
SignedLog pow_signed(double base, double expo);

bool is_nonpositive_integer(double x, double tol = kPoleTol);

/// sin(pi*x) with exact argument reduction, stays accurate for large |x|.
double sin_pi(double x);

/// Gamma function for real x.  Lanczos rational approximation on [0.5, inf),
/// reflection formula below.  Raises PoleError at non-positive integers and
/// OverflowError when the result exceeds double range.
double gamma(double x);

/// Gamma in (log magnitude, sign) form; finite far past the point where
/// gamma() overflows.  Raises PoleError at non-positive integers.
SignedLog log_gamma_signed(double x);

/// 1/Gamma(x) as a total function: exactly 0 at non-positive integers
/// (entire-function convention), never throws.
double reciprocal_gamma(double x);

/// Same convention, in SignedLog form (sign 0 at the zeros).
SignedLog reciprocal_gamma_signed(double x);

/// Rising factorial (lam)_n: 1 for n = 0, else lam(lam+1)...(lam+n-1).
/// Direct product for small n, gamma ratio in log space for large n.
double pochhammer(double lam, unsigned n);

}  // namespace struveint
