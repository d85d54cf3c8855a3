#include "struveint/specfun.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "struveint/errors.hpp"

namespace struveint {

namespace {

// ---------------------------------------------------------------------------
// Minimal double-double arithmetic for the log-gamma assembly.  The dominant
// term (x - 0.5) * log(t) reaches ~8e4 before final rounding; keeping the
// assembly in ~32 digits leaves quantization of the returned double as the
// only error source.
// ---------------------------------------------------------------------------

struct Dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline Dd quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline Dd two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline Dd two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline Dd dd_add(Dd a, Dd b) {
    Dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline Dd dd_add(Dd a, double b) {
    Dd s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline Dd dd_mul(Dd a, Dd b) {
    Dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline Dd dd_mul(Dd a, double b) {
    Dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline Dd dd_neg(Dd a) { return {-a.hi, -a.lo}; }

inline Dd dd_div(Dd a, Dd b) {
    const double q1 = a.hi / b.hi;
    Dd r = dd_add(a, dd_neg(dd_mul(b, q1)));
    const double q2 = r.hi / b.hi;
    r = dd_add(r, dd_neg(dd_mul(b, q2)));
    const double q3 = r.hi / b.hi;
    return dd_add(quick_two_sum(q1, q2), q3);
}

constexpr Dd kLn2{0.6931471805599453, 2.3190468138462996e-17};
constexpr Dd kLnPi{1.1447298858494002, 1.0265951162707826e-17};
constexpr Dd kHalfLn2Pi{0.9189385332046728, -3.8782941580672414e-17};
constexpr double kSqrtHalf = 0.7071067811865476;

// log(x) to ~1e-32: frexp reduction, then 2 atanh((m-1)/(m+1)) with
// |u| <= 0.1716 summed in double-double.
Dd dd_log(double x) {
    int e = 0;
    double m = std::frexp(x, &e);  // m in [0.5, 1)
    if (m < kSqrtHalf) {
        m *= 2.0;
        e -= 1;
    }
    const Dd u = dd_div({m - 1.0, 0.0}, {m + 1.0, 0.0});
    const Dd u2 = dd_mul(u, u);
    Dd term = u;
    Dd sum = u;
    for (int k = 3; k <= 45; k += 2) {
        term = dd_mul(term, u2);
        sum = dd_add(sum, dd_div(term, {static_cast<double>(k), 0.0}));
        if (std::abs(term.hi) < 1e-34) {
            break;
        }
    }
    return dd_add(dd_mul(kLn2, static_cast<double>(e)), dd_mul(sum, 2.0));
}

// ---------------------------------------------------------------------------
// Lanczos rational approximation, g = 6.0246..., N = 13, tuned for double.
// lanczos_sum carries the sqrt(2*pi) normalization:
//   Gamma(x) = lanczos_sum(x) * t^(x-1/2) * exp(-t),  t = x + g - 1/2.
// ---------------------------------------------------------------------------

constexpr double kLanczosG = 6.024680040776729583740234375;

double evaluate_rational13(const double* num, const double* den, double z) {
    double s1;
    double s2;
    if (z <= 1.0) {
        s1 = num[12];
        s2 = den[12];
        for (int i = 11; i >= 0; --i) {
            s1 = s1 * z + num[i];
            s2 = s2 * z + den[i];
        }
    } else {
        const double t = 1.0 / z;
        s1 = num[0];
        s2 = den[0];
        for (int i = 1; i <= 12; ++i) {
            s1 = s1 * t + num[i];
            s2 = s2 * t + den[i];
        }
    }
    return s1 / s2;
}

const double kLanczosDen[13] = {
    0.0,          39916800.0, 120543840.0, 150917976.0, 105258076.0, 45995730.0, 13339535.0,
    2637558.0,    357423.0,   32670.0,     1925.0,      66.0,        1.0,
};

double lanczos_sum(double x) {
    static const double num[13] = {
        23531376880.41075968857200767445163675473,
        42919803642.64909876895789904700198885093,
        35711959237.35566804944018545154716670596,
        17921034426.03720969991975575445893111267,
        6039542586.35202800506429164430729792107,
        1439720407.311721673663223072794912393972,
        248874557.8620541565114603864132294232163,
        31426415.58540019438061423162831820536287,
        2876370.628935372441225409051620849613599,
        186056.2653952234950402949897160456992822,
        8071.672002365816210638002902272250613822,
        210.8242777515793458725097339207133627117,
        2.506628274631000270164908177133837338626,
    };
    return evaluate_rational13(num, kLanczosDen, x);
}

double lanczos_sum_expg_scaled(double x) {
    static const double num[13] = {
        56906521.91347156388090791033559122686859,
        103794043.1163445451906271053616070238554,
        86363131.28813859145546927288977868422342,
        43338889.32467613834773723740590533316085,
        14605578.08768506808414169982791359218571,
        3481712.15498064590882071018964774556468,
        601859.6171681098786670226533699352302507,
        75999.29304014542649875303443598909137092,
        6955.999602515376140356310115515198987526,
        449.9445569063168119446858607650988409623,
        19.51992788247617482847860966235652136208,
        0.5098416655656676188125178644804694509993,
        0.006061842346248906525783753964555936883222,
    };
    return evaluate_rational13(num, kLanczosDen, x);
}

// log|Gamma(x)| for x >= 0.5, double-double assembly.
double lgamma_core(double x) {
    const double t = x + (kLanczosG - 0.5);
    Dd r = dd_mul(dd_log(t), x - 0.5);
    r = dd_add(r, -t);
    r = dd_add(r, std::log(lanczos_sum_expg_scaled(x)) + kLanczosG);
    return r.hi + r.lo;
}

void check_pole(double x, const char* what) {
    if (is_nonpositive_integer(x)) {
        throw PoleError(std::string(what) + ": gamma pole at x = " + std::to_string(x));
    }
    if (std::isnan(x)) {
        throw DomainError(std::string(what) + ": NaN argument");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// SignedLog
// ---------------------------------------------------------------------------

SignedLog SignedLog::from_value(double v) {
    if (v == 0.0) {
        return zero();
    }
    return {std::log(std::abs(v)), v > 0 ? 1 : -1};
}

double SignedLog::value() const {
    if (sign == 0) {
        return 0.0;
    }
    return sign * std::exp(log_abs);
}

SignedLog& SignedLog::operator*=(const SignedLog& o) {
    if (sign == 0 || o.sign == 0) {
        *this = zero();
    } else {
        log_abs += o.log_abs;
        sign *= o.sign;
    }
    return *this;
}

SignedLog SignedLog::operator/(const SignedLog& o) const {
    if (o.sign == 0) {
        throw DomainError("SignedLog: division by zero");
    }
    if (sign == 0) {
        return zero();
    }
    return {log_abs - o.log_abs, sign * o.sign};
}

SignedLog pow_signed(double base, double expo) {
    if (std::isnan(base) || std::isnan(expo)) {
        throw DomainError("pow_signed: NaN argument");
    }
    if (base == 0.0) {
        if (expo > 0.0) {
            return SignedLog::zero();
        }
        if (expo == 0.0) {
            return SignedLog::one();
        }
        throw DomainError("pow_signed: zero base with negative exponent");
    }
    if (base < 0.0) {
        const double r = std::round(expo);
        if (std::abs(expo - r) > kPoleTol) {
            throw DomainError("pow_signed: negative base with non-integer exponent");
        }
        const bool odd = std::fmod(std::abs(r), 2.0) == 1.0;
        return {expo * std::log(-base), odd ? -1 : 1};
    }
    return {expo * std::log(base), 1};
}

// ---------------------------------------------------------------------------
// Gamma family
// ---------------------------------------------------------------------------

bool is_nonpositive_integer(double x, double tol) {
    if (!(x < 0.5)) {
        return false;
    }
    const double r = std::round(x);
    return r <= 0.0 && std::abs(x - r) <= tol;
}

double sin_pi(double x) {
    double r = std::remainder(x, 2.0);  // r in [-1, 1], sin(pi x) = sin(pi r)
    if (r > 0.5) {
        r = 1.0 - r;
    } else if (r < -0.5) {
        r = -1.0 - r;
    }
    return std::sin(M_PI * r);
}

SignedLog log_gamma_signed(double x) {
    check_pole(x, "log_gamma_signed");
    if (x >= 0.5) {
        return {lgamma_core(x), 1};
    }
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
    const double s = sin_pi(x);
    Dd r = dd_add(kLnPi, -std::log(std::abs(s)));
    r = dd_add(r, -lgamma_core(1.0 - x));
    return {r.hi + r.lo, s < 0 ? -1 : 1};
}

double gamma(double x) {
    check_pole(x, "gamma");
    if (x >= 0.5) {
        if (x > 171.7) {
            throw OverflowError("gamma: result exceeds double range at x = " + std::to_string(x));
        }
        const double sum = lanczos_sum(x);
        const double t = x + (kLanczosG - 0.5);
        if ((x - 0.5) * std::log(t) > 700.0) {
            // Split the power so neither factor overflows before the exp(-t)
            // damping is applied.
            const double hp = std::pow(t, 0.5 * x - 0.25);
            return sum * (hp / std::exp(t)) * hp;
        }
        return sum * std::pow(t, x - 0.5) / std::exp(t);
    }
    const double v = log_gamma_signed(x).value();
    if (std::isinf(v)) {
        throw OverflowError("gamma: result exceeds double range at x = " + std::to_string(x));
    }
    return v;
}

SignedLog reciprocal_gamma_signed(double x) {
    if (is_nonpositive_integer(x)) {
        return SignedLog::zero();
    }
    const SignedLog g = log_gamma_signed(x);
    return {-g.log_abs, g.sign};
}

double reciprocal_gamma(double x) { return reciprocal_gamma_signed(x).value(); }

double pochhammer(double lam, unsigned n) {
    if (n == 0) {
        return 1.0;
    }
    const bool lam_pole = is_nonpositive_integer(lam);
    if (n <= 64 || lam_pole) {
        if (lam_pole && -std::round(lam) <= static_cast<double>(n - 1)) {
            return 0.0;  // the product crosses an exact zero factor
        }
        double r = 1.0;
        const double base = lam_pole ? std::round(lam) : lam;
        for (unsigned i = 0; i < n; ++i) {
            r *= base + static_cast<double>(i);
        }
        return r;
    }
    return (log_gamma_signed(lam + static_cast<double>(n)) / log_gamma_signed(lam)).value();
}

}  // namespace struveint
