#include "struveint/quadrature.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "struveint/detail/series.hpp"
#include "struveint/errors.hpp"

namespace struveint {

namespace {

constexpr int kMaxLevel = 12;
constexpr double kTMax = 7.0;
constexpr double kClip = 1e-300;     // node-to-endpoint clipping distance
constexpr double kAbsFloor = 1e-300;  // makes the relative tolerance meaningful near zero
constexpr double kSafety = 10.0;
constexpr int kMinLevel = 3;  // coarse levels can agree by accident

struct Node {
    double x;
    double w;
};

// One abscissa table per refinement level.  Level 0 holds all integer
// multiples of h = 1, level l > 0 the odd multiples of h = 2^-l, so the
// trapezoid sum at level l reuses every earlier evaluation.
using Tables = std::vector<std::vector<Node>>;

Tables build_tables(bool unit_interval) {
    Tables tables(kMaxLevel + 1);
    constexpr double half_pi = M_PI / 2.0;
    for (int level = 0; level <= kMaxLevel; ++level) {
        const double h = std::ldexp(1.0, -level);
        const int stride = level == 0 ? 1 : 2;
        const int start = level == 0 ? 0 : 1;
        for (int j = start;; j += stride) {
            const double t = j * h;
            if (t > kTMax) {
                break;
            }
            for (int s : {1, -1}) {
                if (j == 0 && s == -1) {
                    continue;
                }
                const double ts = s * t;
                const double u = half_pi * std::sinh(ts);
                double x;
                double w;
                if (unit_interval) {
                    // x = (1 + tanh(u))/2 evaluated as a sigmoid from both ends
                    const double dist = 1.0 / (1.0 + std::exp(2.0 * std::abs(u)));
                    x = u >= 0 ? 1.0 - dist : dist;
                    if (dist < kClip || x <= 0.0 || x >= 1.0) {
                        continue;
                    }
                    const double ch = std::cosh(u);
                    w = half_pi * std::cosh(ts) / (2.0 * ch * ch);
                } else {
                    x = std::exp(u);
                    if (x < kClip || x > 1e300) {
                        continue;
                    }
                    w = x * half_pi * std::cosh(ts);
                }
                if (!std::isfinite(w) || w < kClip) {
                    continue;
                }
                tables[level].push_back({x, w});
            }
        }
    }
    return tables;
}

const Tables& unit_tables() {
    static const Tables t = build_tables(true);
    return t;
}

const Tables& half_line_tables() {
    static const Tables t = build_tables(false);
    return t;
}

QuadResult integrate(const Tables& tables, const std::function<double(double)>& f, double tol,
                     const char* what) {
    if (!(tol > 0.0)) {
        throw PreconditionError(std::string(what) + ": tol must be > 0");
    }
    long evals = 0;
    detail::CompensatedSum raw;  // sum of w*f over all nodes seen so far
    double prev = 0.0;
    for (int level = 0; level <= kMaxLevel; ++level) {
        for (const Node& n : tables[level]) {
            const double fx = f(n.x);
            ++evals;
            if (!std::isfinite(fx)) {
                throw NanError(std::string(what) + ": integrand returned a non-finite value at x = " +
                               std::to_string(n.x));
            }
            raw.add(n.w * fx);
        }
        const double h = std::ldexp(1.0, -level);
        const double value = h * raw.value();
        if (level >= kMinLevel) {
            const double est = kSafety * std::abs(value - prev);
            if (est <= std::max(tol * std::abs(value), kAbsFloor)) {
                return {value, est, evals};
            }
        }
        prev = value;
    }
    throw NonConvergenceError(std::string(what) + ": level cap reached with estimate above tolerance");
}

}  // namespace

QuadResult integrate_unit_interval(const std::function<double(double)>& f, double tol) {
    return integrate(unit_tables(), f, tol, "integrate_unit_interval");
}

QuadResult integrate_half_line(const std::function<double(double)>& f, double tol) {
    return integrate(half_line_tables(), f, tol, "integrate_half_line");
}

}  // namespace struveint
