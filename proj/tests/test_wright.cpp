#include <doctest.h>

#include <cmath>
#include <random>

#include "struveint/errors.hpp"
#include "struveint/specfun.hpp"
#include "struveint/wright.hpp"
#include "support/ddreal.hpp"

using namespace struveint;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_CASE("convergence_index is the weight difference") {
    CHECK(convergence_index({{{1.0, 1.0}}, {{1.0, 1.0}}}) == 0.0);
    CHECK(convergence_index({{}, {}}) == 0.0);
    // weights of the first identity's series: upper (2,2,1), lower (1,1,2,2)
    WrightSeries t1;
    t1.upper = {{3.0, 2.0}, {2.5, 2.0}, {1.0, 1.0}};
    t1.lower = {{1.5, 1.0}, {1.5, 1.0}, {3.0, 2.0}, {4.0, 2.0}};
    CHECK(convergence_index(t1) == 1.0);
}

TEST_CASE("convergence_index is additive under concatenation") {
    WrightSeries a;
    a.upper = {{1.0, 0.5}, {2.0, 1.5}};
    a.lower = {{1.0, 2.0}};
    WrightSeries b;
    b.upper = {{0.7, 0.25}};
    b.lower = {{1.1, 0.75}, {2.2, 1.25}};
    WrightSeries both = a;
    both.upper.insert(both.upper.end(), b.upper.begin(), b.upper.end());
    both.lower.insert(both.lower.end(), b.lower.begin(), b.lower.end());
    CHECK(convergence_index(both) ==
          doctest::Approx(convergence_index(a) + convergence_index(b)).epsilon(1e-15));
}

TEST_CASE("wright_eval trivial reductions") {
    // Gamma(1+k)/Gamma(1+k) * sum 1/k! = e
    CHECK(rel(wright_eval({{{1.0, 1.0}}, {{1.0, 1.0}}}, 1.0), 2.718281828459045) <= 1e-14);
    // z = 0 keeps only the k = 0 term
    WrightSeries s;
    s.upper = {{1.0, 1.0}};
    s.lower = {{1.5, 1.0}, {2.0, 1.0}};
    CHECK(rel(wright_eval(s, 0.0), 1.0 / (gamma(1.5) * gamma(2.0))) <= 1e-14);
    CHECK(rel(wright_eval(s, 0.0), 1.1283791670955126) <= 1e-13);
}

TEST_CASE("wright_eval pinned value via the pFq reduction oracle") {
    // 2Psi1[(0.5,1),(1.5,1); (2,1); 0.25] = G(.5)G(1.5)/G(2) * 2F1(.5,1.5;2;.25)
    WrightSeries s;
    s.upper = {{0.5, 1.0}, {1.5, 1.0}};
    s.lower = {{2.0, 1.0}};
    const double oracle = (ddtest::dd_gamma_half(1) * ddtest::dd_gamma_half(3) /
                           ddtest::dd_gamma_half(4))
                              .to_double() *
                          ddtest::pfq_oracle({0.5, 1.5}, {2.0}, 0.25);
    CHECK(rel(oracle, 1.746305163785351) <= 5e-16);  // frozen 50-digit reference
    CHECK(rel(wright_eval(s, 0.25), 1.746305163785351) <= 1e-13);
}

TEST_CASE("wright_eval errors") {
    WrightSeries bad;
    bad.upper = {{1.0, 2.0}};
    bad.lower = {{1.0, 0.5}};
    CHECK(convergence_index(bad) == -1.5);
    CHECK_THROWS_AS(wright_eval(bad, 0.5), ConvergenceViolationError);

    WrightSeries pole;  // numerator gamma hits 0 at k = 0
    pole.upper = {{0.0, 1.0}};
    pole.lower = {{1.0, 0.5}};
    CHECK_THROWS_AS(wright_eval(pole, 0.5), PoleError);
}

TEST_CASE("denominator poles erase single terms") {
    // lower entry -2 + k: poles at k = 0, 1, 2 vanish, series continues
    WrightSeries s;
    s.upper = {{1.0, 1.0}};
    s.lower = {{-2.0, 1.0}};
    double expect = 0.0;
    for (int k = 3; k < 40; ++k) {
        expect += reciprocal_gamma(k - 2.0) / gamma(k + 1.0) * std::pow(0.5, k) * gamma(k + 1.0);
    }
    CHECK(rel(wright_eval(s, 0.5), expect) <= 1e-12);
}

TEST_CASE("pfq_eval pinned values") {
    CHECK(rel(pfq_eval({}, {}, 1.0), 2.718281828459045) <= 1e-14);
    CHECK(rel(pfq_eval({1.0, 1.0}, {2.0}, 0.5), 1.3862943611198906) <= 1e-13);  // 2 ln 2
    // frozen 1F2(1; 1.5, 2; 0.25), cross-checked against the dd oracle
    const double oracle = ddtest::pfq_oracle({1.0}, {1.5, 2.0}, 0.25);
    CHECK(rel(oracle, 1.0861612696304876) <= 5e-16);
    CHECK(rel(pfq_eval({1.0}, {1.5, 2.0}, 0.25), 1.0861612696304876) <= 1e-13);
}

TEST_CASE("pfq_eval rejects lower parameters at non-positive integers") {
    CHECK_THROWS_AS(pfq_eval({1.0}, {0.0}, 0.5), DomainError);
    CHECK_THROWS_AS(pfq_eval({1.0}, {-4.0}, 0.5), DomainError);
}

TEST_CASE("unit-weight reduction to pFq over random parameter sets") {
    std::mt19937_64 eng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        const int p = static_cast<int>(eng() % 3);
        const int q = p + static_cast<int>(eng() % 2);  // keep p <= q+1 comfortably
        WrightSeries s;
        std::vector<double> up;
        std::vector<double> low;
        for (int i = 0; i < p; ++i) {
            up.push_back(uniform(eng, 0.5, 3.0));
            s.upper.push_back({up.back(), 1.0});
        }
        for (int j = 0; j < q; ++j) {
            low.push_back(uniform(eng, 0.5, 3.0));
            s.lower.push_back({low.back(), 1.0});
        }
        const double z = uniform(eng, -0.5, 0.5);
        SignedLog pref = SignedLog::one();
        for (double a : up) {
            pref *= log_gamma_signed(a);
        }
        for (double b : low) {
            pref *= reciprocal_gamma_signed(b);
        }
        const double want = pref.value() * pfq_eval(up, low, z);
        const double got = wright_eval(s, z);
        CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("partial sums are monotone for positive-term series") {
    // all-positive gamma factors and z > 0: the running sum only grows
    std::vector<double> up = {0.75, 2.0};
    std::vector<double> low = {1.25, 1.5};
    double term = 1.0;
    double sum = term;
    for (int n = 0; n < 30; ++n) {
        double factor = 0.8 / (n + 1.0);
        for (double a : up) factor *= a + n;
        for (double b : low) factor /= b + n;
        term *= factor;
        CHECK(term > 0.0);
        sum += term;
    }
    CHECK(rel(pfq_eval(up, low, 0.8), sum) <= 1e-12);
}
