#include <doctest.h>

#include <cmath>

#include "struveint/errors.hpp"
#include "struveint/identities.hpp"
#include "struveint/specfun.hpp"

using namespace struveint;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

constexpr double kQuarterInvPi = 0.07957747154594767;  // 1/(4 pi)

GtsfParams desk_gtsf(double c) {
    GtsfParams g;
    g.ord_a = 1;
    g.p = 0.0;
    g.b = 1.0;
    g.c = c;
    g.xi = 1.0;
    g.nu = 1.0;
    g.delta = 1.5;
    return g;
}

IdentityCase desk_t1(double c, double y) {
    IdentityCase item;
    item.id = CaseId::T1;
    item.gtsf = desk_gtsf(c);
    item.mu = 1.0;
    item.lambda = 2.0;
    item.shift_a = 1.0;
    item.y = y;
    return item;
}

}  // namespace

TEST_CASE("oberhettinger_kernel") {
    CHECK(oberhettinger_kernel(0.0, 1.0) == 1.0);
    CHECK(oberhettinger_kernel(1.5, 2.0) == doctest::Approx(6.3722813232690143).epsilon(1e-15));
    const double big = oberhettinger_kernel(1e8, 1.0);
    CHECK(std::isfinite(big));
    CHECK(rel(big, 2.0e8 + 2.0) <= 1e-8);
    CHECK_THROWS_AS(oberhettinger_kernel(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(oberhettinger_kernel(1.0, 0.0), DomainError);
}

TEST_CASE("base half-line formula") {
    const IdentityReport r1 = check_base_oberhettinger(1.0, 3.0, 1.0, 1e-8);
    CHECK(rel(r1.lhs.value, 0.125) <= 1e-9);
    CHECK(r1.rhs_printed == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(r1.status_printed == Status::CONFIRMED);
    CHECK(r1.status_derived == Status::CONFIRMED);

    const IdentityReport r2 = check_base_oberhettinger(1.0, 3.0, 2.0, 1e-8);
    CHECK(r2.rhs_printed == doctest::Approx(0.03125).epsilon(1e-14));
    CHECK(r2.status_printed == Status::CONFIRMED);

    CHECK_THROWS_AS(check_base_oberhettinger(2.0, 1.0, 1.0, 1e-8), PreconditionError);
    CHECK_THROWS_AS(check_base_oberhettinger(1.0, 3.0, -1.0, 1e-8), PreconditionError);
    CHECK_THROWS_AS(check_base_oberhettinger(1.0, 3.0, 1.0, 0.0), PreconditionError);
}

TEST_CASE("base unit-interval formula") {
    const IdentityReport r1 = check_base_lavoie_trottier(1.0, 1.0, 1e-10);
    CHECK(rel(r1.rhs_printed, 4.0 / 9.0) <= 1e-15);
    CHECK(rel(r1.lhs.value, 4.0 / 9.0) <= 1e-12);
    CHECK(r1.status_printed == Status::CONFIRMED);

    const IdentityReport r2 = check_base_lavoie_trottier(0.5, 0.5, 1e-9);
    CHECK(rel(r2.rhs_printed, 2.0943951023931957) <= 1e-13);  // 2 pi / 3
    CHECK(r2.status_printed == Status::CONFIRMED);

    CHECK_THROWS_AS(check_base_lavoie_trottier(0.0, 1.0, 1e-8), PreconditionError);
}

TEST_CASE("desk case: every route gives 1/(4 pi)") {
    const IdentityCase item = desk_t1(0.0, 1.0);
    const QuadResult lhs = lhs_integral(item, 1e-9);
    CHECK(rel(lhs.value, kQuarterInvPi) <= 1e-9);
    CHECK(rel(rhs_printed(item), kQuarterInvPi) <= 1e-13);
    CHECK(rel(rhs_derived(item, 1e-9), kQuarterInvPi) <= 1e-13);

    const IdentityReport r = verify_case(item, 1e-6);
    CHECK(r.status_printed == Status::CONFIRMED);
    CHECK(r.status_derived == Status::CONFIRMED);
    CHECK(r.rel_err_printed <= 1e-8);
    CHECK(r.rel_err_derived <= 1e-8);
}

TEST_CASE("full-series T1 point agrees with the frozen term-wise value") {
    // mu=1, lambda=2, c=1, y=0.5: sum_k (-1)^k 0.25^(2k+1) /
    //   (Gamma(k+1.5)^2 (2k+2)(2k+4)), 50-digit value frozen below
    const double frozen = 0.03942215799654690;
    const IdentityCase item = desk_t1(1.0, 0.5);
    CHECK(rel(rhs_derived(item, 1e-10), frozen) <= 1e-13);
    const IdentityReport r = verify_case(item, 1e-6);
    CHECK(r.status_printed == Status::CONFIRMED);
    CHECK(r.status_derived == Status::CONFIRMED);
    CHECK(rel(r.lhs.value, frozen) <= 1e-7);
}

TEST_CASE("T1 printed and derived forms are algebraically identical") {
    IdentityCase item;
    item.id = CaseId::T1;
    GtsfParams g;
    g.ord_a = 2;
    g.p = 0.3;
    g.b = 0.8;
    g.c = 1.0;
    g.xi = 2.0;
    g.nu = 0.5;
    g.delta = 2.5;
    item.gtsf = g;
    item.mu = 0.7;
    item.lambda = 1.9;
    item.shift_a = 1.5;
    item.y = 0.75;
    CHECK(rel(rhs_printed(item), rhs_derived(item, 1e-10)) <= 1e-12);
    // 50-digit quadrature reference for this exact point
    CHECK(rel(rhs_printed(item), 0.0191934815177873235) <= 1e-12);
}

TEST_CASE("T2/T3/T4 printed forms disagree with quadrature, derived forms agree") {
    GtsfParams g;
    g.ord_a = 2;
    g.p = 0.3;
    g.b = 0.8;
    g.c = 1.0;
    g.xi = 2.0;
    g.nu = 0.5;
    g.delta = 2.5;

    IdentityCase t2;
    t2.id = CaseId::T2;
    t2.gtsf = g;
    t2.mu = 0.7;
    t2.lambda = 1.9;
    t2.shift_a = 1.5;
    t2.y = 0.75;
    const IdentityReport r2 = verify_case(t2, 1e-6);
    CHECK(r2.status_derived == Status::CONFIRMED);
    CHECK(r2.status_printed == Status::DISCREPANT);
    CHECK(rel(r2.rhs_derived, 0.00754537883111417201) <= 1e-12);  // 50-digit reference
    CHECK(rel(r2.rhs_printed, 0.0104626729418590451) <= 1e-12);

    IdentityCase t3;
    t3.id = CaseId::T3;
    t3.gtsf = g;
    t3.alpha = 0.6;
    t3.beta = 1.2;
    t3.y = 0.75;
    const IdentityReport r3 = verify_case(t3, 1e-6);
    CHECK(r3.status_derived == Status::CONFIRMED);
    CHECK(r3.status_printed == Status::DISCREPANT);
    CHECK(rel(r3.rhs_derived, 0.128822917723245641) <= 1e-12);
    CHECK(rel(r3.rhs_printed, 0.0420369694165308634) <= 1e-12);

    IdentityCase t4 = t3;
    t4.id = CaseId::T4;
    const IdentityReport r4 = verify_case(t4, 1e-6);
    CHECK(r4.status_derived == Status::CONFIRMED);
    CHECK(r4.status_printed == Status::DISCREPANT);
    CHECK(rel(r4.rhs_derived, 0.0203132593086485037) <= 1e-12);
    CHECK(rel(r4.rhs_printed, 0.0090786582977701827) <= 1e-12);
}

TEST_CASE("printed closed forms at c = 0 match hand-assembled gamma expressions") {
    // T3: (2/3)^2a (y/2)^(p+1) G(2a) G(b+p+1) / (G(d) G(q) G(2a+b+p+1))
    IdentityCase t3;
    t3.id = CaseId::T3;
    t3.gtsf = desk_gtsf(0.0);
    t3.gtsf->p = 0.5;
    t3.alpha = 0.8;
    t3.beta = 1.1;
    t3.y = 0.9;
    const GtsfParams& g = *t3.gtsf;
    const double want = std::pow(2.0 / 3.0, 2.0 * t3.alpha) * std::pow(t3.y / 2.0, g.p + 1.0) *
                        gamma(2.0 * t3.alpha) * gamma(t3.beta + g.p + 1.0) /
                        (gamma(g.delta) * gamma(g.series_shift()) *
                         gamma(2.0 * t3.alpha + t3.beta + g.p + 1.0));
    CHECK(rel(rhs_printed(t3), want) <= 1e-13);

    // T4 derived: (2/3)^2(a+p+1) (y/2)^(p+1) G(a+p+1) G(b) / (G(d) G(q) G(a+b+p+1))
    IdentityCase t4 = t3;
    t4.id = CaseId::T4;
    const double want4 = std::pow(2.0 / 3.0, 2.0 * (t4.alpha + g.p + 1.0)) *
                         std::pow(t4.y / 2.0, g.p + 1.0) * gamma(t4.alpha + g.p + 1.0) *
                         gamma(t4.beta) /
                         (gamma(g.delta) * gamma(g.series_shift()) *
                          gamma(t4.alpha + t4.beta + g.p + 1.0));
    CHECK(rel(rhs_derived(t4, 1e-9), want4) <= 1e-13);
}

TEST_CASE("corollaries evaluate exactly like their theorems at the specialization") {
    IdentityCase t1 = desk_t1(1.0, 0.8);
    IdentityCase c31 = t1;
    c31.id = CaseId::C31;
    CHECK(rhs_printed(c31) == rhs_printed(t1));
    CHECK(rhs_derived(c31, 1e-9) == rhs_derived(t1, 1e-9));

    IdentityCase t3;
    t3.id = CaseId::T3;
    t3.gtsf = desk_gtsf(-1.0);
    t3.alpha = 1.3;
    t3.beta = 0.7;
    t3.y = 0.6;
    IdentityCase c33 = t3;
    c33.id = CaseId::C33;
    CHECK(rhs_printed(c33) == rhs_printed(t3));
    CHECK(rhs_derived(c33, 1e-9) == rhs_derived(t3, 1e-9));
}

TEST_CASE("y = 0 collapses every route to zero") {
    IdentityCase item = desk_t1(1.0, 0.0);
    CHECK(rhs_derived(item, 1e-9) == 0.0);
    CHECK(rhs_printed(item) == 0.0);
    CHECK(lhs_integral(item, 1e-9).value == 0.0);
    const IdentityReport r = verify_case(item, 1e-6);
    CHECK(r.status_printed == Status::CONFIRMED);
    CHECK(r.status_derived == Status::CONFIRMED);
}

TEST_CASE("c = 0 reduces rhs_derived to exactly one shifted base term") {
    IdentityCase item = desk_t1(0.0, 0.9);
    // coeff_0 * I_0 assembled by hand: (y/2)/(G(1.5)^2) * Ober(mu=1, lam=3, a=1)
    const double coeff0 = (item.y / 2.0) / (gamma(1.5) * gamma(1.5));
    const double i0 = 0.125;
    CHECK(rhs_derived(item, 1e-9) == doctest::Approx(coeff0 * i0).epsilon(1e-14));
}

TEST_CASE("rhs_derived scale covariance and smoothness in y") {
    IdentityCase item = desk_t1(0.0, 0.5);
    // single term scales as y^(p+1) = y
    const double v1 = rhs_derived(item, 1e-9);
    item.y = 1.0;
    const double v2 = rhs_derived(item, 1e-9);
    CHECK(rel(v2, 2.0 * v1) <= 1e-13);

    // smoothness: central-difference slopes at steps 1e-3 and 2e-3 agree
    IdentityCase full = desk_t1(1.0, 0.7);
    const auto slope = [&](double h) {
        IdentityCase hi = full;
        IdentityCase lo = full;
        hi.y = full.y + h;
        lo.y = full.y - h;
        return (rhs_derived(hi, 1e-10) - rhs_derived(lo, 1e-10)) / (2.0 * h);
    };
    const double s1 = slope(1e-3);
    const double s2 = slope(2e-3);
    CHECK(rel(s1, s2) <= 1e-4);
}

TEST_CASE("evaluation failure in one route yields INCONCLUSIVE with a note") {
    // T2 printed form has the upper pair (2mu+2p, 4); mu = 0.4, p = -0.4 puts
    // a numerator gamma pole at k = 0 while the derived route stays regular.
    IdentityCase item;
    item.id = CaseId::T2;
    GtsfParams g = desk_gtsf(1.0);
    g.p = -0.4;
    item.gtsf = g;
    item.mu = 0.4;
    item.lambda = 1.4;
    item.shift_a = 1.0;
    item.y = 0.5;
    const IdentityReport r = verify_case(item, 1e-6);
    CHECK(r.status_derived == Status::CONFIRMED);
    CHECK(r.status_printed == Status::INCONCLUSIVE);
    CHECK(!r.note.empty());
    CHECK(std::isnan(r.rhs_printed));
}

TEST_CASE("case validation names the broken invariant") {
    IdentityCase bad = desk_t1(0.0, 1.0);
    bad.mu = 5.0;  // violates mu < lambda + p + 1
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    IdentityCase c31 = desk_t1(0.0, 1.0);
    c31.id = CaseId::C31;
    c31.gtsf->nu = 2.0;  // corollaries pin nu = 1
    CHECK_THROWS_AS(c31.validate(), ValidationError);

    IdentityCase base;
    base.id = CaseId::BASE_OBER;
    base.mu = 1.0;
    base.lambda = 3.0;
    base.shift_a = 1.0;
    base.gtsf = desk_gtsf(0.0);  // base cases carry no series parameters
    CHECK_THROWS_AS(base.validate(), ValidationError);

    IdentityCase nog;
    nog.id = CaseId::T3;
    nog.alpha = 1.0;
    nog.beta = 1.0;
    nog.y = 1.0;
    CHECK_THROWS_AS(nog.validate(), ValidationError);  // series parameters required
}
