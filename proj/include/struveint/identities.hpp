#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "struveint/gtsf.hpp"
#include "struveint/quadrature.hpp"

namespace struveint {

/// The eight identity cases plus the two bare base-formula checks.
enum class CaseId { T1, T2, T3, T4, C31, C32, C33, C34, BASE_OBER, BASE_LT };

const char* to_string(CaseId id);
CaseId case_id_from_string(std::string_view s);  // ParseError on unknown id

/// True for C31..C34 (the fixed-parameter specializations of T1..T4).
bool is_corollary(CaseId id);
/// Underlying theorem form: C31 -> T1 etc.; identity on theorems/bases.
CaseId theorem_form(CaseId id);

/// One fully-specified check.  Half-line cases (T1, T2, C31, C32, BASE_OBER)
/// use mu/lambda/shift_a; unit-interval cases (T3, T4, C33, C34, BASE_LT)
/// use alpha/beta.  gtsf and y are absent for the BASE cases.
struct IdentityCase {
    CaseId id = CaseId::T1;
    std::optional<GtsfParams> gtsf;
    double lambda = std::numeric_limits<double>::quiet_NaN();
    double mu = std::numeric_limits<double>::quiet_NaN();
    double alpha = std::numeric_limits<double>::quiet_NaN();
    double beta = std::numeric_limits<double>::quiet_NaN();
    double shift_a = std::numeric_limits<double>::quiet_NaN();
    double y = std::numeric_limits<double>::quiet_NaN();

    /// Throws ValidationError naming the violated invariant.
    void validate() const;
};

enum class Status { CONFIRMED, DISCREPANT, INCONCLUSIVE };
const char* to_string(Status s);

struct IdentityReport {
    IdentityCase item;
    QuadResult lhs;
    double rhs_printed = std::numeric_limits<double>::quiet_NaN();
    double rhs_derived = std::numeric_limits<double>::quiet_NaN();
    double rel_err_printed = std::numeric_limits<double>::quiet_NaN();
    double rel_err_derived = std::numeric_limits<double>::quiet_NaN();
    Status status_printed = Status::INCONCLUSIVE;
    Status status_derived = Status::INCONCLUSIVE;
    std::string note;  // diagnostic when an evaluation failed
};

/// The half-line kernel x + a + sqrt(x^2 + 2ax), computed from the factored
/// radicand so large x neither overflows nor cancels.  Result >= a.
double oberhettinger_kernel(double x, double shift_a);

/// Quadrature vs closed form 2 lam a^-lam (a/2)^mu G(2mu) G(lam-mu) / G(1+lam+mu)
/// for the bare half-line weight.  Requires 0 < mu < lambda, shift_a > 0.
IdentityReport check_base_oberhettinger(double mu, double lambda, double shift_a, double tol);

/// Quadrature vs closed form (2/3)^2alpha G(alpha) G(beta) / G(alpha+beta) for
/// the bare unit-interval weight.  Requires alpha > 0, beta > 0.
IdentityReport check_base_lavoie_trottier(double alpha, double beta, double tol);

/// Left side of the identity by direct quadrature at tolerance tol.
QuadResult lhs_integral(const IdentityCase& item, double tol);

/// Right side exactly as the published closed form states it (prefactor times
/// Wright series, parameters transcribed verbatim).
double rhs_printed(const IdentityCase& item);

/// Right side rebuilt by term-wise integration of the series against the
/// base formula with shifted exponents -- the route the published proofs
/// take.  Independent of the Wright evaluator.
double rhs_derived(const IdentityCase& item, double tol);

/// Runs all three routes and classifies.  Evaluation failures become
/// INCONCLUSIVE with a note; discrepancy is a result, not an error.
IdentityReport verify_case(const IdentityCase& item, double tol);

/// Same with an explicit quadrature tolerance (verify_case uses tol/100).
IdentityReport verify_case_with_quad_tol(const IdentityCase& item, double tol, double quad_tol);

}  // namespace struveint
