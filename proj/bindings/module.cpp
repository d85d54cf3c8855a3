#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "struveint/errors.hpp"
#include "struveint/gtsf.hpp"
#include "struveint/identities.hpp"
#include "struveint/quadrature.hpp"
#include "struveint/specfun.hpp"
#include "struveint/suite.hpp"
#include "struveint/wright.hpp"

namespace py = pybind11;
using namespace struveint;

namespace {

IdentityCase make_case(const std::string& id, std::optional<GtsfParams> gtsf, double lambda,
                       double mu, double alpha, double beta, double shift_a, double y) {
    IdentityCase item;
    item.id = case_id_from_string(id);
    item.gtsf = std::move(gtsf);
    item.lambda = lambda;
    item.mu = mu;
    item.alpha = alpha;
    item.beta = beta;
    item.shift_a = shift_a;
    item.y = y;
    item.validate();
    return item;
}

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Struve-type special functions and integral-identity verification";

    py::register_exception<PoleError>(m, "PoleError");
    py::register_exception<OverflowError>(m, "GammaOverflowError");
    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<NonConvergenceError>(m, "NonConvergenceError");
    py::register_exception<ConvergenceViolationError>(m, "ConvergenceViolationError");
    py::register_exception<NanError>(m, "NanDetectedError");
    py::register_exception<PreconditionError>(m, "PreconditionError");
    py::register_exception<ParseError>(m, "ConfigParseError");
    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<IoError>(m, "IoError");

    py::class_<SignedLog>(m, "SignedLog")
        .def_readonly("log_abs", &SignedLog::log_abs)
        .def_readonly("sign", &SignedLog::sign)
        .def("value", &SignedLog::value)
        .def("__repr__", [](const SignedLog& s) {
            return "SignedLog(log_abs=" + std::to_string(s.log_abs) +
                   ", sign=" + std::to_string(s.sign) + ")";
        });

    m.def("gamma", &gamma, py::arg("x"));
    m.def("log_gamma_signed", &log_gamma_signed, py::arg("x"));
    m.def("reciprocal_gamma", &reciprocal_gamma, py::arg("x"));
    m.def("pochhammer", &pochhammer, py::arg("lam"), py::arg("n"));
    m.def("sin_pi", &sin_pi, py::arg("x"));

    py::class_<GtsfParams>(m, "GtsfParams")
        .def(py::init([](int ord_a, double p, double b, double c, double xi, double nu,
                         double delta) {
                 GtsfParams g;
                 g.ord_a = ord_a;
                 g.p = p;
                 g.b = b;
                 g.c = c;
                 g.xi = xi;
                 g.nu = nu;
                 g.delta = delta;
                 g.validate();
                 return g;
             }),
             py::arg("ord_a") = 1, py::arg("p") = 0.0, py::arg("b") = 0.0, py::arg("c") = 0.0,
             py::arg("xi") = 1.0, py::arg("nu") = 1.0, py::arg("delta") = 1.0)
        .def_readonly("ord_a", &GtsfParams::ord_a)
        .def_readonly("p", &GtsfParams::p)
        .def_readonly("b", &GtsfParams::b)
        .def_readonly("c", &GtsfParams::c)
        .def_readonly("xi", &GtsfParams::xi)
        .def_readonly("nu", &GtsfParams::nu)
        .def_readonly("delta", &GtsfParams::delta)
        .def("series_shift", &GtsfParams::series_shift);

    m.def("gtsf_eval", &gtsf_eval, py::arg("params"), py::arg("z"));
    m.def("struve_h_eval", &struve_h_eval, py::arg("p"), py::arg("b"), py::arg("c"), py::arg("z"));
    m.def("gtsf_wright_form", &gtsf_wright_form, py::arg("params"), py::arg("z"));
    m.def("gtsf_terms", &gtsf_terms, py::arg("params"), py::arg("z"), py::arg("max_terms"));

    py::class_<WrightSeries>(m, "WrightSeries")
        .def(py::init([](std::vector<std::pair<double, double>> upper,
                         std::vector<std::pair<double, double>> lower) {
                 WrightSeries s;
                 s.upper = std::move(upper);
                 s.lower = std::move(lower);
                 return s;
             }),
             py::arg("upper"), py::arg("lower"))
        .def_readonly("upper", &WrightSeries::upper)
        .def_readonly("lower", &WrightSeries::lower);

    m.def("convergence_index", &convergence_index, py::arg("series"));
    m.def("wright_eval", &wright_eval, py::arg("series"), py::arg("z"));
    m.def("pfq_eval", &pfq_eval, py::arg("upper"), py::arg("lower"), py::arg("z"));

    py::class_<QuadResult>(m, "QuadResult")
        .def_readonly("value", &QuadResult::value)
        .def_readonly("abs_error_estimate", &QuadResult::abs_error_estimate)
        .def_readonly("evaluations", &QuadResult::evaluations);

    m.def("integrate_unit_interval", &integrate_unit_interval, py::arg("f"), py::arg("tol"));
    m.def("integrate_half_line", &integrate_half_line, py::arg("f"), py::arg("tol"));

    py::enum_<Status>(m, "Status")
        .value("CONFIRMED", Status::CONFIRMED)
        .value("DISCREPANT", Status::DISCREPANT)
        .value("INCONCLUSIVE", Status::INCONCLUSIVE);

    py::class_<IdentityCase>(m, "IdentityCase")
        .def(py::init(&make_case), py::arg("id"), py::arg("gtsf") = std::nullopt,
             py::arg("lambda_") = kNan, py::arg("mu") = kNan, py::arg("alpha") = kNan,
             py::arg("beta") = kNan, py::arg("shift_a") = kNan, py::arg("y") = kNan)
        .def_property_readonly("id", [](const IdentityCase& c) { return to_string(c.id); })
        .def_readonly("gtsf", &IdentityCase::gtsf)
        .def_readonly("lambda_", &IdentityCase::lambda)
        .def_readonly("mu", &IdentityCase::mu)
        .def_readonly("alpha", &IdentityCase::alpha)
        .def_readonly("beta", &IdentityCase::beta)
        .def_readonly("shift_a", &IdentityCase::shift_a)
        .def_readonly("y", &IdentityCase::y);

    py::class_<IdentityReport>(m, "IdentityReport")
        .def_readonly("item", &IdentityReport::item)
        .def_readonly("lhs", &IdentityReport::lhs)
        .def_readonly("rhs_printed", &IdentityReport::rhs_printed)
        .def_readonly("rhs_derived", &IdentityReport::rhs_derived)
        .def_readonly("rel_err_printed", &IdentityReport::rel_err_printed)
        .def_readonly("rel_err_derived", &IdentityReport::rel_err_derived)
        .def_readonly("status_printed", &IdentityReport::status_printed)
        .def_readonly("status_derived", &IdentityReport::status_derived)
        .def_readonly("note", &IdentityReport::note);

    m.def("oberhettinger_kernel", &oberhettinger_kernel, py::arg("x"), py::arg("shift_a"));
    m.def("check_base_oberhettinger", &check_base_oberhettinger, py::arg("mu"), py::arg("lambda_"),
          py::arg("shift_a"), py::arg("tol"));
    m.def("check_base_lavoie_trottier", &check_base_lavoie_trottier, py::arg("alpha"),
          py::arg("beta"), py::arg("tol"));
    m.def("lhs_integral", &lhs_integral, py::arg("case_"), py::arg("tol"));
    m.def("rhs_printed", &rhs_printed, py::arg("case_"));
    m.def("rhs_derived", &rhs_derived, py::arg("case_"), py::arg("tol"));
    m.def("verify_case", &verify_case, py::arg("case_"), py::arg("tol"));

    py::class_<SuiteConfig>(m, "SuiteConfig")
        .def_readonly("tol", &SuiteConfig::tol)
        .def_readonly("quad_tol", &SuiteConfig::quad_tol)
        .def_readonly("seed", &SuiteConfig::seed);

    m.def("default_config", &default_config);
    m.def("parse_config", &parse_config, py::arg("text"));
    m.def("load_config", &load_config, py::arg("path"));
    m.def("run_suite", &run_suite, py::arg("config"));
    m.def(
        "render_report",
        [](const std::vector<IdentityReport>& reports, const SuiteConfig& cfg,
           const std::string& format) {
            return render_report(reports, cfg, output_format_from_string(format));
        },
        py::arg("reports"), py::arg("config"), py::arg("format") = "json");
}
