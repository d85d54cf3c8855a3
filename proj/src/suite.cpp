#include "struveint/suite.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "struveint/errors.hpp"

namespace struveint {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Deterministic number formatting.  %.17g round-trips every double bit-
// exactly, and the output is identical run to run, which the json report
// contract requires.
// ---------------------------------------------------------------------------

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_number(double v) {
    if (std::isnan(v)) {
        return "null";
    }
    if (std::isinf(v)) {
        return v > 0 ? "1e400" : "-1e400";  // out-of-range literal, parses back to inf
    }
    return fmt17(v);
}

std::string json_escape(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    out += '"';
    return out;
}

std::string csv_field(double v) { return std::isnan(v) ? std::string() : fmt17(v); }

// ---------------------------------------------------------------------------
// Config parsing
// ---------------------------------------------------------------------------

double get_number(const json& j, const std::string& ctx) {
    if (!j.is_number()) {
        throw ValidationError(ctx + ": expected a number");
    }
    return j.get<double>();
}

GtsfParams gtsf_from_json(const json& obj, const std::string& ctx) {
    GtsfParams g;
    g.ord_a = 1;
    if (obj.contains("ord_a")) {
        if (!obj["ord_a"].is_number_integer()) {
            throw ValidationError(ctx + ".ord_a: expected an integer");
        }
        g.ord_a = obj["ord_a"].get<int>();
    }
    g.p = obj.contains("p") ? get_number(obj["p"], ctx + ".p") : 0.0;
    g.b = obj.contains("b") ? get_number(obj["b"], ctx + ".b") : 0.0;
    g.c = obj.contains("c") ? get_number(obj["c"], ctx + ".c") : 0.0;
    g.xi = obj.contains("xi") ? get_number(obj["xi"], ctx + ".xi") : 1.0;
    g.nu = obj.contains("nu") ? get_number(obj["nu"], ctx + ".nu") : 1.0;
    g.delta = obj.contains("delta") ? get_number(obj["delta"], ctx + ".delta") : 1.0;
    return g;
}

IdentityCase case_from_json(CaseId id, const json& obj, const std::string& ctx) {
    static const std::vector<std::string> known = {"ord_a", "p",     "b",  "c",       "xi", "nu",
                                                   "delta", "lambda", "mu", "alpha",   "beta",
                                                   "shift_a", "y"};
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ValidationError(ctx + ": unknown parameter '" + key + "'");
        }
    }
    IdentityCase item;
    item.id = id;
    const CaseId form = theorem_form(id);
    const bool base = form == CaseId::BASE_OBER || form == CaseId::BASE_LT;
    if (!base) {
        item.gtsf = gtsf_from_json(obj, ctx);
        item.y = obj.contains("y") ? get_number(obj["y"], ctx + ".y") : 1.0;
    }
    if (obj.contains("lambda")) item.lambda = get_number(obj["lambda"], ctx + ".lambda");
    if (obj.contains("mu")) item.mu = get_number(obj["mu"], ctx + ".mu");
    if (obj.contains("alpha")) item.alpha = get_number(obj["alpha"], ctx + ".alpha");
    if (obj.contains("beta")) item.beta = get_number(obj["beta"], ctx + ".beta");
    if (obj.contains("shift_a")) item.shift_a = get_number(obj["shift_a"], ctx + ".shift_a");
    try {
        item.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(ctx + ": " + e.what());
    }
    return item;
}

const std::map<std::string, std::vector<std::string>>& grid_axes() {
    static const std::map<std::string, std::vector<std::string>> axes = {
        {"BASE_OBER", {"mu", "lambda", "shift_a"}},
        {"BASE_LT", {"alpha", "beta"}},
    };
    return axes;
}

CaseSelector selector_from_json(const json& obj, const std::string& ctx) {
    if (!obj.is_object()) {
        throw ValidationError(ctx + ": expected an object");
    }
    if (!obj.contains("id") || !obj["id"].is_string()) {
        throw ValidationError(ctx + ": missing string field 'id'");
    }
    CaseSelector sel;
    sel.id = case_id_from_string(obj["id"].get<std::string>());
    const int kinds = int(obj.contains("params")) + int(obj.contains("samples")) +
                      int(obj.contains("grid"));
    if (kinds != 1) {
        throw ValidationError(ctx + ": exactly one of 'params', 'samples', 'grid' required");
    }
    if (obj.contains("params")) {
        if (!obj["params"].is_array()) {
            throw ValidationError(ctx + ".params: expected an array");
        }
        int i = 0;
        for (const json& p : obj["params"]) {
            sel.explicit_cases.push_back(
                case_from_json(sel.id, p, ctx + ".params[" + std::to_string(i) + "]"));
            ++i;
        }
    } else if (obj.contains("samples")) {
        if (!obj["samples"].is_number_integer() || obj["samples"].get<int>() < 0) {
            throw ValidationError(ctx + ".samples: expected a non-negative integer");
        }
        sel.samples = obj["samples"].get<int>();
    } else {
        const CaseId form = theorem_form(sel.id);
        if (form != CaseId::BASE_OBER && form != CaseId::BASE_LT) {
            throw ValidationError(ctx + ": 'grid' is only supported for base cases");
        }
        const auto& axes = grid_axes().at(to_string(sel.id));
        for (const auto& [key, value] : obj["grid"].items()) {
            if (std::find(axes.begin(), axes.end(), key) == axes.end()) {
                throw ValidationError(ctx + ".grid: unknown axis '" + key + "'");
            }
            if (!value.is_array() || value.empty()) {
                throw ValidationError(ctx + ".grid." + key + ": expected a non-empty array");
            }
            std::vector<double> vals;
            for (const json& v : value) {
                vals.push_back(get_number(v, ctx + ".grid." + key));
            }
            sel.grid[key] = vals;
        }
        for (const std::string& axis : axes) {
            if (!sel.grid.count(axis)) {
                throw ValidationError(ctx + ".grid: missing axis '" + axis + "'");
            }
        }
    }
    return sel;
}

// ---------------------------------------------------------------------------
// Report rendering helpers
// ---------------------------------------------------------------------------

void append_case_json(std::string& out, const IdentityReport& r) {
    const IdentityCase& c = r.item;
    out += "    {\"case_id\": " + json_escape(to_string(c.id));
    if (c.gtsf) {
        const GtsfParams& g = *c.gtsf;
        out += ", \"ord_a\": " + std::to_string(g.ord_a);
        out += ", \"p\": " + json_number(g.p);
        out += ", \"b\": " + json_number(g.b);
        out += ", \"c\": " + json_number(g.c);
        out += ", \"xi\": " + json_number(g.xi);
        out += ", \"nu\": " + json_number(g.nu);
        out += ", \"delta\": " + json_number(g.delta);
    }
    if (!std::isnan(c.lambda)) out += ", \"lambda\": " + json_number(c.lambda);
    if (!std::isnan(c.mu)) out += ", \"mu\": " + json_number(c.mu);
    if (!std::isnan(c.alpha)) out += ", \"alpha\": " + json_number(c.alpha);
    if (!std::isnan(c.beta)) out += ", \"beta\": " + json_number(c.beta);
    if (!std::isnan(c.shift_a)) out += ", \"shift_a\": " + json_number(c.shift_a);
    if (!std::isnan(c.y)) out += ", \"y\": " + json_number(c.y);
    out += ", \"lhs\": " + json_number(r.lhs.value);
    out += ", \"lhs_error_estimate\": " + json_number(r.lhs.abs_error_estimate);
    out += ", \"evaluations\": " + std::to_string(r.lhs.evaluations);
    out += ", \"rhs_printed\": " + json_number(r.rhs_printed);
    out += ", \"rhs_derived\": " + json_number(r.rhs_derived);
    out += ", \"rel_err_printed\": " + json_number(r.rel_err_printed);
    out += ", \"rel_err_derived\": " + json_number(r.rel_err_derived);
    out += ", \"status_printed\": " + json_escape(to_string(r.status_printed));
    out += ", \"status_derived\": " + json_escape(to_string(r.status_derived));
    if (!r.note.empty()) {
        out += ", \"note\": " + json_escape(r.note);
    }
    out += "}";
}

std::string render_json(const std::vector<IdentityReport>& reports, const SuiteConfig& cfg) {
    std::string out = "{\n";
    out += "  \"schema_version\": " + std::to_string(cfg.schema_version) + ",\n";
    out += "  \"tol\": " + json_number(cfg.tol) + ",\n";
    out += "  \"quad_tol\": " + json_number(cfg.quad_tol) + ",\n";
    out += "  \"seed\": " + std::to_string(cfg.seed) + ",\n";
    out += "  \"summary\": [\n";
    const auto groups = summarize(reports);
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const GroupSummary& g = groups[i];
        out += "    {\"case_id\": " + json_escape(to_string(g.id)) +
               ", \"points\": " + std::to_string(g.points);
        out += ", \"printed\": {\"confirmed\": " + std::to_string(g.printed_confirmed) +
               ", \"discrepant\": " + std::to_string(g.printed_discrepant) +
               ", \"inconclusive\": " + std::to_string(g.printed_inconclusive) +
               ", \"classification\": " +
               json_escape(side_verdict(g.printed_confirmed, g.printed_discrepant, g.points)) + "}";
        out += ", \"derived\": {\"confirmed\": " + std::to_string(g.derived_confirmed) +
               ", \"discrepant\": " + std::to_string(g.derived_discrepant) +
               ", \"inconclusive\": " + std::to_string(g.derived_inconclusive) +
               ", \"classification\": " +
               json_escape(side_verdict(g.derived_confirmed, g.derived_discrepant, g.points)) + "}";
        out += "}";
        out += i + 1 < groups.size() ? ",\n" : "\n";
    }
    out += "  ],\n";
    out += "  \"cases\": [\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        append_case_json(out, reports[i]);
        out += i + 1 < reports.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string render_csv(const std::vector<IdentityReport>& reports) {
    std::string out =
        "case_id,ord_a,p,b,c,xi,nu,delta,lambda,mu,alpha,beta,shift_a,y,"
        "lhs,rhs_printed,rhs_derived,rel_err_printed,rel_err_derived,"
        "status_printed,status_derived,lhs_error_estimate,evaluations\n";
    for (const IdentityReport& r : reports) {
        const IdentityCase& c = r.item;
        out += to_string(c.id);
        out += ',';
        out += c.gtsf ? std::to_string(c.gtsf->ord_a) : std::string();
        for (double v : {c.gtsf ? c.gtsf->p : std::nan(""), c.gtsf ? c.gtsf->b : std::nan(""),
                         c.gtsf ? c.gtsf->c : std::nan(""), c.gtsf ? c.gtsf->xi : std::nan(""),
                         c.gtsf ? c.gtsf->nu : std::nan(""), c.gtsf ? c.gtsf->delta : std::nan(""),
                         c.lambda, c.mu, c.alpha, c.beta, c.shift_a, c.y, r.lhs.value,
                         r.rhs_printed, r.rhs_derived, r.rel_err_printed, r.rel_err_derived}) {
            out += ',';
            out += csv_field(v);
        }
        out += ',';
        out += to_string(r.status_printed);
        out += ',';
        out += to_string(r.status_derived);
        out += ',';
        out += csv_field(r.lhs.abs_error_estimate);
        out += ',';
        out += std::to_string(r.lhs.evaluations);
        out += '\n';
    }
    return out;
}

void append_markdown_table(std::string& out, const std::vector<IdentityReport>& rows) {
    out +=
        "| parameters | lhs (quadrature) | rhs printed | rhs derived | rel err printed | "
        "rel err derived | printed | derived |\n";
    out += "|---|---|---|---|---|---|---|---|\n";
    for (const IdentityReport& r : rows) {
        const IdentityCase& c = r.item;
        std::string params;
        const auto add = [&params](const char* name, double v) {
            if (!std::isnan(v)) {
                char buf[48];
                std::snprintf(buf, sizeof(buf), "%s=%.4g ", name, v);
                params += buf;
            }
        };
        if (c.gtsf) {
            params += "a=" + std::to_string(c.gtsf->ord_a) + " ";
            add("p", c.gtsf->p);
            add("b", c.gtsf->b);
            add("c", c.gtsf->c);
            add("xi", c.gtsf->xi);
            add("nu", c.gtsf->nu);
            add("delta", c.gtsf->delta);
        }
        add("mu", c.mu);
        add("lambda", c.lambda);
        add("alpha", c.alpha);
        add("beta", c.beta);
        add("shift_a", c.shift_a);
        add("y", c.y);
        char buf[200];
        std::snprintf(buf, sizeof(buf), "| %s| %.10g | %.10g | %.10g | %.3g | %.3g | %s | %s |\n",
                      params.c_str(), r.lhs.value, r.rhs_printed, r.rhs_derived, r.rel_err_printed,
                      r.rel_err_derived, to_string(r.status_printed), to_string(r.status_derived));
        out += buf;
    }
}

std::string render_markdown(const std::vector<IdentityReport>& reports, const SuiteConfig& cfg) {
    std::string out = "# Integral identity verification report\n\n";
    out += "tol = " + fmt17(cfg.tol) + ", quad_tol = " + fmt17(cfg.quad_tol) +
           ", seed = " + std::to_string(cfg.seed) + "\n\n";
    out += "## Findings\n\n";
    for (const GroupSummary& g : summarize(reports)) {
        out += "- " + std::string(to_string(g.id)) + " (" + std::to_string(g.points) + " points): ";
        out += "printed form " +
               std::string(side_verdict(g.printed_confirmed, g.printed_discrepant, g.points));
        out += "; derived form " +
               std::string(side_verdict(g.derived_confirmed, g.derived_discrepant, g.points)) + "\n";
    }
    out += "\n";

    std::vector<IdentityReport> base;
    for (const IdentityReport& r : reports) {
        const CaseId f = theorem_form(r.item.id);
        if (f == CaseId::BASE_OBER || f == CaseId::BASE_LT) {
            base.push_back(r);
        }
    }
    if (!base.empty()) {
        out += "## Base formulas\n\n";
        append_markdown_table(out, base);
        out += "\n";
    }
    for (CaseId id : {CaseId::T1, CaseId::T2, CaseId::T3, CaseId::T4, CaseId::C31, CaseId::C32,
                      CaseId::C33, CaseId::C34}) {
        std::vector<IdentityReport> rows;
        for (const IdentityReport& r : reports) {
            if (r.item.id == id) {
                rows.push_back(r);
            }
        }
        if (rows.empty()) {
            continue;
        }
        out += "## " + std::string(to_string(id)) + "\n\n";
        append_markdown_table(out, rows);
        out += "\n";
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Enums
// ---------------------------------------------------------------------------

OutputFormat output_format_from_string(std::string_view s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "markdown" || s == "md") return OutputFormat::markdown;
    throw ParseError("unknown output format '" + std::string(s) + "'");
}

const char* to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::markdown: return "markdown";
    }
    return "?";
}

FailPolicy fail_policy_from_string(std::string_view s) {
    if (s == "derived_discrepant") return FailPolicy::derived_discrepant;
    if (s == "any_discrepant") return FailPolicy::any_discrepant;
    if (s == "never") return FailPolicy::never;
    throw ParseError("unknown fail_on policy '" + std::string(s) + "'");
}

const char* to_string(FailPolicy p) {
    switch (p) {
        case FailPolicy::derived_discrepant: return "derived_discrepant";
        case FailPolicy::any_discrepant: return "any_discrepant";
        case FailPolicy::never: return "never";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Config
// ---------------------------------------------------------------------------

void SuiteConfig::validate() const {
    if (schema_version != 1) {
        throw ValidationError("schema_version must be 1");
    }
    if (!(tol > 0.0)) {
        throw ValidationError("tol must be > 0");
    }
    if (!(quad_tol > 0.0) || quad_tol > tol) {
        throw ValidationError("quad_tol must satisfy 0 < quad_tol <= tol");
    }
}

SuiteConfig default_config() {
    SuiteConfig cfg;
    cfg.tol = 1e-6;
    cfg.quad_tol = 1e-8;
    cfg.seed = 42;

    CaseSelector ober;
    ober.id = CaseId::BASE_OBER;
    ober.grid = {{"mu", {0.5, 1.0, 1.5}}, {"lambda", {2.0, 3.0, 4.5}}, {"shift_a", {0.5, 1.0, 2.0}}};
    cfg.cases.push_back(ober);

    CaseSelector lt;
    lt.id = CaseId::BASE_LT;
    lt.grid = {{"alpha", {0.5, 1.0, 2.5}}, {"beta", {0.5, 1.0, 2.5}}};
    cfg.cases.push_back(lt);

    for (CaseId id : {CaseId::T1, CaseId::T2, CaseId::T3, CaseId::T4, CaseId::C31, CaseId::C32,
                      CaseId::C33, CaseId::C34}) {
        CaseSelector sel;
        sel.id = id;
        sel.samples = 20;
        cfg.cases.push_back(sel);
    }
    for (std::size_t i = 0; i < cfg.cases.size(); ++i) {
        cfg.cases[i].seed_index = i;
    }
    return cfg;
}

SuiteConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    if (!root.is_object()) {
        throw ParseError("config: root must be an object");
    }
    static const std::vector<std::string> known = {"schema_version", "tol",  "quad_tol", "seed",
                                                   "format",         "out",  "fail_on",  "cases"};
    for (const auto& [key, value] : root.items()) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ValidationError("config: unknown field '" + key + "'");
        }
    }

    SuiteConfig cfg;
    if (root.contains("schema_version")) {
        if (!root["schema_version"].is_number_integer()) {
            throw ValidationError("schema_version: expected an integer");
        }
        cfg.schema_version = root["schema_version"].get<int>();
    }
    if (root.contains("tol")) cfg.tol = get_number(root["tol"], "tol");
    cfg.quad_tol = root.contains("quad_tol") ? get_number(root["quad_tol"], "quad_tol")
                                             : cfg.tol / 100.0;
    if (root.contains("seed")) {
        if (!root["seed"].is_number_integer()) {
            throw ValidationError("seed: expected an integer");
        }
        cfg.seed = root["seed"].get<std::uint64_t>();
    }
    if (root.contains("format")) {
        cfg.format = output_format_from_string(root["format"].get<std::string>());
    }
    if (root.contains("out")) {
        cfg.output_path = root["out"].get<std::string>();
    }
    if (root.contains("fail_on")) {
        cfg.fail_on = fail_policy_from_string(root["fail_on"].get<std::string>());
    }
    if (root.contains("cases")) {
        if (!root["cases"].is_array()) {
            throw ValidationError("cases: expected an array");
        }
        int i = 0;
        for (const json& sel : root["cases"]) {
            cfg.cases.push_back(selector_from_json(sel, "cases[" + std::to_string(i) + "]"));
            cfg.cases.back().seed_index = static_cast<std::size_t>(i);
            ++i;
        }
    }
    cfg.validate();
    return cfg;
}

SuiteConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

double CaseSampler::uniform(double lo, double hi) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

double CaseSampler::pick(std::initializer_list<double> choices) {
    const auto n = choices.size();
    return *(choices.begin() + static_cast<std::size_t>(eng_() % n));
}

IdentityCase CaseSampler::sample(CaseId id) {
    IdentityCase item;
    item.id = id;
    const CaseId form = theorem_form(id);

    if (form == CaseId::BASE_OBER) {
        item.mu = uniform(0.3, 1.5);
        item.lambda = item.mu + uniform(0.5, 3.0);
        item.shift_a = pick({0.5, 1.0, 2.0});
        item.validate();
        return item;
    }
    if (form == CaseId::BASE_LT) {
        item.alpha = uniform(0.4, 2.5);
        item.beta = uniform(0.4, 2.5);
        item.validate();
        return item;
    }

    GtsfParams g;
    g.p = uniform(0.0, 1.5);
    g.b = uniform(0.0, 2.0);
    g.c = pick({-1.0, 0.0, 1.0});
    if (is_corollary(id)) {
        g.xi = 1.0;
        g.nu = 1.0;
        g.delta = 1.5;
        g.ord_a = 1;
    } else {
        g.xi = pick({0.5, 1.0, 2.0});
        g.nu = pick({0.5, 1.0, 2.0});
        g.delta = pick({1.0, 1.5, 2.5});
        g.ord_a = eng_() % 2 == 0 ? 1 : 2;
    }
    item.gtsf = g;
    item.y = uniform(0.25, 1.0);

    switch (form) {
        case CaseId::T1:
            item.shift_a = pick({0.5, 1.0, 2.0});
            item.lambda = uniform(1.5, 3.5);
            item.mu = uniform(0.3, 1.8);
            break;
        case CaseId::T2:
            // Stricter derived validity region: 0 < mu < lambda.
            item.shift_a = pick({0.5, 1.0, 2.0});
            item.mu = uniform(0.3, 1.2);
            item.lambda = item.mu + uniform(0.5, 2.5);
            break;
        default:  // T3, T4
            item.alpha = uniform(0.4, 2.2);
            item.beta = uniform(0.4, 2.2);
            break;
    }
    item.validate();
    return item;
}

std::vector<IdentityCase> expand_selector(const CaseSelector& sel, std::uint64_t seed,
                                          std::size_t selector_index) {
    std::vector<IdentityCase> out;
    for (const IdentityCase& c : sel.explicit_cases) {
        out.push_back(c);
    }
    if (sel.samples > 0) {
        CaseSampler sampler(seed ^ (0x9e3779b97f4a7c15ULL * (selector_index + 1)));
        for (int i = 0; i < sel.samples; ++i) {
            out.push_back(sampler.sample(sel.id));
        }
    }
    if (!sel.grid.empty()) {
        const auto& axes = grid_axes().at(to_string(sel.id));
        std::vector<std::vector<double>> values;
        for (const std::string& axis : axes) {
            values.push_back(sel.grid.at(axis));
        }
        std::vector<std::size_t> idx(values.size(), 0);
        while (true) {
            IdentityCase item;
            item.id = sel.id;
            for (std::size_t a = 0; a < axes.size(); ++a) {
                const double v = values[a][idx[a]];
                if (axes[a] == "mu") item.mu = v;
                else if (axes[a] == "lambda") item.lambda = v;
                else if (axes[a] == "shift_a") item.shift_a = v;
                else if (axes[a] == "alpha") item.alpha = v;
                else if (axes[a] == "beta") item.beta = v;
            }
            item.validate();
            out.push_back(item);
            // odometer increment, last axis fastest
            std::size_t a = axes.size();
            while (a > 0) {
                --a;
                if (++idx[a] < values[a].size()) {
                    break;
                }
                idx[a] = 0;
                if (a == 0) {
                    return out;
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Running and summarizing
// ---------------------------------------------------------------------------

std::vector<IdentityReport> run_suite(const SuiteConfig& config) {
    config.validate();
    std::vector<IdentityReport> out;
    for (const CaseSelector& sel : config.cases) {
        for (const IdentityCase& item : expand_selector(sel, config.seed, sel.seed_index)) {
            out.push_back(verify_case_with_quad_tol(item, config.tol, config.quad_tol));
        }
    }
    return out;
}

std::vector<GroupSummary> summarize(const std::vector<IdentityReport>& reports) {
    std::vector<GroupSummary> out;
    for (CaseId id : {CaseId::BASE_OBER, CaseId::BASE_LT, CaseId::T1, CaseId::T2, CaseId::T3,
                      CaseId::T4, CaseId::C31, CaseId::C32, CaseId::C33, CaseId::C34}) {
        GroupSummary g;
        g.id = id;
        for (const IdentityReport& r : reports) {
            if (r.item.id != id) {
                continue;
            }
            ++g.points;
            switch (r.status_printed) {
                case Status::CONFIRMED: ++g.printed_confirmed; break;
                case Status::DISCREPANT: ++g.printed_discrepant; break;
                case Status::INCONCLUSIVE: ++g.printed_inconclusive; break;
            }
            switch (r.status_derived) {
                case Status::CONFIRMED: ++g.derived_confirmed; break;
                case Status::DISCREPANT: ++g.derived_discrepant; break;
                case Status::INCONCLUSIVE: ++g.derived_inconclusive; break;
            }
        }
        if (g.points > 0) {
            out.push_back(g);
        }
    }
    return out;
}

const char* side_verdict(int confirmed, int discrepant, int points) {
    if (points > 0 && confirmed == points) {
        return "matches quadrature";
    }
    if (points > 0 && discrepant == points) {
        return "does not match quadrature";
    }
    return "mixed/inconclusive";
}

std::string render_report(const std::vector<IdentityReport>& reports, const SuiteConfig& config,
                          OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return render_json(reports, config);
        case OutputFormat::csv: return render_csv(reports);
        case OutputFormat::markdown: return render_markdown(reports, config);
    }
    return {};
}

void emit_report(const std::vector<IdentityReport>& reports, const SuiteConfig& config,
                 OutputFormat format, const std::string& path) {
    const std::string text = render_report(reports, config, format);
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file '" + path + "'");
    }
    out << text;
    if (!out) {
        throw IoError("failed writing output file '" + path + "'");
    }
}

int exit_code(const std::vector<IdentityReport>& reports, FailPolicy policy) {
    if (policy == FailPolicy::never) {
        return 0;
    }
    for (const IdentityReport& r : reports) {
        if (r.status_derived != Status::CONFIRMED) {
            return 1;
        }
        if (policy == FailPolicy::any_discrepant && r.status_printed != Status::CONFIRMED) {
            return 1;
        }
    }
    return 0;
}

}  // namespace struveint
