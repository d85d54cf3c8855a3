#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "struveint/identities.hpp"

namespace struveint {

enum class OutputFormat { json, csv, markdown };
OutputFormat output_format_from_string(std::string_view s);  // accepts "md" as markdown
const char* to_string(OutputFormat f);

enum class FailPolicy { derived_discrepant, any_discrepant, never };
FailPolicy fail_policy_from_string(std::string_view s);
const char* to_string(FailPolicy p);

/// One entry of the config's case list: either explicit parameter sets, a
/// deterministic random sample count, or (base cases only) a grid.
struct CaseSelector {
    CaseId id = CaseId::T1;
    std::vector<IdentityCase> explicit_cases;
    int samples = 0;
    std::map<std::string, std::vector<double>> grid;
    // Position in the config's case list; feeds the per-selector RNG seed so
    // filtering (--only) never shifts the samples of the selectors kept.
    std::size_t seed_index = 0;
};

struct SuiteConfig {
    int schema_version = 1;
    double tol = 1e-6;
    double quad_tol = 1e-8;
    OutputFormat format = OutputFormat::json;
    std::string output_path;  // empty -> stdout
    FailPolicy fail_on = FailPolicy::derived_discrepant;
    std::uint64_t seed = 42;
    std::vector<CaseSelector> cases;

    void validate() const;
};

/// The shipped suite: full base grids plus 20 sampled points per identity.
SuiteConfig default_config();

SuiteConfig parse_config(const std::string& text);
SuiteConfig load_config(const std::string& path);

/// Deterministic parameter sampler over each case's validity region.
/// Uniform doubles come straight from mt19937_64 bits so results are
/// identical across standard libraries.
class CaseSampler {
public:
    explicit CaseSampler(std::uint64_t seed) : eng_(seed) {}
    IdentityCase sample(CaseId id);

private:
    double uniform(double lo, double hi);
    double pick(std::initializer_list<double> choices);
    std::mt19937_64 eng_;
};

/// Expand a selector into concrete cases.  selector_index feeds the per-
/// selector RNG seed, so filtering selectors never shifts other samples.
std::vector<IdentityCase> expand_selector(const CaseSelector& sel, std::uint64_t seed,
                                          std::size_t selector_index);

std::vector<IdentityReport> run_suite(const SuiteConfig& config);

struct GroupSummary {
    CaseId id = CaseId::T1;
    int points = 0;
    int printed_confirmed = 0;
    int printed_discrepant = 0;
    int printed_inconclusive = 0;
    int derived_confirmed = 0;
    int derived_discrepant = 0;
    int derived_inconclusive = 0;
};

/// Per-case-id tallies in fixed enum order (only ids that appear).
std::vector<GroupSummary> summarize(const std::vector<IdentityReport>& reports);

/// Classification of a side against quadrature: "matches quadrature",
/// "does not match quadrature", or "mixed/inconclusive".
const char* side_verdict(int confirmed, int discrepant, int points);

/// Render the full report deterministically (numbers at 17 significant
/// digits; identical inputs give byte-identical output).
std::string render_report(const std::vector<IdentityReport>& reports, const SuiteConfig& config,
                          OutputFormat format);

/// Render and write to path ("" or "-" means stdout).  Raises IoError.
void emit_report(const std::vector<IdentityReport>& reports, const SuiteConfig& config,
                 OutputFormat format, const std::string& path);

/// 0 or 1 according to the fail_on policy.
int exit_code(const std::vector<IdentityReport>& reports, FailPolicy policy);

}  // namespace struveint
