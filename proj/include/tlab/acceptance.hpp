#pragma once

// The acceptance criteria as one callable suite, shared by the `verify`
// subcommand and the acceptance test binary.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace tlab {

struct AcceptanceOptions {
    int jobs = 1;
    int random_samples = 10000;      // criterion 6
    int threshold_samples = 300;     // criterion 5, per n
    std::uint64_t seed = 0x7A11CE;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::string tolerance;
    std::vector<std::string> failures; // stable keys, e.g. "golden:phi2d(5,4)"
    std::string detail;
    double seconds = 0;
    double time_limit = 0; // 0: none

    bool pass() const { return failures.empty(); }
};

// Failures that come from printed values contradicting themselves or their
// own constructions; see the decisions ledger.
const std::set<std::string>& documented_errata();

// Every failure of every criterion is a documented erratum.
bool only_documented_errata(const std::vector<CriterionResult>& results);

CriterionResult criterion_extremal(const AcceptanceOptions& opt);
CriterionResult criterion_golden(const AcceptanceOptions& opt);
CriterionResult criterion_closed_form(const AcceptanceOptions& opt);
CriterionResult criterion_3t_minus_1(const AcceptanceOptions& opt);
CriterionResult criterion_corollary(const AcceptanceOptions& opt);
CriterionResult criterion_enumerator(const AcceptanceOptions& opt);
CriterionResult criterion_audit(const AcceptanceOptions& opt);
CriterionResult criterion_bound_order(const AcceptanceOptions& opt);
CriterionResult criterion_circuits(const AcceptanceOptions& opt);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

// "PASS [1] title ..." / "FAIL [1] ..."
std::string format_criterion(const CriterionResult& r);

} // namespace tlab
