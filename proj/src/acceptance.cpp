#include "tlab/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "tlab/bounds.hpp"
#include "tlab/circuits.hpp"
#include "tlab/constructions.hpp"
#include "tlab/enumerate.hpp"
#include "tlab/golden.hpp"
#include "tlab/oracle.hpp"
#include "tlab/random_cnf.hpp"
#include "tlab/rules.hpp"

namespace tlab {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Failure strings are "<key> <reason>"; the key is what errata match on.
std::string key_of(const std::string& failure) { return failure.substr(0, failure.find(' ')); }

void check_time(CriterionResult& r) {
    if (r.time_limit > 0 && r.seconds > r.time_limit)
        r.failures.push_back("time " + std::to_string(r.seconds) + " s over " + std::to_string(r.time_limit) + " s");
}

CriterionResult make_result(int id, const char* title, const char* tolerance) {
    CriterionResult r;
    r.id = id;
    r.title = title;
    r.tolerance = tolerance;
    return r;
}

std::string join_count(std::size_t ok, std::size_t total, const char* what) {
    return std::to_string(ok) + "/" + std::to_string(total) + " " + what;
}

} // namespace

const std::set<std::string>& documented_errata() {
    static const std::set<std::string> e = {
        "golden:phi0(5,1)", "golden:phi0(6,1)", "golden:phi2d(5,4)", "golden:phi2d(7,4)",
        "audit:P2o_7.2:total_even",
    };
    return e;
}

bool only_documented_errata(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        for (const auto& f : r.failures)
            if (!documented_errata().count(key_of(f))) return false;
    return true;
}

CriterionResult criterion_extremal(const AcceptanceOptions& opt) {
    CriterionResult r = make_result(1, "Extremal small cases by exhaustive search", "exact, < 300 s");
    r.time_limit = 300;
    const auto t0 = Clock::now();
    const struct {
        int n, t;
        std::uint64_t want;
    } cases[] = {{5, 2, 7}, {6, 3, 14}, {4, 2, 6}, {6, 2, 9}, {5, 3, 10}, {6, 4, 15}};
    std::ostringstream d;
    for (const auto& c : cases) {
        const SearchResult s = extremal_search(c.n, c.t, false, opt.jobs);
        d << "Theta(" << c.n << "," << c.t << ",3)=" << s.max_count << " ";
        if (s.max_count != c.want)
            r.failures.push_back("extremal:(" + std::to_string(c.n) + "," + std::to_string(c.t) + ") got " +
                                 std::to_string(s.max_count) + ", want " + std::to_string(c.want));
    }
    r.seconds = since(t0);
    r.detail = d.str();
    check_time(r);
    return r;
}

CriterionResult criterion_golden(const AcceptanceOptions& opt) {
    CriterionResult r = make_result(2, "Construction golden tables rebuilt and brute-force counted", "exact, < 120 s");
    r.time_limit = 120;
    const auto t0 = Clock::now();
    const auto checks = check_golden_tables(opt.jobs);
    std::size_t ok = 0;
    for (const auto& c : checks) {
        const GoldenRow& row = *c.row;
        const std::string key =
            "golden:" + row.table + "(" + std::to_string(row.n) + "," + std::to_string(row.t) + ")";
        if (c.ok) {
            ++ok;
            if (!row.erratum.empty()) r.failures.push_back(key + ":stale-erratum row now matches its printed value");
        } else {
            r.failures.push_back(key + " printed " + std::to_string(row.printed) + ", built " + row.spec + " gives " +
                                 std::to_string(c.count) + " (tau " + std::to_string(c.tau) + ")");
        }
    }
    r.seconds = since(t0);
    r.detail = join_count(ok, checks.size(), "rows match");
    check_time(r);
    return r;
}

CriterionResult criterion_closed_form(const AcceptanceOptions& opt) {
    CriterionResult r = make_result(3, "Closed-form family counts equal brute force (t <= 6, s <= t)", "exact");
    const auto t0 = Clock::now();
    std::size_t checked = 0;
    for (FormulaType type : {FormulaType::T0, FormulaType::T1, FormulaType::T2o, FormulaType::T2d})
        for (int t = 1; t <= 6; ++t)
            for (int s = -1; s <= t; ++s) {
                const FamilySpec spec{type, s, t};
                if (detail::pick_recipe(spec) == detail::Recipe::None) continue;
                ++checked;
                const MonotoneCnf f = build_family(spec);
                const BigInt want = num(expected_count(spec));
                const int tau = transversal_number(f);
                const std::uint64_t got = count_transversals(f, t, opt.jobs);
                if (tau != t || BigInt(got) != want || f.n != family_n(spec))
                    r.failures.push_back(std::string("family:") + type_name(type) + "(s=" + std::to_string(s) +
                                         ",t=" + std::to_string(t) + ") tau " + std::to_string(tau) + " count " +
                                         std::to_string(got) + " expected " + want.str());
            }
    r.seconds = since(t0);
    r.detail = std::to_string(checked) + " families over types 0, 1, 2o, 2d";
    return r;
}

CriterionResult criterion_3t_minus_1(const AcceptanceOptions& opt) {
    CriterionResult r = make_result(4, "n = 3t-1 construction has 7*3^(t-2) minimum transversals", "exact");
    const auto t0 = Clock::now();
    std::ostringstream d;
    for (int t = 2; t <= 5; ++t) {
        const MonotoneCnf f = build_3t_minus_1(t);
        const std::uint64_t got = count_transversals(f, t, opt.jobs);
        const BigInt want = 7 * pow_int(3, t - 2);
        d << "t=" << t << ":" << got << " ";
        if (transversal_number(f) != t || BigInt(got) != want || f.n != 3 * t - 1)
            r.failures.push_back("n3tm1:t=" + std::to_string(t) + " got " + std::to_string(got));
    }
    const SearchResult s = extremal_search(5, 2, false, opt.jobs);
    d << "R(5,2)=" << s.max_count;
    if (s.max_count != 7) r.failures.push_back("n3tm1:R(5,2) got " + std::to_string(s.max_count));
    r.seconds = since(t0);
    r.detail = d.str();
    return r;
}

CriterionResult criterion_corollary(const AcceptanceOptions& opt) {
    CriterionResult r = make_result(5, "t = n/2: constructions reach 6^(n/4), random instances stay below", "exact");
    const auto t0 = Clock::now();
    std::ostringstream d;
    for (int n : {4, 8, 12}) {
        const int t = n / 2;
        const MonotoneCnf f = build_family({FormulaType::T0, t, t});
        EnumOptions eo{EnumMode::Structured, opt.jobs, true};
        const EnumResult e = enumerate_min_transversals(f, t, eo);
        const CertResult& c = *e.stats.cert;
        const BigInt count = BigInt(e.transversals.members.size());
        d << "n=" << n << ":" << count << " ";
        if (six_quarter_bound(n).compare(count) != 0 || !c.checked || c.slack != 0 || !c.ok)
            r.failures.push_back("corollary:n=" + std::to_string(n) + " count " + count.str() + " slack " +
                                 to_string(c.slack));
    }

    // Node regression for the family instances up to n = 16.
    std::uint64_t worst_nodes = 0;
    for (int n = 4; n <= 16; n += 2)
        for (FormulaType type : {FormulaType::T0, FormulaType::T1, FormulaType::T2o, FormulaType::T2d}) {
            const FamilySpec spec{type, n / 2, n / 2};
            if (detail::pick_recipe(spec) == detail::Recipe::None) continue;
            const EnumResult e = enumerate_min_transversals(build_family(spec), n / 2, {EnumMode::Structured, 1});
            worst_nodes = std::max(worst_nodes, e.stats.nodes);
            // nodes <= 10 * 6^(n/4)  <=>  nodes^4 <= 10^4 * 6^n
            if (pow_int(BigInt(e.stats.nodes), 4) > 10000 * pow_int(6, n))
                r.failures.push_back(std::string("nodes:") + type_name(type) + ",n=" + std::to_string(n) + " " +
                                     std::to_string(e.stats.nodes) + " nodes");
        }

    std::mt19937_64 rng(opt.seed ^ 0xC0);
    std::size_t tested = 0;
    for (int n = 4; n <= 12; n += 2)
        for (int i = 0; i < opt.threshold_samples; ++i) {
            const auto f = random_threshold_cnf(rng, n, n / 2, static_cast<int>(rng() % 30));
            if (!f) continue;
            ++tested;
            const EnumResult e = enumerate_min_transversals(*f, n / 2, {EnumMode::Structured, 1, true});
            const CertResult& c = *e.stats.cert;
            if (!c.ok || c.six_quarter_cmp > 0)
                r.failures.push_back("corollary:random,n=" + std::to_string(n) + " count " +
                                     std::to_string(e.transversals.members.size()) + " " + c.note);
        }
    r.seconds = since(t0);
    d << "random tau=n/2 instances: " << tested << ", worst family node count " << worst_nodes;
    r.detail = d.str();
    return r;
}

CriterionResult criterion_enumerator(const AcceptanceOptions& opt) {
    CriterionResult r = make_result(6, "Structured = generic = brute force on random 3-CNFs (n <= 14)", "zero counterexamples");
    const auto t0 = Clock::now();
    std::mt19937_64 rng(opt.seed);
    std::size_t bad = 0;
    EnumStats total;
    std::size_t dense = 0;
    for (int i = 0; i < opt.random_samples; ++i) {
        // Odd samples are grown to tau > n/3 so that the deficit is positive
        // and the case tables, not clause branching, drive the search.
        MonotoneCnf f = random_cnf(rng, 1, 14);
        if (i % 2 == 1) {
            const int n = 4 + static_cast<int>(rng() % 11);
            const int t = n / 3 + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n / 2 - n / 3 + 1));
            if (auto g = random_threshold_cnf(rng, n, t, static_cast<int>(rng() % 40))) f = *g, ++dense;
        }
        const int tau = transversal_number(f);
        const TransversalSet bf = brute_force_transversals(f, tau);
        const EnumResult s = enumerate_min_transversals(f, tau, {EnumMode::Structured, opt.jobs});
        const EnumResult g = enumerate_min_transversals(f, tau, {EnumMode::Generic, opt.jobs});
        total.merge(s.stats);
        if (s.transversals.members != bf.members || g.transversals.members != bf.members || s.stats.duplicates ||
            g.stats.duplicates) {
            if (++bad <= 10)
                r.failures.push_back("enum:sample" + std::to_string(i) + " n=" + std::to_string(f.n) +
                                     " tau=" + std::to_string(tau) + " structured " +
                                     std::to_string(s.transversals.members.size()) + " generic " +
                                     std::to_string(g.transversals.members.size()) + " brute " +
                                     std::to_string(bf.members.size()));
        }
    }
    if (bad > 10) r.failures.push_back("enum:more " + std::to_string(bad - 10) + " further counterexamples");
    r.seconds = since(t0);
    r.detail = std::to_string(opt.random_samples) + " instances (" + std::to_string(dense) +
               " with positive deficit by construction); structured nodes " +
               std::to_string(total.structured_nodes) + ", generic fallbacks " + std::to_string(total.fallbacks) +
               ", residual rows " + std::to_string(total.residual_rows);
    return r;
}

CriterionResult criterion_audit(const AcceptanceOptions&) {
    CriterionResult r = make_result(7, "Rule-table audit reproduces printed fractions and totals", "exact rationals");
    const auto t0 = Clock::now();
    const AuditReport rep = audit_rule_tables();
    std::size_t ok = 0;
    for (const auto& t : rep.tables) {
        const std::string k = "audit:" + t.key;
        ok += t.ok();
        if (!t.total_even_ok)
            r.failures.push_back(k + ":total_even rows sum to " + to_string(*t.sum_even) + ", printed total differs");
        if (!t.total_odd_ok)
            r.failures.push_back(k + ":total_odd rows sum to " + to_string(*t.sum_odd) + ", printed total differs");
        if (!t.at_most_one) r.failures.push_back(k + ":over_one total exceeds 1");
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            const AuditRow& a = t.rows[i];
            const std::string rk = k + ":row" + std::to_string(i + 1);
            if (!a.even_ok) r.failures.push_back(rk + ":even fraction not reproduced");
            if (!a.odd_ok) r.failures.push_back(rk + ":odd fraction not reproduced");
            if (!a.deltas_consistent) r.failures.push_back(rk + ":deltas s' != 3t' - n'");
            if (!a.dt_matches_included) r.failures.push_back(rk + ":dt included-count mismatch");
        }
    }
    r.seconds = since(t0);
    r.detail = join_count(ok, rep.tables.size(), "tables clean");
    return r;
}

CriterionResult criterion_bound_order(const AcceptanceOptions&) {
    CriterionResult r = make_result(8, "Phi_2o <= Phi_2d and monotonicity in s (t <= 10, 0 <= s <= t)", "exact");
    const auto t0 = Clock::now();
    std::size_t checks = 0;
    for (int t = 1; t <= 10; ++t)
        for (int s = 0; s <= t; ++s) {
            ++checks;
            if (phi_upper({FormulaType::T2o, s, t}) > phi_upper({FormulaType::T2d, s, t}))
                r.failures.push_back("order:2o>2d,s=" + std::to_string(s) + ",t=" + std::to_string(t));
            if (s == t) continue;
            for (FormulaType type : kAllTypes) {
                ++checks;
                if (phi_upper({type, s, t}) < phi_upper({type, s + 1, t}))
                    r.failures.push_back(std::string("order:mono,") + type_name(type) + ",s=" + std::to_string(s) +
                                         ",t=" + std::to_string(t));
            }
        }
    r.seconds = since(t0);
    r.detail = std::to_string(checks) + " comparisons";
    return r;
}

CriterionResult criterion_circuits(const AcceptanceOptions& opt) {
    CriterionResult r = make_result(9, "Threshold circuits verify on all inputs; size within [ceil(C(n,t)/Theta), n^2 lower]",
                      "exact correctness");
    const auto t0 = Clock::now();
    std::size_t built = 0, bounded = 0;
    for (int n = 2; n <= 12; ++n)
        for (int t = 1; 2 * t <= n; ++t) {
            ++built;
            const Sigma3Circuit c = build_threshold_circuit(n, t, default_seed(n, t));
            const std::string k = "circuit:(" + std::to_string(n) + "," + std::to_string(t) + ")";
            if (!verify_circuit(c, opt.jobs) || !subcircuits_threshold(c)) r.failures.push_back(k + " wrong function");
            try {
                const SizeBounds b = size_bounds(c);
                ++bounded;
                if (BigInt(b.actual) < b.lower) r.failures.push_back(k + " size below lower bound");
                if (BigInt(b.actual) > BigInt(n) * n * b.lower) r.failures.push_back(k + " size over n^2 * lower");
            } catch (const Error& e) {
                if (e.code() != Errc::UnknownTheta) throw;
            }
        }
    r.seconds = since(t0);
    r.detail = std::to_string(built) + " circuits, " + std::to_string(bounded) + " with known Theta";
    return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
    return {criterion_extremal(opt),  criterion_golden(opt),     criterion_closed_form(opt),
            criterion_3t_minus_1(opt), criterion_corollary(opt), criterion_enumerator(opt),
            criterion_audit(opt),      criterion_bound_order(opt), criterion_circuits(opt)};
}

std::string format_criterion(const CriterionResult& r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f s", r.seconds);
    std::string line = std::string(r.pass() ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title +
                       " (tolerance: " + r.tolerance + "; " + secs + ") " + r.detail;
    for (const auto& f : r.failures)
        line += "\n    " + std::string(documented_errata().count(key_of(f)) ? "erratum " : "failure ") + f;
    return line;
}

} // namespace tlab
