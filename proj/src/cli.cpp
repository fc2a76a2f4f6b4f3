#include "tlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tlab/acceptance.hpp"
#include "tlab/bounds.hpp"
#include "tlab/circuits.hpp"
#include "tlab/classify.hpp"
#include "tlab/enumerate.hpp"
#include "tlab/golden.hpp"
#include "tlab/oracle.hpp"
#include "tlab/rules.hpp"
#include "tlab/spec_parse.hpp"

namespace tlab {

namespace {

using Json = nlohmann::ordered_json;

struct Exit {
    int code;
};

Json var_list(VarSet s) {
    Json a = Json::array();
    for_each_member(s, [&](int v) { a.push_back(v + 1); });
    return a;
}

Json clause_list(const std::vector<VarSet>& cs) {
    Json a = Json::array();
    for (VarSet c : cs) a.push_back(var_list(c));
    return a;
}

Json rational_json(const Rational& r) { return to_string(r); }

MonotoneCnf read_cnf(const std::string& path, std::istream& in) {
    std::string text;
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(path);
        if (!file) throw Error(Errc::ParseError, "cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    return normalize(parse_mcnf(text));
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

Json stats_json(const EnumStats& s, const char* mode) {
    Json j;
    j["record"] = "stats";
    j["mode"] = mode;
    j["nodes"] = s.nodes;
    j["dead"] = s.dead;
    j["leaves"] = s.leaves;
    j["generic_nodes"] = s.generic_nodes;
    j["structured_nodes"] = s.structured_nodes;
    j["fallbacks"] = s.fallbacks;
    j["residual_rows"] = s.residual_rows;
    j["duplicates"] = s.duplicates;
    j["type_mismatches"] = s.type_mismatches;
    j["max_depth"] = s.max_depth;
    j["tables"] = s.tables;
    j["types"] = s.types;
    return j;
}

Json cert_json(const CertResult& c, int t, std::size_t count) {
    Json j;
    j["record"] = "cert";
    j["ok"] = c.ok;
    j["checked"] = c.checked;
    j["type"] = type_name(c.type);
    j["s"] = c.s;
    j["t"] = t;
    j["count"] = count;
    j["bound"] = c.checked ? rational_json(c.bound) : Json();
    j["slack"] = c.checked ? rational_json(c.slack) : Json();
    j["six_quarter_checked"] = c.six_quarter_checked;
    j["six_quarter_cmp"] = c.six_quarter_cmp;
    j["note"] = c.note;
    return j;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum-transversal enumeration and extremal constructions for monotone 3-CNFs",
                 "transversal-lab"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads")->envname("TRANSVERSAL_LAB_JOBS")->check(CLI::Range(1, 256));

    std::string spec, input;
    std::optional<int> t_opt;
    bool flag_a = false, flag_b = false, flag_c = false;
    std::string mode = "structured", type_str = "0", boundary_str, seed_spec;
    int s_val = 0, n_val = 0, t_val = 0, restarts = 8, samples = 10000, threshold_samples = 300;
    std::uint64_t rng_seed = 0x5EED;

    auto* construct = app.add_subcommand("construct", "build a named construction and print it as MCNF");
    construct->add_option("spec", spec, "e.g. \"K(3,3) + T3(6)\"")->required();

    auto* count = app.add_subcommand("count", "count size-t transversals by brute force");
    count->add_option("file", input, "MCNF file, '-' or absent for stdin");
    count->add_option("--t", t_opt, "size (default: tau)");

    auto* enumerate = app.add_subcommand("enumerate", "list the minimum transversals");
    enumerate->add_option("file", input, "MCNF file, '-' or absent for stdin");
    enumerate->add_option("--t", t_opt, "must equal tau");
    enumerate->add_option("--mode", mode)->check(CLI::IsMember({"structured", "generic", "both"}));
    enumerate->add_flag("--certify", flag_a, "compare the count with the type bound and 6^(n/4)");
    enumerate->add_flag("--stats-json", flag_b, "emit search statistics");

    auto* classify = app.add_subcommand("classify", "formula type and the first matching property");
    classify->add_option("file", input, "MCNF file, '-' or absent for stdin");

    auto* bound = app.add_subcommand("bound", "evaluate Phi_type(s,t) or a boundary value exactly");
    bound->add_option("--type", type_str, "0, 1, 2o, 2d, 3 or 4");
    bound->add_option("--s", s_val);
    bound->add_option("--t", t_val)->required();
    bound->add_option("--boundary", boundary_str, "s_le_0, s_eq_2t_minus_2, s_eq_2t_minus_1 or s_eq_2t");

    auto* verify = app.add_subcommand("verify", "golden tables and the full acceptance suite");
    verify->add_flag("--strict", flag_a, "documented errata count as failures");
    verify->add_option("--samples", samples, "random differential instances")->check(CLI::NonNegativeNumber);
    verify->add_option("--threshold-samples", threshold_samples, "random tau=n/2 attempts per n")
        ->check(CLI::NonNegativeNumber);

    auto* search = app.add_subcommand("search", "exhaustive extremal search, n <= 6");
    search->add_option("--n", n_val)->required();
    search->add_option("--t", t_val)->required();
    search->add_flag("--mixed", flag_a, "all antichains of 1-, 2- and 3-clauses (n <= 5)");
    search->add_flag("--dump", flag_b, "print the kept argmax formulas as MCNF");

    auto* circuit = app.add_subcommand("circuit", "build and verify an OR-of-3-CNF circuit for T_{n,t}");
    circuit->add_option("--n", n_val)->required();
    circuit->add_option("--t", t_val)->required();
    circuit->add_option("--seed", seed_spec, "seed construction spec (default: extremal type-0 family)");
    circuit->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
    circuit->add_option("--rng-seed", rng_seed);
    circuit->add_flag("--dump", flag_b, "print each subcircuit as MCNF");

    auto* audit = app.add_subcommand("audit", "recompute every rule table's fractions and totals");
    audit->add_flag("--strict", flag_c, "documented errata count as failures");

    std::vector<std::string> argv_store{"transversal-lab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*construct) {
            out << to_mcnf(parse_spec(spec));
        } else if (*count) {
            const MonotoneCnf f = read_cnf(input, in);
            const int tau = transversal_number(f);
            const int t = t_opt.value_or(tau);
            Json j;
            j["record"] = "count";
            j["n"] = f.n;
            j["m"] = f.clauses.size();
            j["tau"] = tau;
            j["t"] = t;
            j["count"] = count_transversals(f, t, jobs);
            emit(out, j);
        } else if (*enumerate) {
            const MonotoneCnf f = read_cnf(input, in);
            const int t = t_opt.value_or(transversal_number(f));
            int code = 0;
            std::optional<EnumResult> s_res, g_res;
            if (mode != "generic") s_res = enumerate_min_transversals(f, t, {EnumMode::Structured, jobs, flag_a});
            if (mode != "structured") g_res = enumerate_min_transversals(f, t, {EnumMode::Generic, jobs, flag_a});
            const EnumResult& main = s_res ? *s_res : *g_res;
            for (VarSet m : main.transversals.members) out << format_set(m) << '\n';
            if (s_res && g_res && s_res->transversals.members != g_res->transversals.members) {
                err << "structured and generic outputs differ\n";
                code = 1;
            }
            if (flag_a) {
                emit(out, cert_json(*main.stats.cert, t, main.transversals.members.size()));
                if (!main.stats.cert->ok) code = 1;
            }
            if (flag_b) {
                if (s_res) emit(out, stats_json(s_res->stats, "structured"));
                if (g_res) emit(out, stats_json(g_res->stats, "generic"));
            }
            return code;
        } else if (*classify) {
            const MonotoneCnf f = read_cnf(input, in);
            for (VarSet c : f.clauses)
                if (set_size(c) < 2) throw Error(Errc::TypeMismatch, "unit clauses: propagate before classifying");
            const FormulaType type = formula_type(f);
            Json j;
            j["record"] = "classify";
            j["type"] = type_name(type);
            j["tau"] = transversal_number(f);
            if (f.clauses.empty()) {
                j["property"] = nullptr;
            } else {
                const PropertyMatch m = find_property(f, type);
                j["property"] = m.id;
                j["table"] = m.table;
                j["odd_s"] = m.odd_s;
                j["anchor"] = clause_list(m.anchor);
                Json cores = Json::array();
                for (int v : m.cores) cores.push_back(v + 1);
                j["cores"] = cores;
                Json letters = Json::object();
                for (const auto& [l, v] : m.letters) letters[l] = v + 1;
                j["letters"] = letters;
            }
            emit(out, j);
        } else if (*bound) {
            const auto type = parse_type(type_str);
            if (!type) throw Error(Errc::InvalidSpec, "unknown type " + type_str);
            Json j;
            j["record"] = "bound";
            j["type"] = type_name(*type);
            Rational v;
            if (!boundary_str.empty()) {
                const auto which = parse_boundary(boundary_str);
                if (!which) throw Error(Errc::InvalidSpec, "unknown boundary " + boundary_str);
                v = phi_boundary(*type, t_val, *which);
                j["boundary"] = boundary_name(*which);
            } else {
                v = phi_upper({*type, s_val, t_val});
                j["s"] = s_val;
            }
            j["t"] = t_val;
            j["value_num"] = num(v).str();
            j["value_den"] = den(v).str();
            emit(out, j);
        } else if (*verify) {
            for (const auto& c : check_golden_tables(jobs)) {
                Json j;
                j["record"] = "golden";
                j["table"] = c.row->table;
                j["n"] = c.row->n;
                j["t"] = c.row->t;
                j["s"] = c.row->s;
                j["printed"] = c.row->printed;
                j["spec"] = c.row->spec;
                j["tau"] = c.tau;
                j["count"] = c.count;
                j["ok"] = c.ok;
                if (!c.row->note.empty()) j["note"] = c.row->note;
                if (!c.row->erratum.empty()) j["erratum"] = c.row->erratum;
                emit(out, j);
            }
            AcceptanceOptions opt;
            opt.jobs = jobs;
            opt.random_samples = samples;
            opt.threshold_samples = threshold_samples;
            const auto results = run_acceptance(opt);
            bool all_pass = true;
            for (const auto& r : results) {
                Json j;
                j["record"] = "criterion";
                j["id"] = r.id;
                j["title"] = r.title;
                j["pass"] = r.pass();
                j["seconds"] = r.seconds;
                j["detail"] = r.detail;
                j["failures"] = r.failures;
                emit(out, j);
                all_pass = all_pass && r.pass();
            }
            if (all_pass) return 0;
            return !flag_a && only_documented_errata(results) ? 0 : 1;
        } else if (*search) {
            const SearchResult r = extremal_search(n_val, t_val, flag_a, jobs);
            Json j;
            j["record"] = "search";
            j["n"] = r.n;
            j["t"] = r.t;
            j["mixed"] = r.mixed;
            j["max_count"] = r.max_count;
            j["argmax_total"] = r.argmax_total;
            j["argmax_kept"] = r.argmax.size();
            j["elapsed_ms"] = r.elapsed_ms;
            emit(out, j);
            if (flag_b)
                for (std::size_t i = 0; i < r.argmax.size(); ++i)
                    out << "c argmax " << i + 1 << '\n' << to_mcnf(r.argmax[i]);
        } else if (*circuit) {
            const MonotoneCnf seed = seed_spec.empty() ? default_seed(n_val, t_val) : parse_spec(seed_spec);
            CircuitOptions co;
            co.restarts = restarts;
            co.seed = rng_seed;
            const Sigma3Circuit c = build_threshold_circuit(n_val, t_val, seed, co);
            const bool ok = verify_circuit(c, jobs) && subcircuits_threshold(c);
            Json j;
            j["record"] = "circuit";
            j["n"] = c.n;
            j["t"] = c.t;
            j["size"] = c.size();
            try {
                const SizeBounds b = size_bounds(c);
                j["lower_bound"] = b.lower.str();
                j["theta_source"] = b.theta_source;
            } catch (const Error& e) {
                if (e.code() != Errc::UnknownTheta) throw;
                j["lower_bound"] = nullptr;
            }
            j["verified"] = ok;
            emit(out, j);
            if (flag_b)
                for (std::size_t i = 0; i < c.subcircuits.size(); ++i)
                    out << "c subcircuit " << i + 1 << '\n' << to_mcnf(c.subcircuits[i]);
            return ok ? 0 : 1;
        } else if (*audit) {
            const AuditReport rep = audit_rule_tables();
            for (const auto& t : rep.tables) {
                const BranchRule& rule = rule_by_key(t.key);
                Json j;
                j["record"] = "audit";
                j["key"] = t.key;
                j["ok"] = t.ok();
                j["rows"] = t.rows.size();
                if (t.sum_even) {
                    j["sum_even"] = rational_json(*t.sum_even);
                    j["printed_even"] = rule.total_even ? rational_json(*rule.total_even) : Json();
                }
                if (t.sum_odd) {
                    j["sum_odd"] = rational_json(*t.sum_odd);
                    j["printed_odd"] = rule.total_odd ? rational_json(*rule.total_odd) : Json();
                }
                j["at_most_one"] = t.at_most_one;
                emit(out, j);
            }
            if (rep.ok()) return 0;
            if (flag_c) return 1;
            return only_documented_errata({criterion_audit({})}) ? 0 : 1;
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        return e.code() == Errc::NoPropertyFound ? 1 : 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace tlab
