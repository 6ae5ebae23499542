#include "parbias/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "parbias/counting.hpp"
#include "parbias/maps.hpp"
#include "parbias/verify.hpp"

namespace parbias {

namespace {

struct Range {
    long lo = 0;
    long hi = 0;
};

Range parse_range(const std::string& s) {
    const auto pos = s.find("..");
    if (pos == std::string::npos)
        throw std::invalid_argument("range must be of the form a..b: " + s);
    Range r;
    r.lo = std::stol(s.substr(0, pos));
    r.hi = std::stol(s.substr(pos + 2));
    if (r.hi < r.lo) throw std::invalid_argument("empty range: " + s);
    return r;
}

std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Column-ordered tabular output; rows are emitted exactly in the order given,
// so output is deterministic regardless of how they were computed.
void emit_table(std::ostream& out, bool json_fmt,
                const std::vector<std::string>& cols,
                const std::vector<std::vector<std::string>>& rows) {
    if (!json_fmt) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << (i ? "," : "") << csv_field(cols[i]);
        out << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_field(row[i]);
            out << "\n";
        }
        return;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < cols.size() && i < row.size(); ++i)
            obj[cols[i]] = row[i];
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << "\n";
}

// Ordered parallel map over [lo, hi]: results land at their index no matter
// which worker produced them.
template <typename F>
auto parallel_map(long lo, long hi, int jobs, F f)
    -> std::vector<decltype(f(lo))> {
    const long count = hi - lo + 1;
    std::vector<decltype(f(lo))> out(static_cast<std::size_t>(count));
    if (jobs <= 1 || count <= 1) {
        for (long i = 0; i < count; ++i)
            out[static_cast<std::size_t>(i)] = f(lo + i);
        return out;
    }
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    const int workers = static_cast<int>(std::min<long>(jobs, count));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (long i; (i = next.fetch_add(1)) < count;)
                    out[static_cast<std::size_t>(i)] = f(lo + i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                next.store(count);
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

ClassSpec spec_from_flags(const std::string& cls, std::vector<int> avoid) {
    if (!avoid.empty()) {
        if (cls != "P")
            throw std::invalid_argument("--avoid is only meaningful with --class P");
        return ClassSpec::avoiding(std::move(avoid));
    }
    if (cls == "P") return ClassSpec::P();
    if (cls == "Pd") return ClassSpec::Pd();
    if (cls == "Q") return ClassSpec::Q();
    if (cls == "DQ") return ClassSpec::DQ();
    throw std::invalid_argument("unknown class: " + cls);
}

// DP table for spec up to n_max, via the on-disk cache when a directory is
// configured. A short or unreadable cache entry triggers a recompute and
// rewrite; output never depends on cache state.
CountTable table_for(const ClassSpec& spec, long n_max,
                     const std::string& cache_dir, std::ostream& err) {
    if (!cache_dir.empty()) {
        std::string warn;
        auto cached = cache_load(spec, cache_dir, &warn);
        if (!warn.empty()) err << "cache: " << warn << "\n";
        if (cached && cached->n_max() >= n_max) {
            cached->spec = spec;
            return *std::move(cached);
        }
    }
    CountTable t = count_by_dp(n_max, spec);
    if (!cache_dir.empty() && !cache_store(t, cache_dir))
        err << "cache: could not write " << cache_file_path(spec, cache_dir)
            << "\n";
    return t;
}

std::vector<std::string> verdict_row(const VerdictRecord& v) {
    return {v.claim, std::to_string(v.n), v.holds ? "true" : "false",
            v.lhs.get_str(), v.rhs.get_str(), v.margin.get_str()};
}

const std::vector<std::string> kVerdictCols = {"claim", "n",   "holds",
                                               "lhs",   "rhs", "margin"};

bool all_asserted_hold(const std::vector<VerdictRecord>& vs) {
    for (const auto& v : vs)
        if (v.asserted && !v.skipped && !v.holds) return false;
    return true;
}

int run_count(const std::string& cls, std::vector<int> avoid, long n_max,
              const std::string& method_s, bool json_fmt, bool force_enum,
              const std::string& cache_dir, int jobs, std::ostream& out,
              std::ostream& err) {
    const ClassSpec spec = spec_from_flags(cls, std::move(avoid));
    const Method method = method_from_string(method_s);
    if (method != Method::Dp && n_max > 60 && !force_enum)
        throw std::invalid_argument(
            "enumeration beyond n_max 60 is impractical; pass --force-enum to insist");

    CountTable dp;
    if (method != Method::Enum) dp = table_for(spec, n_max, cache_dir, err);

    std::vector<BiasCount> counts;
    if (method == Method::Dp) {
        counts.assign(dp.rows.begin(),
                      dp.rows.begin() + static_cast<long>(n_max + 1));
    } else {
        counts = parallel_map(0L, n_max, jobs, [&](long n) {
            BiasCount c = count_by_enumeration(n, spec);
            if (method == Method::Both) {
                const BiasCount& d = dp.rows[static_cast<std::size_t>(n)];
                if (!(c == d))
                    throw std::runtime_error(
                        "enum/dp disagreement at n=" + std::to_string(n) +
                        " for class " + spec.key());
            }
            return c;
        });
    }

    std::vector<std::vector<std::string>> rows;
    rows.reserve(counts.size());
    for (const BiasCount& c : counts)
        rows.push_back({std::to_string(c.n), spec.key(), c.odd_heavy.get_str(),
                        c.even_heavy.get_str(), c.balanced.get_str(),
                        c.total().get_str()});
    emit_table(out, json_fmt,
               {"n", "class", "odd_heavy", "even_heavy", "balanced", "total"},
               rows);
    return 0;
}

int run_verify_theorem(const std::string& id, Range r,
                       const std::string& method_s, bool json_fmt,
                       std::ostream& out) {
    auto vs = verify_bias(id, r.lo, r.hi, method_from_string(method_s));
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : vs) rows.push_back(verdict_row(v));
    emit_table(out, json_fmt, kVerdictCols, rows);
    return all_asserted_hold(vs) ? 0 : 1;
}

int run_verify_lemma(const std::string& id, Range r, bool json_fmt,
                     std::ostream& out) {
    std::vector<VerdictRecord> vs;
    if (id == "L1" || id == "L2") {
        const long parity = id == "L1" ? 0 : 1;
        const long floor_n = id == "L1" ? 14 : 9;
        for (long n = std::max(r.lo, floor_n); n <= r.hi; ++n)
            if (n % 2 == parity) vs.push_back(verify_lemma(id, n));
    } else if (id == "LB") {
        for (long m = std::max(r.lo, 7L); m <= r.hi; ++m)
            for (auto& v : verify_lemma_bound(m)) vs.push_back(std::move(v));
    } else {
        throw std::invalid_argument("unknown lemma id: " + id);
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : vs) rows.push_back(verdict_row(v));
    emit_table(out, json_fmt, kVerdictCols, rows);
    return all_asserted_hold(vs) ? 0 : 1;
}

Family family_from_string(const std::string& id) {
    if (id == "T1") return Family::T1;
    if (id == "T2") return Family::T2;
    if (id == "T3") return Family::T3;
    if (id == "T4") return Family::T4;
    throw std::invalid_argument("unknown map family: " + id);
}

int run_verify_maps(const std::string& id, Range r, bool json_fmt, int jobs,
                    std::ostream& out) {
    const Family fam = family_from_string(id);
    auto reports = parallel_map(r.lo, r.hi, jobs,
                                [&](long n) { return audit_family(n, fam); });
    std::vector<std::vector<std::string>> rows;
    bool ok = true;
    for (const auto& rep : reports) {
        ok = ok && rep.clean();
        rows.push_back({to_string(rep.family), std::to_string(rep.n),
                        std::to_string(rep.domain_size),
                        std::to_string(rep.image_size),
                        std::to_string(rep.residual_count),
                        std::to_string(static_cast<long>(rep.collisions.size())),
                        std::to_string(rep.violation_count())});
    }
    emit_table(out, json_fmt,
               {"family", "n", "domain", "image", "residual", "collisions",
                "violations"},
               rows);
    return ok ? 0 : 1;
}

int run_verify_formulas(Range r, bool json_fmt, int jobs, std::ostream& out) {
    auto per_n = parallel_map(std::max(r.lo, 1L), r.hi, jobs,
                              [](long n) { return verify_cardinality(n); });
    std::vector<std::vector<std::string>> rows;
    bool ok = true;
    for (const auto& vs : per_n)
        for (const auto& v : vs) {
            if (v.skipped) continue;
            if (v.asserted && !v.holds) ok = false;
            rows.push_back(verdict_row(v));
        }
    emit_table(out, json_fmt, kVerdictCols, rows);
    return ok ? 0 : 1;
}

int run_explore_problem1(Range r, bool json_fmt, std::ostream& out) {
    auto vs = explore_problem1(r.lo, r.hi);
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : vs) rows.push_back(verdict_row(v));
    emit_table(out, json_fmt, kVerdictCols, rows);
    return 0;  // open problem: verdicts are data, never a failure
}

int run_explore_problem2(int k, bool with_one, long horizon, bool json_fmt,
                         std::ostream& out) {
    ThresholdReport rep = explore_threshold(k, with_one, horizon);
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : rep.trail) rows.push_back(verdict_row(v));
    const std::string claim = "PROB2(" + std::string(with_one ? "1," : "") +
                              std::to_string(k) + ").candidate [" + rep.stamp +
                              "]";
    rows.push_back({claim, std::to_string(rep.candidate),
                    rep.tail_all_holds ? "true" : "false",
                    std::to_string(rep.candidate), std::to_string(rep.horizon),
                    std::to_string(rep.candidate - rep.horizon)});
    emit_table(out, json_fmt, kVerdictCols, rows);
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact partition parity-bias toolkit"};
    app.require_subcommand(1);

    const char* env_cache = std::getenv("PARBIAS_CACHE_DIR");
    std::string cache_dir = env_cache ? env_cache : "";
    std::string format = "csv";
    int jobs = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--jobs", jobs, "worker count")->check(CLI::Range(1, 256));
    app.add_option("--cache-dir", cache_dir,
                   "count-table cache directory (default: $PARBIAS_CACHE_DIR)");

    // count
    auto* count = app.add_subcommand("count", "bias tallies per n");
    std::string cls = "P";
    std::vector<int> avoid;
    long n_max = 120;
    std::string method = "dp";
    bool force_enum = false;
    count->add_option("--class", cls, "P, Pd, Q, or DQ")
        ->check(CLI::IsMember({"P", "Pd", "Q", "DQ"}));
    count->add_option("--avoid", avoid, "forbidden part values (with --class P)")
        ->delimiter(',');
    count->add_option("--n-max", n_max, "largest n")->check(CLI::NonNegativeNumber);
    count->add_option("--method", method, "enum, dp, or both")
        ->check(CLI::IsMember({"enum", "dp", "both"}));
    count->add_flag("--force-enum", force_enum,
                    "allow enumeration beyond n_max 60");

    // verify theorem|lemma|maps|formulas
    auto* verify = app.add_subcommand("verify", "check claims exactly");
    verify->require_subcommand(1);
    std::string thm_id, lemma_id, maps_id;
    std::string thm_range = "1..120", lemma_range, maps_range = "1..35",
                formula_range = "1..40";
    std::string vmethod = "dp";
    auto* vt = verify->add_subcommand("theorem", "bias inequality sweep");
    vt->add_option("id", thm_id, "T1..T5")
        ->required()
        ->check(CLI::IsMember({"T1", "T2", "T3", "T4", "T5"}));
    vt->add_option("--n-range", thm_range, "a..b");
    vt->add_option("--method", vmethod, "enum, dp, or both")
        ->check(CLI::IsMember({"enum", "dp", "both"}));
    auto* vl = verify->add_subcommand("lemma", "floor-sum inequalities");
    vl->add_option("id", lemma_id, "L1, L2, or LB")
        ->required()
        ->check(CLI::IsMember({"L1", "L2", "LB"}));
    vl->add_option("--n-range", lemma_range, "a..b (m-range for LB)");
    auto* vm = verify->add_subcommand("maps", "exhaustive injection audits");
    vm->add_option("id", maps_id, "T1..T4")
        ->required()
        ->check(CLI::IsMember({"T1", "T2", "T3", "T4"}));
    vm->add_option("--n-range", maps_range, "a..b");
    auto* vf = verify->add_subcommand("formulas", "closed-form cardinalities");
    vf->add_option("--n-range", formula_range, "a..b");

    // explore problem1|problem2
    auto* explore = app.add_subcommand("explore", "open problems, horizon-limited");
    explore->require_subcommand(1);
    std::string m_range = "1..40";
    int k = 0;
    bool with_one = false;
    long horizon = 300;
    auto* e1 = explore->add_subcommand("problem1", "distinct min-part-2 sign pattern");
    e1->add_option("--m-range", m_range, "a..b");
    auto* e2 = explore->add_subcommand("problem2", "threshold candidate N(k)");
    e2->add_option("--k", k, "forbidden part value, k > 2")->required();
    e2->add_flag("--with-one", with_one, "use the class avoiding {1,k}");
    e2->add_option("--horizon", horizon, "sweep limit, >= 50");

    // global flags (--jobs, --format, --cache-dir) may appear after the
    // subcommand name
    for (CLI::App* sub : {count, verify, vt, vl, vm, vf, explore, e1, e2})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    const bool json_fmt = format == "json";
    try {
        if (count->parsed())
            return run_count(cls, avoid, n_max, method, json_fmt, force_enum,
                             cache_dir, jobs, out, err);
        if (vt->parsed())
            return run_verify_theorem(thm_id, parse_range(thm_range), vmethod,
                                      json_fmt, out);
        if (vl->parsed()) {
            if (lemma_range.empty())
                lemma_range = lemma_id == "L1"   ? "14..2000"
                              : lemma_id == "L2" ? "9..2001"
                                                 : "7..1000";
            return run_verify_lemma(lemma_id, parse_range(lemma_range),
                                    json_fmt, out);
        }
        if (vm->parsed())
            return run_verify_maps(maps_id, parse_range(maps_range), json_fmt,
                                   jobs, out);
        if (vf->parsed())
            return run_verify_formulas(parse_range(formula_range), json_fmt,
                                       jobs, out);
        if (e1->parsed())
            return run_explore_problem1(parse_range(m_range), json_fmt, out);
        if (e2->parsed())
            return run_explore_problem2(k, with_one, horizon, json_fmt, out);
        err << "no command selected\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cli_run(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_run(args, out, err);
}

}  // namespace parbias
