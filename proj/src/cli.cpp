#include "abelsum/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abelsum/abel.hpp"
#include "abelsum/hurwitz.hpp"
#include "abelsum/prng.hpp"

namespace abelsum::cli {

namespace {

using exactnum::EvalStats;
using exactnum::Natural;
using exactnum::Rational;
using lacasse::Method;
using lacasse::Mode;
using ojson = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::uint64_t elapsed_ns_since(std::chrono::steady_clock::time_point start) {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                          std::chrono::steady_clock::now() - start)
                                          .count());
}

Method parse_method(const std::string& s) {
    return s == "naive" ? Method::naive : Method::closed;
}

struct SharedFlags {
    std::string format = "plain";
    std::string mode = "exact";
    std::string method = "closed";
    std::uint64_t seed = 0;
};

void add_shared_flags(CLI::App* cmd, SharedFlags& shared) {
    cmd->add_option("--format", shared.format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--mode", shared.mode, "arithmetic mode")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    cmd->add_option("--method", shared.method, "evaluation method")
        ->check(CLI::IsMember({"naive", "closed"}))
        ->capture_default_str();
    cmd->add_option("--seed", shared.seed, "PRNG seed for randomized suites")
        ->capture_default_str();
}

struct TargetFlags {
    std::string target;
    std::vector<std::uint64_t> ms;
    std::string x = "0";
    std::string y = "0";
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::vector<std::string> xs;
    std::vector<std::int64_t> ps;
};

void add_target_flags(CLI::App* cmd, TargetFlags& tf, bool m_list) {
    cmd->add_option("--target", tf.target, "what to evaluate")
        ->check(CLI::IsMember({"xi", "xi2", "alpha", "beta", "abel", "hurwitz"}))
        ->required();
    auto* m_opt = m_list ? cmd->add_option("--m-list", tf.ms, "orders m (comma separated)")
                         : cmd->add_option("--m", tf.ms, "order m (repeatable)");
    m_opt->required()->delimiter(',');
    cmd->add_option("--x", tf.x, "abel: rational x, as n or n/d")->capture_default_str();
    cmd->add_option("--y", tf.y, "abel: rational y")->capture_default_str();
    cmd->add_option("--p", tf.p, "abel: exponent shift p")->capture_default_str();
    cmd->add_option("--q", tf.q, "abel: exponent shift q")->capture_default_str();
    cmd->add_option("--xs", tf.xs, "hurwitz: rationals x1,..,xn (comma separated)")
        ->delimiter(',');
    cmd->add_option("--ps", tf.ps, "hurwitz: exponent shifts p1,..,pn (default all zero)")
        ->delimiter(',');
}

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// One evaluation result before stringification.
struct RawValue {
    std::optional<Rational> rational;
    std::optional<Natural> natural;
    std::optional<double> approx;
};

std::string stringify(const RawValue& rv) {
    if (rv.natural) return rv.natural->get_str();
    if (rv.rational) return exactnum::to_string(*rv.rational);
    return format_double(*rv.approx);
}

struct TargetRequest {
    std::string target;
    Method method = Method::closed;
    Mode mode = Mode::exact;
    // abel
    Rational x, y;
    std::int64_t p = 0, q = 0;
    // hurwitz
    std::vector<Rational> xs;
    std::vector<std::int64_t> ps;
};

TargetRequest build_request(const TargetFlags& tf, const SharedFlags& shared) {
    TargetRequest req;
    req.target = tf.target;
    req.method = parse_method(shared.method);
    req.mode = shared.mode == "float" ? Mode::floating : Mode::exact;
    if (req.mode == Mode::floating && tf.target != "xi" && tf.target != "xi2")
        throw usage_error("--mode float is defined for targets xi and xi2 only");
    if (tf.target == "abel") {
        req.x = exactnum::rational_from_string(tf.x);
        req.y = exactnum::rational_from_string(tf.y);
        req.p = tf.p;
        req.q = tf.q;
    } else if (tf.target == "hurwitz") {
        if (tf.xs.empty()) throw usage_error("target hurwitz needs --xs x1,..,xn");
        for (const auto& s : tf.xs) req.xs.push_back(exactnum::rational_from_string(s));
        req.ps = tf.ps.empty() ? std::vector<std::int64_t>(req.xs.size(), 0) : tf.ps;
        if (req.ps.size() != req.xs.size())
            throw usage_error("--ps must have the same length as --xs");
    }
    return req;
}

RawValue eval_raw(const TargetRequest& req, std::uint64_t m, EvalStats& stats) {
    RawValue rv;
    if (req.target == "xi" || req.target == "xi2") {
        const bool second = req.target == "xi2";
        if (req.mode == Mode::floating) {
            const auto v = second ? lacasse::xi2_float(m, req.method, &stats)
                                  : lacasse::xi_float(m, req.method, &stats);
            rv.approx = *v.approx;
        } else {
            const auto v = second ? lacasse::xi2_exact(m, req.method, &stats)
                                  : lacasse::xi_exact(m, req.method, &stats);
            rv.rational = *v.exact;
        }
    } else if (req.target == "alpha") {
        rv.natural = lacasse::alpha(m, req.method, &stats);
    } else if (req.target == "beta") {
        rv.natural = lacasse::beta(m, req.method, &stats);
    } else if (req.target == "abel") {
        if (req.method == Method::naive) {
            rv.rational = abel::abel_naive({req.x, req.y, req.p, req.q, m}, &stats);
        } else if (req.p == 0 && req.q == 0) {
            rv.rational = abel::abel_closed_riordan(req.x, req.y, m, &stats);
        } else if (req.p == -1 && req.q == 0) {
            rv.rational = abel::abel_closed_theorem(req.x, req.y, m, &stats);
        } else {
            throw usage_error("closed abel forms exist for (p,q) = (0,0) and (-1,0) only; "
                              "use --method naive");
        }
    } else {  // hurwitz
        if (req.method == Method::naive) {
            rv.rational = hurwitz::hurwitz_naive({req.xs, req.ps, m}, &stats);
        } else {
            const bool shifted = std::any_of(req.ps.begin(), req.ps.end(),
                                             [](std::int64_t v) { return v != 0; });
            if (shifted)
                throw usage_error("the closed hurwitz form needs all-zero shifts; "
                                  "use --method naive");
            rv.rational = hurwitz::hurwitz_closed_p0(req.xs, m, &stats);
        }
    }
    return rv;
}

// ---- eval ------------------------------------------------------------

int cmd_eval(const TargetFlags& tf, const SharedFlags& shared, std::ostream& out) {
    const TargetRequest req = build_request(tf, shared);
    bool csv_header_done = false;
    for (std::uint64_t m : tf.ms) {
        EvalStats stats;
        const auto start = std::chrono::steady_clock::now();
        const RawValue rv = eval_raw(req, m, stats);
        const std::uint64_t ns = elapsed_ns_since(start);
        const std::string value = stringify(rv);
        if (shared.format == "plain") {
            out << value << "\n";
        } else if (shared.format == "csv") {
            if (!csv_header_done) {
                out << "target,m,method,mode,value,terms,elapsed_ns\n";
                csv_header_done = true;
            }
            out << tf.target << ',' << m << ',' << shared.method << ',' << shared.mode << ','
                << value << ',' << stats.terms << ',' << ns << "\n";
        } else {
            ojson j;
            j["target"] = tf.target;
            j["m"] = m;
            j["method"] = shared.method;
            j["mode"] = shared.mode;
            j["value"] = value;
            j["terms"] = stats.terms;
            j["elapsed_ns"] = ns;
            out << j.dump() << "\n";
        }
    }
    return 0;
}

// ---- verify ----------------------------------------------------------

struct VerifyFlags {
    std::string family;
    std::uint64_t m_min = 1;
    std::uint64_t m_max = 0;
    std::uint64_t trials = 0;  // 0: family default (abel 200, hurwitz 50)
    std::size_t n = 3;
    bool records = false;
};

int verify_lacasse(const VerifyFlags& vf, const SharedFlags& shared, std::ostream& out,
                   std::ostream& err) {
    const auto recs = lacasse::verify_conjecture(vf.m_min, vf.m_max, parse_method(shared.method));
    return report_verification(recs, shared.format, vf.records, out, err);
}

int verify_abel(const VerifyFlags& vf, const SharedFlags& shared, std::ostream& out,
                std::ostream& err) {
    const std::uint64_t trials = vf.trials == 0 ? 200 : vf.trials;
    Lcg64 rng(shared.seed);
    std::uint64_t checks = 0;
    const auto mismatch = [&](const char* form, const Rational& x, const Rational& y,
                              std::uint64_t m, const Rational& closed, const Rational& naive) {
        out << checks << "/" << (checks + 1) << " hold\n";
        err << "counterexample (" << form << "): x=" << exactnum::to_string(x)
            << " y=" << exactnum::to_string(y) << " m=" << m
            << ": closed=" << exactnum::to_string(closed)
            << " naive=" << exactnum::to_string(naive) << "\n";
        return 1;
    };
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Rational x = random_rational(rng);
        const Rational y = random_rational(rng);
        for (std::uint64_t m = 0; m <= vf.m_max; ++m) {
            const Rational closed = abel::abel_closed_riordan(x, y, m);
            const Rational naive = abel::abel_naive({x, y, 0, 0, m});
            if (closed != naive) return mismatch("riordan p=q=0", x, y, m, closed, naive);
            ++checks;
        }
    }
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Rational x = random_nonzero_rational(rng);
        const Rational y = random_rational(rng);
        for (std::uint64_t m = 0; m <= vf.m_max; ++m) {
            const Rational closed = abel::abel_closed_theorem(x, y, m);
            const Rational naive = abel::abel_naive({x, y, -1, 0, m});
            if (closed != naive) return mismatch("theorem p=-1,q=0", x, y, m, closed, naive);
            ++checks;
        }
    }
    out << checks << "/" << checks << " hold\n";
    return 0;
}

int verify_hurwitz(const VerifyFlags& vf, const SharedFlags& shared, std::ostream& out,
                   std::ostream& err) {
    if (vf.n < 2) throw usage_error("--family hurwitz needs --n >= 2 (closed-form weight)");
    const std::uint64_t trials = vf.trials == 0 ? 50 : vf.trials;
    Lcg64 rng(shared.seed);
    const std::vector<std::int64_t> zeros(vf.n, 0);
    std::uint64_t checks = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<Rational> xs;
        xs.reserve(vf.n);
        for (std::size_t i = 0; i < vf.n; ++i) xs.push_back(random_rational(rng));
        for (std::uint64_t m = 0; m <= vf.m_max; ++m) {
            const Rational closed = hurwitz::hurwitz_closed_p0(xs, m);
            const Rational naive = hurwitz::hurwitz_naive({xs, zeros, m});
            if (closed != naive) {
                out << checks << "/" << (checks + 1) << " hold\n";
                err << "counterexample: xs=(";
                for (std::size_t i = 0; i < xs.size(); ++i)
                    err << (i ? "," : "") << exactnum::to_string(xs[i]);
                err << ") m=" << m << ": closed=" << exactnum::to_string(closed)
                    << " naive=" << exactnum::to_string(naive) << "\n";
                return 1;
            }
            ++checks;
        }
    }
    out << checks << "/" << checks << " hold\n";
    return 0;
}

// ---- bench -----------------------------------------------------------

struct BenchFlags {
    std::uint64_t repeat = 3;
};

int cmd_bench(const TargetFlags& tf, const BenchFlags& bf, const SharedFlags& shared,
              std::ostream& out) {
    if (bf.repeat < 1) throw usage_error("--repeat must be >= 1");
    const TargetRequest req = build_request(tf, shared);
    bool csv_header_done = false;
    for (std::uint64_t m : tf.ms) {
        std::vector<std::uint64_t> times;
        times.reserve(bf.repeat);
        std::uint64_t terms = 0;
        for (std::uint64_t r = 0; r < bf.repeat; ++r) {
            EvalStats stats;
            const auto start = std::chrono::steady_clock::now();
            (void)eval_raw(req, m, stats);
            times.push_back(elapsed_ns_since(start));
            terms = stats.terms;
        }
        std::sort(times.begin(), times.end());
        const std::uint64_t median = times[times.size() / 2];
        const std::uint64_t min = times.front();
        const std::uint64_t max = times.back();
        if (shared.format == "plain") {
            out << "target=" << tf.target << " m=" << m << " method=" << shared.method
                << " repeat=" << bf.repeat << " median_ns=" << median << " min_ns=" << min
                << " max_ns=" << max << " terms=" << terms << "\n";
        } else if (shared.format == "csv") {
            if (!csv_header_done) {
                out << "target,m,method,repeat,median_ns,min_ns,max_ns,terms\n";
                csv_header_done = true;
            }
            out << tf.target << ',' << m << ',' << shared.method << ',' << bf.repeat << ','
                << median << ',' << min << ',' << max << ',' << terms << "\n";
        } else {
            ojson j;
            j["target"] = tf.target;
            j["m"] = m;
            j["method"] = shared.method;
            j["repeat"] = bf.repeat;
            j["median_ns"] = median;
            j["min_ns"] = min;
            j["max_ns"] = max;
            j["terms"] = terms;
            out << j.dump() << "\n";
        }
    }
    return 0;
}

// ---- table -----------------------------------------------------------

struct TableFlags {
    std::uint64_t m_min = 1;
    std::uint64_t m_max = 0;
};

int cmd_table(const TableFlags& tbf, const SharedFlags& shared, std::ostream& out) {
    if (tbf.m_min < 1 || tbf.m_min > tbf.m_max)
        throw usage_error("table needs 1 <= m-min <= m-max");
    const Method method = parse_method(shared.method);
    const bool floating = shared.mode == "float";
    bool csv_header_done = false;
    for (std::uint64_t m = tbf.m_min; m <= tbf.m_max; ++m) {
        std::string xi_s, xi2_s, res_s;
        ojson xi_j, xi2_j, res_j;
        if (floating) {
            const double xi = *lacasse::xi_float(m, method).approx;
            const double xi2 = *lacasse::xi2_float(m, method).approx;
            const double res = xi2 - xi - static_cast<double>(m);
            xi_s = format_double(xi);
            xi2_s = format_double(xi2);
            res_s = format_double(res);
            xi_j = xi;
            xi2_j = xi2;
            res_j = res;
        } else {
            const Rational xi = *lacasse::xi_exact(m, method).exact;
            const Rational xi2 = *lacasse::xi2_exact(m, method).exact;
            Rational res = xi2 - xi;
            res -= static_cast<unsigned long>(m);
            xi_s = exactnum::to_string(xi);
            xi2_s = exactnum::to_string(xi2);
            res_s = exactnum::to_string(res);
            xi_j = xi_s;
            xi2_j = xi2_s;
            res_j = res_s;
        }
        if (shared.format == "plain") {
            out << m << "\t" << xi_s << "\t" << xi2_s << "\t" << res_s << "\n";
        } else if (shared.format == "csv") {
            if (!csv_header_done) {
                out << "m,xi,xi2,residual\n";
                csv_header_done = true;
            }
            out << m << ',' << xi_s << ',' << xi2_s << ',' << res_s << "\n";
        } else {
            ojson j;
            j["m"] = m;
            j["xi"] = xi_j;
            j["xi2"] = xi2_j;
            j["residual"] = res_j;
            out << j.dump() << "\n";
        }
    }
    return 0;
}

}  // namespace

int report_verification(const std::vector<lacasse::VerificationRecord>& records,
                        const std::string& format, bool emit_records, std::ostream& out,
                        std::ostream& err) {
    std::uint64_t held = 0;
    bool csv_header_done = false;
    const lacasse::VerificationRecord* first_failure = nullptr;
    for (const auto& rec : records) {
        if (rec.holds)
            ++held;
        else if (!first_failure)
            first_failure = &rec;
        if (!emit_records) continue;
        const std::uint64_t ns =
            static_cast<std::uint64_t>(rec.elapsed.count() < 0 ? 0 : rec.elapsed.count());
        if (format == "csv") {
            if (!csv_header_done) {
                out << "m,lhs,rhs,holds,method,elapsed_ns\n";
                csv_header_done = true;
            }
            out << rec.m << ',' << rec.lhs.get_str() << ',' << rec.rhs.get_str() << ','
                << (rec.holds ? "true" : "false") << ',' << lacasse::to_string(rec.method) << ','
                << ns << "\n";
        } else if (format == "json") {
            ojson j;
            j["m"] = rec.m;
            j["lhs"] = rec.lhs.get_str();
            j["rhs"] = rec.rhs.get_str();
            j["holds"] = rec.holds;
            j["method"] = lacasse::to_string(rec.method);
            j["elapsed_ns"] = ns;
            out << j.dump() << "\n";
        } else {
            out << "m=" << rec.m << " lhs=" << rec.lhs.get_str() << " rhs=" << rec.rhs.get_str()
                << " holds=" << (rec.holds ? "true" : "false") << "\n";
        }
    }
    out << held << "/" << records.size() << " hold\n";
    if (first_failure) {
        err << "counterexample at m=" << first_failure->m
            << ": lhs=" << first_failure->lhs.get_str()
            << " rhs=" << first_failure->rhs.get_str() << "\n";
        return 1;
    }
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Abel/Hurwitz binomial sums and the Lacasse xi functions", "abelsum"};
    app.require_subcommand(1);

    SharedFlags ev_shared, ve_shared, be_shared, ta_shared;
    TargetFlags ev_target, be_target;
    VerifyFlags ve;
    BenchFlags be;
    TableFlags ta;

    auto* ev = app.add_subcommand("eval", "evaluate a target at one or more m");
    add_target_flags(ev, ev_target, /*m_list=*/false);
    add_shared_flags(ev, ev_shared);

    auto* vc = app.add_subcommand("verify", "check an identity family exactly");
    vc->add_option("--family", ve.family, "identity family")
        ->check(CLI::IsMember({"lacasse", "abel", "hurwitz"}))
        ->required();
    vc->add_option("--m-min", ve.m_min, "first order (lacasse family)")->capture_default_str();
    vc->add_option("--m-max", ve.m_max, "last order")->required();
    vc->add_option("--trials", ve.trials, "random trials (default 200 abel / 50 hurwitz)");
    vc->add_option("--n", ve.n, "variable count (hurwitz family)")->capture_default_str();
    vc->add_flag("--records", ve.records, "emit per-m records (lacasse family)");
    add_shared_flags(vc, ve_shared);

    auto* bc = app.add_subcommand("bench", "time evaluations and report term counts");
    add_target_flags(bc, be_target, /*m_list=*/true);
    bc->add_option("--repeat", be.repeat, "samples per point")->capture_default_str();
    add_shared_flags(bc, be_shared);

    auto* tc = app.add_subcommand("table", "tabulate xi, xi2 and the xi2-xi-m residual");
    tc->add_option("--m-min", ta.m_min, "first row")->capture_default_str();
    tc->add_option("--m-max", ta.m_max, "last row")->required();
    add_shared_flags(tc, ta_shared);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (ev->parsed()) return cmd_eval(ev_target, ev_shared, out);
        if (vc->parsed()) {
            if (ve.family == "lacasse") return verify_lacasse(ve, ve_shared, out, err);
            if (ve.family == "abel") return verify_abel(ve, ve_shared, out, err);
            return verify_hurwitz(ve, ve_shared, out, err);
        }
        if (bc->parsed()) return cmd_bench(be_target, be, be_shared, out);
        return cmd_table(ta, ta_shared, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace abelsum::cli
