#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <oca/abundant.hpp>
#include <oca/constants.hpp>
#include <oca/criteria.hpp>
#include <oca/divisors.hpp>
#include <oca/growth.hpp>
#include <oca/primes.hpp>

using namespace oca;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnresolved = 3;

struct Output {
    std::string path;
    std::ofstream file;
    std::ostream& stream() {
        if (!path.empty() && !file.is_open()) {
            file.open(path, std::ios::trunc);
            if (!file) throw CLI::ValidationError("--output", "cannot open " + path);
        }
        return path.empty() ? std::cout : file;
    }
};

mpq_class parse_decimal_q(const std::string& s) {
    size_t dot = s.find('.');
    std::string digits = s;
    unsigned long frac = 0;
    if (dot != std::string::npos) {
        frac = s.size() - dot - 1;
        digits = s.substr(0, dot) + s.substr(dot + 1);
    }
    mpz_class num(digits, 10), den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

Factorization parse_subject(const std::string& n_str, const std::string& factored) {
    if (!factored.empty()) {
        Factorization f = Factorization::parse(factored);
        // parse() validates primality and ordering.
        return f;
    }
    if (n_str.empty()) throw CLI::ValidationError("input", "provide -n or --factored");
    return factorize(mpz_class(n_str, 10));
}

void maybe_meta(std::ostream& os, bool no_meta, const std::string& what) {
    if (no_meta) return;
    std::time_t t = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    os << "# oca " << what << " generated " << buf << "\n";
}

int report_exit(const CheckReport& rep) {
    if (rep.verdict == Verdict::Violates) return kExitViolation;
    if (rep.verdict == Verdict::Unresolved) return kExitUnresolved;
    return kExitOk;
}

void print_report(std::ostream& os, const CheckReport& rep, const std::string& format) {
    if (format == "json") {
        os << rep.json() << "\n";
        return;
    }
    os << "n = " << rep.subject << "\n"
       << "inequality: " << rep.inequality << (rep.strict ? "  (strict)" : "") << "\n"
       << "lhs in " << rep.lhs.str() << "\n"
       << "rhs in " << rep.rhs.str() << "\n"
       << "verdict: " << verdict_name(rep.verdict) << "  (certified at " << rep.precision_bits
       << " bits)\n";
}

struct RecordRow {
    const AbundantRecord& rec;
    const CheckReport& rep;
};

void emit_records(std::ostream& os, const std::vector<AbundantRecord>& recs,
                  const std::vector<CheckReport>& reps, const std::string& format,
                  bool no_meta) {
    auto defined = [&](size_t i) { return reps[i].precision_bits > 0; };
    auto vname = [&](size_t i) { return defined(i) ? verdict_name(reps[i].verdict) : "Undefined"; };
    if (format == "csv") {
        os << "index,n,factorization,sigma,f_value_lo,f_value_hi,verdict\n";
        for (size_t i = 0; i < recs.size(); ++i)
            os << recs[i].index << "," << recs[i].n.get_str() << ","
               << recs[i].factorization.str() << "," << recs[i].sigma.get_str() << ","
               << (defined(i) ? reps[i].lhs.lo_str() : "") << ","
               << (defined(i) ? reps[i].lhs.hi_str() : "") << "," << vname(i) << "\n";
    } else if (format == "json") {
        for (size_t i = 0; i < recs.size(); ++i) {
            os << "{\"index\":" << recs[i].index << ",\"n\":\"" << recs[i].n.get_str()
               << "\",\"factorization\":" << recs[i].factorization.json() << ",\"sigma\":\""
               << recs[i].sigma.get_str() << "\",\"f_value\":";
            if (defined(i))
                os << "[\"" << reps[i].lhs.lo_str() << "\",\"" << reps[i].lhs.hi_str() << "\"]";
            else
                os << "null";
            os << ",\"verdict\":\"" << vname(i) << "\"}\n";
        }
    } else {
        maybe_meta(os, no_meta, "generation");
        for (size_t i = 0; i < recs.size(); ++i)
            os << recs[i].index << "  " << recs[i].n.get_str() << " = "
               << recs[i].factorization.str() << "  f in "
               << (defined(i) ? reps[i].lhs.str() : "(undefined)") << "  " << vname(i) << "\n";
    }
}

const mpz_class kC0("18565284664427130919514350125");

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified colossally-abundant / divisor-sum inequality toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text", output_path;
    bool no_meta = false;
    long precision_ceiling = 0;
    std::string cache_dir;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    app.add_option("--output", output_path, "write output to file");
    app.add_flag("--no-meta", no_meta, "suppress timestamps in text output");
    app.add_option("--precision-ceiling", precision_ceiling, "precision ceiling in bits");
    app.add_option("--cache-dir", cache_dir, "directory for sieve cache files");

    // gen-ca / gen-oca
    struct GenOpts {
        std::uint64_t prime_limit = 0;
        std::string below;
        bool below_c0 = false;
        std::size_t max_records = 0;
    } gen;
    auto add_gen = [&](CLI::App* sub, bool odd) {
        sub->add_option("--prime-limit", gen.prime_limit, "largest prime allowed");
        sub->add_option("--below", gen.below, "emit records with n <= bound");
        if (odd) sub->add_flag("--below-c0", gen.below_c0, "stop at c0 (inclusive)");
        sub->add_option("--max-records", gen.max_records, "maximum records to emit");
    };
    auto* gen_ca = app.add_subcommand("gen-ca", "enumerate colossally abundant numbers");
    add_gen(gen_ca, false);
    auto* gen_oca = app.add_subcommand("gen-oca", "enumerate odd colossally abundant numbers");
    add_gen(gen_oca, true);

    // check-robin / check-lagarias
    std::string subject_n, subject_factored, threshold = "egamma";
    auto add_subject = [&](CLI::App* sub) {
        sub->add_option("-n,--n", subject_n, "subject integer (decimal)");
        sub->add_option("--factored", subject_factored, "subject in factored form, e.g. 3^4*5^3*7");
    };
    auto* chk_r = app.add_subcommand("check-robin", "certified Robin-type check");
    add_subject(chk_r);
    chk_r->add_option("--threshold", threshold, "threshold constant")
        ->check(CLI::IsMember({"egamma", "half-egamma", "threequarter-egamma", "c045-egamma"}));
    auto* chk_l = app.add_subcommand("check-lagarias", "certified Lagarias-analogue check");
    add_subject(chk_l);

    // scan
    struct ScanOpts {
        std::string kind = "robin";
        std::uint64_t from = 3, to = 1000000;
        std::string threshold = "egamma", parity = "all", restrict_ = "none";
        unsigned threads = 0;
    } sc;
    auto* scan_cmd = app.add_subcommand("scan", "certified range scan");
    scan_cmd->add_option("--kind", sc.kind)->check(CLI::IsMember({"robin", "lagarias"}));
    scan_cmd->add_option("--from", sc.from);
    scan_cmd->add_option("--to", sc.to);
    scan_cmd->add_option("--threshold", sc.threshold)
        ->check(CLI::IsMember({"egamma", "half-egamma", "threequarter-egamma", "c045-egamma"}));
    scan_cmd->add_option("--parity", sc.parity)->check(CLI::IsMember({"all", "odd"}));
    scan_cmd->add_option("--restrict", sc.restrict_)
        ->check(CLI::IsMember({"none", "odd-squarefree", "squarefree-odd-part"}));
    scan_cmd->add_option("--threads", sc.threads);

    // ca-like
    std::uint64_t calike_x = 17;
    std::string calike_schedule;
    auto* calike_cmd = app.add_subcommand("ca-like", "colossally-abundant-like construction");
    calike_cmd->add_option("--x", calike_x, "largest prime factor");
    calike_cmd->add_option("--schedule", calike_schedule,
                           "comma list of p:c steps, e.g. 13:0.67,11:0.91");

    // max-k
    std::string maxk_n = "135135", tol_str = "0.000001";
    auto* maxk_cmd = app.add_subcommand("max-k", "stationary point of g(n, k, 2)");
    maxk_cmd->add_option("-n,--n", maxk_n);
    maxk_cmd->add_option("--tol", tol_str);

    // g-curve
    std::string gc_n = "100001";
    std::uint64_t gc_p = 2;
    unsigned gc_kmax = 30;
    bool gc_gnuplot = false;
    auto* gcurve_cmd = app.add_subcommand("g-curve", "emit g(n, k, p) for k = 0..k_max");
    gcurve_cmd->add_option("-n,--n", gc_n);
    gcurve_cmd->add_option("-p,--p", gc_p);
    gcurve_cmd->add_option("--k-max", gc_kmax);
    gcurve_cmd->add_flag("--gnuplot", gc_gnuplot, "two-column k/midpoint output");

    // xk
    std::string xk_eps = "0.021";
    unsigned xk_k = 1;
    std::string xk_tol = "0.0000001";
    bool xk_verify = false;
    auto* xk_cmd = app.add_subcommand("xk", "root of F(x, k) = eps");
    xk_cmd->add_option("--eps", xk_eps);
    xk_cmd->add_option("-k,--k", xk_k);
    xk_cmd->add_option("--tol", xk_tol);
    xk_cmd->add_flag("--verify", xk_verify, "check the x_k inequalities");

    // constants
    std::string const_name = "all";
    unsigned const_digits = 10;
    std::uint64_t const_plimit = 100000;
    auto* const_cmd = app.add_subcommand("constants", "certified constant enclosures");
    const_cmd->add_option("--name", const_name)
        ->check(CLI::IsMember({"gamma", "egamma", "meissel-mertens", "alpha41", "alpha43", "all"}));
    const_cmd->add_option("--digits", const_digits);
    const_cmd->add_option("--prime-limit", const_plimit);

    // verify-lemma
    std::string lemma_id_str = "L4_1", lemma_samples_str;
    std::uint64_t lemma_from = 0, lemma_to = 0;
    auto* lemma_cmd = app.add_subcommand("verify-lemma", "numeric lemma verification");
    lemma_cmd->add_option("--id", lemma_id_str)->required();
    lemma_cmd->add_option("--samples", lemma_samples_str, "comma list of sample points");
    lemma_cmd->add_option("--from", lemma_from);
    lemma_cmd->add_option("--to", lemma_to);

    // tables
    unsigned table_which = 2;
    auto* tables_cmd = app.add_subcommand("tables", "reproduce the CA/OCA tables");
    tables_cmd->add_option("--which", table_which)->check(CLI::IsMember({1u, 2u}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (precision_ceiling <= 0)
            if (const char* env = std::getenv("OCA_PRECISION_CEILING")) precision_ceiling = std::atol(env);
        if (precision_ceiling > 0) set_default_precision_ceiling(precision_ceiling);
        if (!cache_dir.empty()) set_sieve_cache_dir(std::filesystem::path(cache_dir));
        Output out{output_path, {}};
        std::ostream& os = out.stream();

        auto run_gen = [&](Parity parity) {
            std::uint64_t plimit = gen.prime_limit;
            mpz_class below;
            const mpz_class* below_ptr = nullptr;
            if (gen.below_c0) {
                below = kC0;
                below_ptr = &below;
                if (!plimit) plimit = 80;
            } else if (!gen.below.empty()) {
                below = mpz_class(gen.below, 10);
                below_ptr = &below;
                if (!plimit) plimit = 100;
            } else if (!plimit) {
                plimit = 30;
            }
            std::vector<ThresholdTie> ties;
            auto recs = enumerate_abundant(plimit, parity, below_ptr, gen.max_records, &ties);
            std::vector<CheckReport> reps;
            ThresholdKind kind =
                parity == Parity::Odd ? ThresholdKind::HalfEgamma : ThresholdKind::Egamma;
            bool violation = false, unresolved = false;
            for (auto& r : recs) {
                if (r.n < 3) {
                    // f(n) = sigma(n)/(n log log n) is undefined below 3.
                    CheckReport rep;
                    rep.subject = r.n.get_str();
                    rep.inequality = "undefined (log log n <= 0)";
                    reps.push_back(rep);
                    continue;
                }
                reps.push_back(robin_check(r.factorization, kind));
                if (reps.back().verdict == Verdict::Violates) violation = true;
                if (reps.back().verdict == Verdict::Unresolved) unresolved = true;
            }
            emit_records(os, recs, reps, format, no_meta);
            for (auto& t : ties)
                std::cerr << "threshold tie: (" << t.first.p << "," << t.first.a << ") vs ("
                          << t.second.p << "," << t.second.a << ")\n";
            return unresolved ? kExitUnresolved : violation ? kExitViolation : kExitOk;
        };

        if (*gen_ca) return run_gen(Parity::All);
        if (*gen_oca) return run_gen(Parity::Odd);

        if (*chk_r) {
            ThresholdKind kind = threshold == "half-egamma" ? ThresholdKind::HalfEgamma
                                 : threshold == "threequarter-egamma"
                                     ? ThresholdKind::ThreeQuarterEgamma
                                 : threshold == "c045-egamma" ? ThresholdKind::C045Egamma
                                                              : ThresholdKind::Egamma;
            CheckReport rep = robin_check(parse_subject(subject_n, subject_factored), kind);
            print_report(os, rep, format);
            return report_exit(rep);
        }
        if (*chk_l) {
            CheckReport rep = lagarias_check(parse_subject(subject_n, subject_factored));
            print_report(os, rep, format);
            return report_exit(rep);
        }

        if (*scan_cmd) {
            ScanResult res;
            if (sc.kind == "lagarias") {
                res = scan_lagarias(sc.from, sc.to, sc.threads);
            } else {
                ThresholdKind kind = sc.threshold == "half-egamma" ? ThresholdKind::HalfEgamma
                                     : sc.threshold == "threequarter-egamma"
                                         ? ThresholdKind::ThreeQuarterEgamma
                                     : sc.threshold == "c045-egamma" ? ThresholdKind::C045Egamma
                                                                     : ThresholdKind::Egamma;
                Restriction restr = sc.restrict_ == "odd-squarefree" ? Restriction::OddSquarefree
                                    : sc.restrict_ == "squarefree-odd-part"
                                        ? Restriction::SquarefreeOddPart
                                        : Restriction::None;
                res = scan_robin(sc.from, sc.to, kind,
                                 sc.parity == "odd" ? Parity::Odd : Parity::All, sc.threads,
                                 restr);
            }
            if (format == "json") {
                os << "{\"from\":" << res.from << ",\"to\":" << res.to
                   << ",\"checked\":" << res.checked << ",\"violations\":[";
                for (size_t i = 0; i < res.violations.size(); ++i)
                    os << (i ? "," : "") << res.violations[i];
                os << "],\"certified_fallbacks\":" << res.certified_fallbacks
                   << ",\"unresolved\":[";
                for (size_t i = 0; i < res.unresolved.size(); ++i)
                    os << (i ? "," : "") << res.unresolved[i];
                os << "]}\n";
            } else {
                maybe_meta(os, no_meta, "scan");
                os << "scanned [" << res.from << ", " << res.to << "]: " << res.checked
                   << " candidates, " << res.violations.size() << " violations, "
                   << res.certified_fallbacks << " certified fallbacks\n";
                for (auto v : res.violations) os << "violation: " << v << "\n";
                for (auto u : res.unresolved) os << "unresolved: " << u << "\n";
            }
            if (!res.unresolved.empty()) return kExitUnresolved;
            return res.violations.empty() ? kExitOk : kExitViolation;
        }

        if (*calike_cmd) {
            std::vector<std::pair<std::uint64_t, mpq_class>> sched;
            std::stringstream ss(calike_schedule);
            std::string part;
            while (std::getline(ss, part, ',')) {
                size_t colon = part.find(':');
                if (colon == std::string::npos)
                    throw CLI::ValidationError("--schedule", "expected p:c pairs");
                sched.emplace_back(std::stoull(part.substr(0, colon)),
                                   parse_decimal_q(part.substr(colon + 1)));
            }
            auto res = build_ca_like(calike_x, sched);
            bool certified = res.verdict == CaLikeResult::Verdict::CertifiedRobin;
            if (format == "json") {
                os << "{\"x\":" << calike_x << ",\"steps\":[";
                for (size_t i = 0; i < res.steps.size(); ++i) {
                    auto& s = res.steps[i];
                    os << (i ? "," : "") << "{\"p\":" << s.p << ",\"c\":\"" << s.c.get_str()
                       << "\",\"k_bound\":[\"" << s.k_bound.lo_str() << "\",\""
                       << s.k_bound.hi_str() << "\"],\"L\":" << s.L << "}";
                }
                os << "],\"n\":\"" << res.n.value().get_str() << "\",\"factorization\":"
                   << res.n.json() << ",\"product_c\":\"" << res.product_c.get_str()
                   << "\",\"egamma_over_fx\":[\"" << res.egamma_over_fx.lo_str() << "\",\""
                   << res.egamma_over_fx.hi_str() << "\"],\"verdict\":\""
                   << (certified ? "CertifiedRobin" : "Inconclusive") << "\"}\n";
            } else {
                maybe_meta(os, no_meta, "ca-like");
                for (auto& s : res.steps)
                    os << "p=" << s.p << " c=" << s.c.get_str() << " k in " << s.k_bound.str(8)
                       << " L=" << s.L << "\n";
                os << "N = " << res.n.value().get_str() << " = " << res.n.str() << "\n"
                   << "prod c = " << res.product_c.get_str() << " ~ "
                   << mpq_class(res.product_c).get_d() << "\n"
                   << "e^gamma/f(x) in " << res.egamma_over_fx.str() << "\n"
                   << "verdict: " << (certified ? "CertifiedRobin" : "Inconclusive") << "\n";
            }
            return kExitOk;
        }

        if (*maxk_cmd) {
            Interval k = max_k(mpz_class(maxk_n, 10), parse_decimal_q(tol_str));
            if (format == "json")
                os << "{\"n\":\"" << maxk_n << "\",\"k\":[\"" << k.lo_str() << "\",\""
                   << k.hi_str() << "\"]}\n";
            else
                os << "k in " << k.str() << "\n";
            return kExitOk;
        }

        if (*gcurve_cmd) {
            Factorization f = factorize(mpz_class(gc_n, 10));
            auto rows = emit_g_curve(f, gc_p, gc_kmax, mpq_class(1, 1000000000L));
            if (gc_gnuplot) {
                for (auto& r : rows) os << r.k << " " << r.g.mid_d() << "\n";
            } else if (format == "json") {
                for (auto& r : rows)
                    os << "{\"k\":" << r.k << ",\"g\":[\"" << r.g.lo_str() << "\",\""
                       << r.g.hi_str() << "\"]}\n";
            } else {
                os << "k,g_lo,g_hi,midpoint\n";
                for (auto& r : rows)
                    os << r.k << "," << r.g.lo_str() << "," << r.g.hi_str() << "," << r.g.mid_d()
                       << "\n";
            }
            return kExitOk;
        }

        if (*xk_cmd) {
            Expr eps = lit_decimal(xk_eps);
            if (xk_verify) {
                auto rep = verify_xk_lemma(eps);
                os << "x1 ~ " << rep.x1 << "  x2 ~ " << rep.x2 << "  x3 ~ " << rep.x3 << "\n"
                   << "x_k > x_1^(1/k): " << (rep.power_bound ? "pass" : "FAIL") << "\n"
                   << "sqrt(2 x1) > x2 > sqrt(x1): " << (rep.sqrt_sandwich ? "pass" : "FAIL")
                   << "\n";
                if (rep.refined_lower)
                    os << "refined lower bound (x1 >= 1530): "
                       << (*rep.refined_lower ? "pass" : "FAIL") << "\n";
                bool ok = rep.power_bound && rep.sqrt_sandwich &&
                          (!rep.refined_lower || *rep.refined_lower);
                return ok ? kExitOk : kExitViolation;
            }
            Interval x = x_k(eps, xk_k, parse_decimal_q(xk_tol));
            if (format == "json")
                os << "{\"eps\":\"" << xk_eps << "\",\"k\":" << xk_k << ",\"x\":[\""
                   << x.lo_str() << "\",\"" << x.hi_str() << "\"]}\n";
            else
                os << "x_" << xk_k << " in " << x.str() << "\n";
            return kExitOk;
        }

        if (*const_cmd) {
            std::vector<NamedConstant> cs;
            if (const_name == "all") {
                cs = all_constants(const_digits, std::max<std::uint64_t>(const_plimit, 10000));
            } else if (const_name == "gamma") {
                cs.push_back({"gamma", gamma_const(const_digits), "directed-rounding evaluation"});
            } else if (const_name == "egamma") {
                cs.push_back({"egamma", egamma_const(const_digits), "exp of gamma enclosure"});
            } else if (const_name == "meissel-mertens") {
                cs.push_back({"meissel_mertens", meissel_mertens(const_digits),
                              "truncated prime series, tail <= 1/X"});
            } else if (const_name == "alpha41") {
                cs.push_back({"alpha_4_1", alpha_4_1(const_plimit),
                              "truncated Euler product, tail in [1-1/X, 1]"});
            } else {
                cs.push_back({"alpha_4_3", alpha_4_3(const_plimit), "e^gamma/(2 alpha_4_1)"});
            }
            size_t digits = const_digits + 2;
            if (format == "json") {
                for (auto& c : cs)
                    os << "{\"name\":\"" << c.name << "\",\"value\":[\"" << c.value.lo_str(digits)
                       << "\",\"" << c.value.hi_str(digits) << "\"],\"method\":\"" << c.derivation
                       << "\"}\n";
            } else {
                for (auto& c : cs)
                    os << c.name << " in " << c.value.str(digits) << "  [" << c.derivation
                       << "]\n";
            }
            return kExitOk;
        }

        if (*lemma_cmd) {
            LemmaId id = lemma_id_from_string(lemma_id_str);
            LemmaSamples samples;
            if (!lemma_samples_str.empty()) {
                std::stringstream ss(lemma_samples_str);
                std::string part;
                while (std::getline(ss, part, ',')) samples.points.push_back(parse_decimal_q(part));
            } else if (lemma_to >= lemma_from && lemma_to > 0) {
                samples.range_lo = lemma_from;
                samples.range_hi = lemma_to;
            } else {
                samples = default_lemma_samples(id);
            }
            LemmaReport rep = verify_lemma_bounds(id, samples);
            if (format == "json")
                os << rep.json() << "\n";
            else {
                os << lemma_id_name(id) << ": " << rep.total << " samples, "
                   << rep.failed_samples.size() << " failures -> "
                   << (rep.passed ? "pass" : "FAIL") << "\n";
                if (rep.largest_c) os << "largest admissible C in " << rep.largest_c->str() << "\n";
                if (rep.sign_change_at) os << "sign change at " << *rep.sign_change_at << "\n";
                if (rep.exp_threshold) os << "e^6.193 in " << rep.exp_threshold->str() << "\n";
            }
            return rep.passed ? kExitOk : kExitViolation;
        }

        if (*tables_cmd) {
            Parity parity = table_which == 1 ? Parity::All : Parity::Odd;
            mpz_class bound = table_which == 1 ? mpz_class(10000000) : kC0;
            auto recs = enumerate_abundant(table_which == 1 ? 20 : 70, parity, &bound);
            os << "N,factorization\n";
            for (auto& r : recs) os << r.n.get_str() << "," << r.factorization.str() << "\n";
            return kExitOk;
        }
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "unresolved: " << e.what() << "\n";
        return kExitUnresolved;
    } catch (const UnresolvedFloor& e) {
        std::cerr << "unresolved: " << e.what() << "\n";
        return kExitUnresolved;
    } catch (const TieError& e) {
        std::cerr << "tie: " << e.what() << "\n";
        return kExitUnresolved;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
