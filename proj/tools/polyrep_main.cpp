// polyrep: generalized polygonal numbers, theta series, representation
// counts and the divisor-sum identities that connect them.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyrep/bell.hpp"
#include "polyrep/crosscheck.hpp"
#include "polyrep/divisorside.hpp"
#include "polyrep/polygonal.hpp"
#include "polyrep/repcount.hpp"
#include "polyrep/report_io.hpp"
#include "polyrep/series.hpp"
#include "polyrep/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

using namespace polyrep;

int run_theta(int s, std::size_t n_max, const std::string& form) {
    const PolygonalSpec spec(s);
    const TruncatedSeries series = form == "product" ? triple_product_series(spec, n_max) : theta_series(spec, n_max);
    std::cout << "n,coeff\n";
    for (std::size_t i = 0; i <= series.order(); ++i) {
        std::cout << i << ',' << series[i] << '\n';
    }
    return kExitPass;
}

int run_reps(int s, std::size_t j, std::size_t n_max, const std::string& format) {
    const RepTable table = build_table(PolygonalSpec(s), j, n_max);
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["s"] = s;
        doc["j"] = j;
        auto counts = nlohmann::ordered_json::array();
        for (const auto& c : table.row(j)) {
            counts.push_back(c.to_string());
        }
        doc["counts"] = std::move(counts);
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << "n,count\n";
        const auto row = table.row(j);
        for (std::size_t n = 0; n < row.size(); ++n) {
            std::cout << n << ',' << row[n] << '\n';
        }
    }
    return kExitPass;
}

int run_lhs(const std::string& form, int s, std::int64_t n) {
    if (form == "jha-square") {
        std::cout << jha_square_lhs(n) << '\n';
    } else if (form == "jha-tri") {
        std::cout << jha_triangular_lhs(n) << '\n';
    } else {
        std::cout << divisor_lhs(n, s) << '\n';
    }
    return kExitPass;
}

int run_bell(int s, std::size_t n_max) {
    const PolygonalSpec spec(s);
    const TaylorCoeffs g = taylor_coeffs(spec, n_max);
    const PartialBellTable table(g.bell_arguments(), n_max);
    const TruncatedSeries theta = theta_series(spec, n_max);
    const bool has_log = theta[0] == ExactRational(1);
    const TruncatedSeries log_theta = has_log ? log(theta) : TruncatedSeries(n_max);

    std::cout << "n,L_n,L_n/n!,log_coeff\n";
    ExactInteger fact = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        fact *= ExactInteger(static_cast<long long>(n));
        const ExactRational ln = log_polynomial(n, table);
        std::cout << n << ',' << ln << ',' << ln / ExactRational(fact) << ','
                  << (has_log ? log_theta[n].to_string() : std::string("n/a")) << '\n';
    }
    return kExitPass;
}

int run_series(int s, std::size_t n_max, const std::string& op) {
    const TruncatedSeries theta = theta_series(PolygonalSpec(s), n_max);
    if (op == "log") {
        std::cout << log(theta).to_string() << '\n';
    } else if (op == "exp-log") {
        std::cout << exp(log(theta)).to_string() << '\n';
    } else {
        std::cout << theta.to_string() << '\n';
    }
    return kExitPass;
}

struct VerifyOptions {
    std::string identity = "all";
    int s_min = 4;
    int s_max = 12;
    std::int64_t n_max = 60;
    std::vector<std::int64_t> primes{3, 5, 7, 11, 13};
    std::string format = "summary";
    unsigned threads = 0;
};

int run_verify(const VerifyOptions& opts) {
    SuiteConfig config;
    if (opts.identity != "all") {
        const auto kind = parse_identity(opts.identity);
        if (!kind) {
            std::cerr << "unknown identity '" << opts.identity << "'\n";
            return kExitUsage;
        }
        config.identities = {*kind};
    }
    config.s_min = opts.s_min;
    config.s_max = opts.s_max;
    config.n_max = opts.n_max;
    config.primes = opts.primes;
    config.threads = opts.threads;

    const SuiteResult result = run_suite(config);
    if (opts.format == "json") {
        std::cout << reports_to_json(result.reports);
    } else if (opts.format == "csv") {
        std::cout << reports_to_csv(result.reports);
    } else {
        std::cout << reports_to_summary(result.reports);
    }
    return result.summary.all_passed() ? kExitPass : kExitFail;
}

int run_crosscheck(const std::string& fixture_path, const std::string& kind, int s, std::int64_t limit) {
    const BFileSequence fixture = load_bfile(fixture_path);
    const CrosscheckKind ck = kind == "theta" ? CrosscheckKind::theta_coeffs : CrosscheckKind::polygonal_values;
    const VerificationReport report = crosscheck_sequence(ck, PolygonalSpec(s), fixture, limit);
    std::cout << fixture.sequence_id << ' ' << identity_name(report.identity) << " s=" << s << " limit=" << limit
              << ": " << (report.passed ? "pass" : "FAIL");
    if (const auto at = report.parameter("mismatch_index")) {
        std::cout << " (first mismatch at index " << *at << ": computed " << report.lhs << ", fixture "
                  << report.rhs << ')';
    }
    std::cout << '\n';
    return report.passed ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized polygonal numbers, theta series and divisor-sum identities"};
    app.require_subcommand(1);

    int s = 4;
    std::size_t n_max = 20;
    std::int64_t n = 1;

    std::string theta_form = "sum";
    auto* theta = app.add_subcommand("theta", "Coefficients of G_s(q) as CSV (n, coeff)");
    theta->add_option("--s", s, "Number of sides (>= 3)")->required();
    theta->add_option("--n-max", n_max, "Truncation order")->required();
    theta->add_option("--form", theta_form, "sum: direct enumeration, product: triple product")
        ->check(CLI::IsMember({"sum", "product"}));

    std::size_t j = 1;
    std::string reps_format = "csv";
    auto* reps = app.add_subcommand("reps", "Representation counts t_{s,j}(n) for n <= n-max");
    reps->add_option("--s", s, "Number of sides (>= 3)")->required();
    reps->add_option("--j", j, "Number of summands")->required();
    reps->add_option("--n-max", n_max, "Largest n")->required();
    reps->add_option("--format", reps_format)->check(CLI::IsMember({"csv", "json"}));

    std::string lhs_form = "theorem";
    auto* lhs = app.add_subcommand("lhs", "Divisor-sum side as an exact rational");
    lhs->add_option("--s", s, "Number of sides (>= 4), for --form theorem");
    lhs->add_option("--n", n, "Positive integer n")->required();
    lhs->add_option("--form", lhs_form)->check(CLI::IsMember({"theorem", "jha-square", "jha-tri"}));

    auto* bell = app.add_subcommand("bell", "Logarithmic polynomials L_1..L_N next to the log-series coefficients");
    bell->add_option("--s", s, "Number of sides (>= 3)")->required();
    bell->add_option("--n", n_max, "Largest n")->required();

    std::string series_op = "theta";
    auto* series = app.add_subcommand("series", "Print G_s(q), log G_s(q) or exp(log G_s(q))");
    series->add_option("--s", s, "Number of sides (>= 3)")->required();
    series->add_option("--n-max", n_max, "Truncation order")->required();
    series->add_option("--op", series_op)->check(CLI::IsMember({"theta", "log", "exp-log"}));

    VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "Check identities exhaustively over finite ranges");
    verify->add_option("--identity", vopts.identity,
                       "all|theorem1|lemma1|lemma2|binomial|cor-s4|cor-s6|cor-s5|cor-prime|triple-product");
    verify->add_option("--s-min", vopts.s_min);
    verify->add_option("--s-max", vopts.s_max);
    verify->add_option("--n-max", vopts.n_max);
    verify->add_option("--p", vopts.primes, "Odd primes for cor-prime")->delimiter(',');
    verify->add_option("--format", vopts.format)->check(CLI::IsMember({"json", "csv", "summary"}));
    verify->add_option("--threads", vopts.threads, "Worker threads (0 = hardware concurrency)");

    std::string fixture_path;
    std::string cc_kind = "polygonal";
    std::int64_t limit = 100;
    auto* crosscheck = app.add_subcommand("crosscheck", "Compare generated data with an OEIS b-file");
    crosscheck->add_option("--fixture", fixture_path, "Path to the b-file")->required();
    crosscheck->add_option("--kind", cc_kind)->check(CLI::IsMember({"polygonal", "theta"}));
    crosscheck->add_option("--s", s, "Number of sides (>= 3)")->required();
    crosscheck->add_option("--limit", limit, "Largest value (polygonal) or index (theta) compared");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*theta) return run_theta(s, n_max, theta_form);
        if (*reps) return run_reps(s, j, n_max, reps_format);
        if (*lhs) return run_lhs(lhs_form, s, n);
        if (*bell) return run_bell(s, n_max);
        if (*series) return run_series(s, n_max, series_op);
        if (*verify) return run_verify(vopts);
        if (*crosscheck) return run_crosscheck(fixture_path, cc_kind, s, limit);
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BFileParseError& e) {
        std::cerr << "fixture parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
