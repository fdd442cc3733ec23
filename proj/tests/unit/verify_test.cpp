#include <gtest/gtest.h>
#include <json.hpp>

#include "polyrep/divisorside.hpp"
#include "polyrep/report_io.hpp"
#include "polyrep/verify.hpp"

using namespace polyrep;

namespace {
ExactRational frac(long long p, long long q) {
    return ExactRational(ExactInteger(p), ExactInteger(q));
}
} // namespace

TEST(TheoremRhs, Examples) {
    const RepTable four = build_table(PolygonalSpec(4), 10, 10);
    EXPECT_EQ(theorem_rhs(1, 4, four), ExactRational(-2));
    EXPECT_EQ(theorem_rhs(2, 4, four), ExactRational(2));
    EXPECT_EQ(theorem_rhs(1, 7, build_table(PolygonalSpec(7), 1, 1)), ExactRational(-1));
}

TEST(TheoremRhs, FrozenValuesFromIndependentEnumeration) {
    // Exact values from a separate rational implementation (enumerated theta, schoolbook powers).
    struct Case { std::int64_t n; int s; ExactRational value; };
    const std::vector<Case> cases{{5, 4, frac(-12, 5)}, {7, 5, frac(-8, 7)}, {10, 6, frac(3, 5)},
                                  {12, 8, frac(19, 12)}, {9, 12, frac(-10, 9)}, {30, 7, frac(11, 6)}};
    for (const auto& c : cases) {
        const RepTable table = build_table(PolygonalSpec(c.s), c.n, c.n);
        EXPECT_EQ(theorem_rhs(c.n, c.s, table), c.value) << "n=" << c.n << " s=" << c.s;
        EXPECT_EQ(divisor_lhs(c.n, c.s), c.value) << "n=" << c.n << " s=" << c.s;
    }
}

TEST(TheoremRhs, RejectsMismatchedTables) {
    const RepTable small = build_table(PolygonalSpec(4), 3, 3);
    EXPECT_THROW(theorem_rhs(4, 4, small), DomainError);
    EXPECT_THROW(theorem_rhs(2, 5, small), DomainError);
    EXPECT_THROW(theorem_rhs(0, 4, small), DomainError);
    EXPECT_THROW(theorem_rhs(1, 3, build_table(PolygonalSpec(3), 2, 2)), DomainError);
}

TEST(Verifier, Theorem1Examples) {
    Verifier v;
    auto r = v.check_theorem1(1, 4);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.lhs, "-2");
    EXPECT_EQ(r.rhs, "-2");
    r = v.check_theorem1(2, 4);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.lhs, "2");
    r = v.check_theorem1(1, 6);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.rhs, "-1");
    EXPECT_THROW(v.check_theorem1(1, 3), DomainError);
    EXPECT_THROW(v.check_theorem1(0, 5), DomainError);
}

TEST(Verifier, Theorem1SmallSweep) {
    Verifier v(25);
    for (int s = 4; s <= 16; ++s) {
        for (std::int64_t n = 1; n <= 25; ++n) {
            const auto r = v.check_theorem1(n, s);
            ASSERT_TRUE(r.passed) << "s=" << s << " n=" << n << " lhs=" << r.lhs << " rhs=" << r.rhs;
        }
    }
}

TEST(Verifier, Lemma1ThreeWay) {
    Verifier v;
    auto r = v.check_lemma1(1, 4);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.lhs, "-2");
    EXPECT_EQ(r.rhs, "-2");
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(r.witnesses[0], (std::pair<std::string, std::string>{"log_series", "-2"}));
    EXPECT_TRUE(v.check_lemma1(3, 5).passed);
    EXPECT_TRUE(v.check_lemma1(10, 6).passed);
    EXPECT_THROW(v.check_lemma1(2, 3), DomainError);
}

TEST(Verifier, Lemma2Examples) {
    Verifier v;
    auto r = v.check_lemma2(1, 1, 4);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.lhs, "2");
    r = v.check_lemma2(2, 2, 4);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.lhs, "4");
    r = v.check_lemma2(3, 1, 6);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.lhs, "6");
    EXPECT_THROW(v.check_lemma2(2, 3, 4), DomainError);
    EXPECT_THROW(v.check_lemma2(2, 0, 4), DomainError);
}

TEST(BinomialIdentity, Examples) {
    for (std::int64_t j = 1; j <= 8; ++j) {
        const auto r = check_binomial_identity(j, j);
        EXPECT_TRUE(r.passed);
        EXPECT_EQ(r.lhs, frac(1, j).to_string());
    }
    auto r = check_binomial_identity(4, 2);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.lhs, "3");
    r = check_binomial_identity(10, 1);
    EXPECT_EQ(r.rhs, "10");
    EXPECT_TRUE(r.passed);
    EXPECT_THROW(check_binomial_identity(3, 4), DomainError);
    EXPECT_THROW(check_binomial_identity(3, 0), DomainError);
}

TEST(Verifier, CorollaryExamples) {
    Verifier v;
    auto r = v.check_corollary(CorollaryKind::square, 1);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.lhs, "-2");
    r = v.check_corollary(CorollaryKind::triangular, 1);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.rhs, "-1");
    r = v.check_corollary(CorollaryKind::prime, 3, 3);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.lhs, "2/3");
    EXPECT_EQ(r.rhs, "2/3");
    EXPECT_THROW(v.check_corollary(CorollaryKind::prime, 9, 3), DomainError);
    EXPECT_THROW(v.check_corollary(CorollaryKind::prime, 6, 2), DomainError);
}

TEST(Verifier, PentagonalCorollaryChecksCaseForm) {
    Verifier v(60);
    for (std::int64_t n = 1; n <= 60; ++n) {
        const auto r = v.check_corollary(CorollaryKind::pentagonal, n);
        ASSERT_TRUE(r.passed) << "n = " << n;
        ASSERT_EQ(r.witnesses.at(0).first, "mod3_form");
        ASSERT_EQ(r.witnesses.at(0).second, r.lhs);
    }
}

TEST(Verifier, PrimeCorollaryFailsAtFifteen) {
    Verifier v;
    const auto r = v.check_corollary(CorollaryKind::prime, 15, 3);
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.lhs, "4/5");
    EXPECT_EQ(r.rhs, "14/15");
}

TEST(Verifier, TripleProductReports) {
    Verifier v;
    const auto reports = v.check_triple_product(5, 10);
    ASSERT_EQ(reports.size(), 11u);
    for (const auto& r : reports) {
        EXPECT_TRUE(r.passed);
    }
    EXPECT_THROW(v.check_triple_product(3, 4), DomainError);
}

TEST(Verifier, TablesAreSharedPerS) {
    Verifier v(30);
    const auto a = v.rep_table(5, 10);
    const auto b = v.rep_table(5, 30);
    EXPECT_EQ(a.get(), b.get());
    EXPECT_EQ(a->n_max(), 30u);
    EXPECT_NE(v.rep_table(5, 40).get(), a.get());
}

TEST(IdentityNames, RoundTrip) {
    for (auto kind : suite_identities()) {
        EXPECT_EQ(parse_identity(identity_name(kind)), kind);
    }
    EXPECT_EQ(parse_identity("binomial"), IdentityKind::binomial_identity);
    EXPECT_EQ(parse_identity("cor-prime"), IdentityKind::cor_prime);
    EXPECT_FALSE(parse_identity("lemma3").has_value());
}

TEST(RunSuite, EmptyConfigYieldsNothing) {
    SuiteConfig config;
    config.identities.clear();
    EXPECT_TRUE(run_suite(config).reports.empty());

    config = SuiteConfig{};
    config.s_min = 5;
    config.s_max = 4;
    config.n_max = 0;
    config.primes.clear();
    EXPECT_TRUE(run_suite(config).reports.empty());
}

TEST(RunSuite, SmallTheoremRange) {
    SuiteConfig config;
    config.identities = {IdentityKind::theorem1};
    config.s_min = 4;
    config.s_max = 4;
    config.n_max = 2;
    const auto result = run_suite(config);
    ASSERT_EQ(result.reports.size(), 2u);
    EXPECT_EQ(result.summary.passed, 2u);
    EXPECT_EQ(result.reports[0].parameter("n"), 1);
    EXPECT_EQ(result.reports[1].parameter("n"), 2);
}

TEST(RunSuite, DomainErrorsBecomeSkippedReports) {
    SuiteConfig config;
    config.identities = {IdentityKind::theorem1, IdentityKind::cor_prime};
    config.s_min = 3;
    config.s_max = 4;
    config.n_max = 3;
    config.primes = {4, 3};
    const auto result = run_suite(config);
    EXPECT_EQ(result.summary.failed, 0u);
    EXPECT_EQ(result.summary.skipped, 4u); // theorem1 s=3 (n=1..3) and p=4
    for (const auto& r : result.reports) {
        if (r.skipped()) {
            EXPECT_FALSE(r.passed);
            EXPECT_FALSE(r.skipped_reason->empty());
        }
    }
}

TEST(RunSuite, OrderedAndIndependentOfThreadCount) {
    SuiteConfig config;
    config.s_min = 4;
    config.s_max = 7;
    config.n_max = 15;
    config.threads = 1;
    const auto serial = run_suite(config);
    config.threads = 8;
    const auto parallel = run_suite(config);
    EXPECT_EQ(reports_to_json(serial.reports), reports_to_json(parallel.reports));
    EXPECT_TRUE(std::is_sorted(serial.reports.begin(), serial.reports.end(),
                               [](const VerificationReport& a, const VerificationReport& b) {
                                   if (a.identity != b.identity) return a.identity < b.identity;
                                   const auto as = a.parameter("s").value_or(-1), bs = b.parameter("s").value_or(-1);
                                   if (as != bs) return as < bs;
                                   return a.parameter("n").value_or(-1) < b.parameter("n").value_or(-1);
                               }));
}

TEST(ReportIo, JsonUsesReportFieldNames) {
    SuiteConfig config;
    config.identities = {IdentityKind::lemma1};
    config.s_min = config.s_max = 4;
    config.n_max = 2;
    const auto doc = nlohmann::json::parse(reports_to_json(run_suite(config).reports));
    ASSERT_TRUE(doc.is_array());
    ASSERT_EQ(doc.size(), 2u);
    const auto& first = doc[0];
    EXPECT_EQ(first["identity_name"], "lemma1");
    EXPECT_EQ(first["parameters"]["s"], 4);
    EXPECT_EQ(first["parameters"]["n"], 1);
    EXPECT_EQ(first["lhs"], "-2");
    EXPECT_EQ(first["rhs"], "-2");
    EXPECT_EQ(first["passed"], true);
    EXPECT_EQ(first["witnesses"]["log_series"], "-2");
    EXPECT_FALSE(first.contains("skipped_reason"));
}

TEST(ReportIo, CsvAndSummary) {
    SuiteConfig config;
    config.identities = {IdentityKind::binomial_identity};
    config.n_max = 2;
    const auto reports = run_suite(config).reports;
    EXPECT_EQ(reports_to_csv(reports),
              "identity_name,parameters,lhs,rhs,passed,note\n"
              "binomial_identity,n=1;j=1,1,1,true,\n"
              "binomial_identity,n=2;j=1,2,2,true,\n"
              "binomial_identity,n=2;j=2,1/2,1/2,true,\n");
    EXPECT_EQ(reports_to_summary(reports),
              "binomial_identity: 3 passed, 0 failed, 0 skipped\n"
              "total: 3 passed, 0 failed, 0 skipped\n");
}
