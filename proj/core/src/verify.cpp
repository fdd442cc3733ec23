#include "polyrep/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <iterator>
#include <limits>
#include <thread>

#include "polyrep/divisorside.hpp"

namespace polyrep {

namespace {

struct NamedIdentity {
    IdentityKind kind;
    std::string_view canonical;
    std::string_view cli;
};

constexpr std::array<NamedIdentity, 11> kIdentityNames{{
    {IdentityKind::lemma1, "lemma1", "lemma1"},
    {IdentityKind::lemma2, "lemma2", "lemma2"},
    {IdentityKind::binomial_identity, "binomial_identity", "binomial"},
    {IdentityKind::theorem1, "theorem1", "theorem1"},
    {IdentityKind::cor_s4, "cor_s4", "cor-s4"},
    {IdentityKind::cor_s6, "cor_s6", "cor-s6"},
    {IdentityKind::cor_s5, "cor_s5", "cor-s5"},
    {IdentityKind::cor_prime, "cor_prime", "cor-prime"},
    {IdentityKind::triple_product, "triple_product", "triple-product"},
    {IdentityKind::crosscheck_polygonal, "crosscheck_polygonal", "crosscheck-polygonal"},
    {IdentityKind::crosscheck_theta, "crosscheck_theta", "crosscheck-theta"},
}};

using Parameters = std::vector<std::pair<std::string, std::int64_t>>;

VerificationReport make_report(IdentityKind kind, Parameters params, const ExactRational& lhs,
                               const ExactRational& rhs) {
    VerificationReport r;
    r.identity = kind;
    r.parameters = std::move(params);
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.passed = (lhs == rhs);
    return r;
}

VerificationReport skipped_report(IdentityKind kind, Parameters params, std::string reason) {
    VerificationReport r;
    r.identity = kind;
    r.parameters = std::move(params);
    r.skipped_reason = std::move(reason);
    return r;
}

VerificationReport guarded(IdentityKind kind, Parameters params,
                           const std::function<VerificationReport()>& check) {
    try {
        return check();
    } catch (const DomainError& e) {
        return skipped_report(kind, std::move(params), e.what());
    }
}

void require_positive_n(std::int64_t n) {
    if (n < 1) {
        throw DomainError("n must be positive, got " + std::to_string(n));
    }
}

} // namespace

std::string_view identity_name(IdentityKind kind) {
    for (const auto& entry : kIdentityNames) {
        if (entry.kind == kind) {
            return entry.canonical;
        }
    }
    return "unknown";
}

std::optional<IdentityKind> parse_identity(std::string_view name) {
    for (const auto& entry : kIdentityNames) {
        if (entry.canonical == name || entry.cli == name) {
            return entry.kind;
        }
    }
    return std::nullopt;
}

std::vector<IdentityKind> suite_identities() {
    return {IdentityKind::lemma1,  IdentityKind::lemma2, IdentityKind::binomial_identity,
            IdentityKind::theorem1, IdentityKind::cor_s4, IdentityKind::cor_s6,
            IdentityKind::cor_s5,  IdentityKind::cor_prime, IdentityKind::triple_product};
}

std::optional<std::int64_t> VerificationReport::parameter(std::string_view name) const {
    for (const auto& [key, value] : parameters) {
        if (key == name) {
            return value;
        }
    }
    return std::nullopt;
}

ExactRational theorem_rhs(std::int64_t n, int s, const RepTable& table) {
    require_positive_n(n);
    const PolygonalSpec spec(s);
    spec.require_theorem_range();
    if (table.spec() != spec) {
        throw DomainError("theorem_rhs: table is for s = " + std::to_string(table.spec().sides()) +
                          ", requested s = " + std::to_string(s));
    }
    const auto un = static_cast<std::size_t>(n);
    if (table.j_max() < un || table.n_max() < un) {
        throw DomainError("theorem_rhs: table covers j <= " + std::to_string(table.j_max()) + ", n <= " +
                          std::to_string(table.n_max()) + " but n = " + std::to_string(n));
    }
    ExactRational total;
    for (std::size_t j = 1; j <= un; ++j) {
        const ExactInteger& t = table.count(j, un);
        if (t.is_zero()) {
            continue;
        }
        const ExactInteger weighted = binomial(n, static_cast<std::int64_t>(j)) * t;
        const ExactRational term(weighted, ExactInteger(static_cast<long long>(j)));
        if (j % 2 == 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

VerificationReport check_binomial_identity(std::int64_t n, std::int64_t j) {
    if (j < 1 || j > n) {
        throw DomainError("binomial identity needs 1 <= j <= n");
    }
    ExactRational lhs;
    for (std::int64_t k = j; k <= n; ++k) {
        lhs += ExactRational(binomial(k, j), ExactInteger(k));
    }
    const ExactRational rhs(binomial(n, j), ExactInteger(j));
    return make_report(IdentityKind::binomial_identity, {{"n", n}, {"j", j}}, lhs, rhs);
}

template <typename Value>
template <typename Build>
std::shared_ptr<const Value> Verifier::OnceCache<Value>::get(std::pair<int, std::size_t> key, Build&& build) {
    std::shared_ptr<Slot> slot;
    {
        std::lock_guard lock(mutex_);
        auto& entry = slots_[key];
        if (!entry) {
            entry = std::make_shared<Slot>();
        }
        slot = entry;
    }
    std::call_once(slot->once, [&] { slot->value = std::make_shared<const Value>(build()); });
    return slot->value;
}

std::shared_ptr<const RepTable> Verifier::rep_table(int s, std::size_t n) {
    const std::size_t cap = capacity_for(n);
    return tables_.get({s, cap}, [&] { return build_table(PolygonalSpec(s), cap, cap); });
}

std::shared_ptr<const PartialBellTable> Verifier::bell_table(int s, std::size_t n) {
    const std::size_t cap = capacity_for(n);
    return bells_.get({s, cap}, [&] {
        return PartialBellTable(taylor_coeffs(PolygonalSpec(s), cap).bell_arguments(), cap);
    });
}

std::shared_ptr<const TruncatedSeries> Verifier::log_theta(int s, std::size_t n) {
    const std::size_t cap = capacity_for(n);
    return logs_.get({s, cap}, [&] { return log(theta_series(PolygonalSpec(s), cap)); });
}

VerificationReport Verifier::check_theorem1(std::int64_t n, int s) {
    require_positive_n(n);
    PolygonalSpec(s).require_theorem_range();
    const auto table = rep_table(s, static_cast<std::size_t>(n));
    return make_report(IdentityKind::theorem1, {{"s", s}, {"n", n}}, divisor_lhs(n, s), theorem_rhs(n, s, *table));
}

VerificationReport Verifier::check_lemma1(std::int64_t n, int s) {
    require_positive_n(n);
    PolygonalSpec(s).require_theorem_range();
    const auto un = static_cast<std::size_t>(n);

    const ExactRational divisor_side = divisor_lhs(n, s);
    const ExactRational bell_side =
        log_polynomial(un, *bell_table(s, un)) / ExactRational(factorial(n));
    const ExactRational log_side = -(*log_theta(s, un))[un];

    auto report = make_report(IdentityKind::lemma1, {{"s", s}, {"n", n}}, divisor_side, bell_side);
    report.witnesses.emplace_back("log_series", log_side.to_string());
    report.passed = report.passed && divisor_side == log_side;
    return report;
}

VerificationReport Verifier::check_lemma2(std::int64_t n, std::int64_t k, int s) {
    require_positive_n(n);
    if (k < 1 || k > n) {
        throw DomainError("lemma2 needs 1 <= k <= n");
    }
    const PolygonalSpec spec(s);
    const auto un = static_cast<std::size_t>(n);
    const auto uk = static_cast<std::size_t>(k);

    const ExactRational bell = (*bell_table(s, un))(un, uk);

    const auto table = rep_table(s, un);
    ExactInteger alternating;
    for (std::size_t j = 1; j <= uk; ++j) {
        const ExactInteger term = binomial(k, static_cast<std::int64_t>(j)) * table->count(j, un);
        if ((uk - j) % 2 == 0) {
            alternating += term;
        } else {
            alternating -= term;
        }
    }
    const ExactRational rhs = ExactRational(factorial(n), factorial(k)) * ExactRational(alternating);
    return make_report(IdentityKind::lemma2, {{"s", s}, {"n", n}, {"k", k}}, bell, rhs);
}

VerificationReport Verifier::check_corollary(CorollaryKind kind, std::int64_t n, std::int64_t p) {
    require_positive_n(n);
    const auto un = static_cast<std::size_t>(n);
    switch (kind) {
    case CorollaryKind::square: {
        auto report = make_report(IdentityKind::cor_s4, {{"s", 4}, {"n", n}}, jha_square_lhs(n),
                                  theorem_rhs(n, 4, *rep_table(4, un)));
        report.witnesses.emplace_back("divisor_lhs", divisor_lhs(n, 4).to_string());
        return report;
    }
    case CorollaryKind::triangular: {
        auto report = make_report(IdentityKind::cor_s6, {{"s", 6}, {"n", n}}, jha_triangular_lhs(n),
                                  theorem_rhs(n, 6, *rep_table(6, un)));
        report.witnesses.emplace_back("divisor_lhs", divisor_lhs(n, 6).to_string());
        return report;
    }
    case CorollaryKind::pentagonal: {
        const ExactRational general = divisor_lhs(n, 5);
        const ExactRational case_form = pentagonal_corollary_lhs(n);
        auto report = make_report(IdentityKind::cor_s5, {{"s", 5}, {"n", n}}, general,
                                  theorem_rhs(n, 5, *rep_table(5, un)));
        report.witnesses.emplace_back("mod3_form", case_form.to_string());
        report.passed = report.passed && case_form == general;
        return report;
    }
    case CorollaryKind::prime: {
        if (!prime_corollary_applies(n, p)) {
            throw DomainError("cor_prime needs an odd prime p with p | n, p^2 not dividing n (n = " +
                              std::to_string(n) + ", p = " + std::to_string(p) + ")");
        }
        const int s = static_cast<int>(p + 2);
        const ExactRational rhs = prime_corollary_rhs_value(n, p);
        const std::int64_t r = (n / p) % p;
        ExactRational middle = reciprocal_divisor_sum_excluding(n, p);
        if (r == 1 || r == p - 1) {
            middle -= ExactRational(ExactInteger(1), ExactInteger(p));
        }
        auto report = make_report(IdentityKind::cor_prime, {{"s", s}, {"n", n}, {"p", p}},
                                  theorem_rhs(n, s, *rep_table(s, un)), rhs);
        report.witnesses.emplace_back("divisor_form", middle.to_string());
        report.passed = report.passed && middle == rhs;
        return report;
    }
    }
    throw DomainError("unknown corollary kind");
}

std::vector<VerificationReport> Verifier::check_triple_product(int s, std::size_t order) {
    const PolygonalSpec spec(s);
    const TruncatedSeries product = triple_product_series(spec, order);
    const TruncatedSeries direct = theta_series(spec, order);
    std::vector<VerificationReport> out;
    out.reserve(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        out.push_back(make_report(IdentityKind::triple_product,
                                  {{"s", s}, {"n", static_cast<std::int64_t>(i)}}, direct[i], product[i]));
    }
    return out;
}

SuiteSummary summarize(const std::vector<VerificationReport>& reports) {
    SuiteSummary summary;
    for (const auto& r : reports) {
        if (r.skipped()) {
            ++summary.skipped;
        } else if (r.passed) {
            ++summary.passed;
        } else {
            ++summary.failed;
        }
    }
    return summary;
}

namespace {

using Task = std::function<std::vector<VerificationReport>()>;

std::vector<Task> plan_tasks(const SuiteConfig& config, Verifier& verifier) {
    std::vector<Task> tasks;
    const std::int64_t n_max = config.n_max;

    auto per_s = [&](IdentityKind kind, auto&& body) {
        for (int s = config.s_min; s <= config.s_max; ++s) {
            tasks.push_back([kind, s, body] {
                std::vector<VerificationReport> out;
                body(kind, s, out);
                return out;
            });
        }
    };

    for (IdentityKind kind : config.identities) {
        switch (kind) {
        case IdentityKind::theorem1:
            per_s(kind, [&verifier, n_max](IdentityKind k, int s, std::vector<VerificationReport>& out) {
                for (std::int64_t n = 1; n <= n_max; ++n) {
                    out.push_back(guarded(k, {{"s", s}, {"n", n}}, [&] { return verifier.check_theorem1(n, s); }));
                }
            });
            break;
        case IdentityKind::lemma1:
            per_s(kind, [&verifier, n_max](IdentityKind k, int s, std::vector<VerificationReport>& out) {
                for (std::int64_t n = 1; n <= n_max; ++n) {
                    out.push_back(guarded(k, {{"s", s}, {"n", n}}, [&] { return verifier.check_lemma1(n, s); }));
                }
            });
            break;
        case IdentityKind::lemma2:
            per_s(kind, [&verifier, n_max](IdentityKind k, int s, std::vector<VerificationReport>& out) {
                for (std::int64_t n = 1; n <= n_max; ++n) {
                    for (std::int64_t kk = 1; kk <= n; ++kk) {
                        out.push_back(guarded(k, {{"s", s}, {"n", n}, {"k", kk}},
                                              [&] { return verifier.check_lemma2(n, kk, s); }));
                    }
                }
            });
            break;
        case IdentityKind::triple_product:
            per_s(kind, [&verifier, n_max](IdentityKind k, int s, std::vector<VerificationReport>& out) {
                try {
                    auto reports = verifier.check_triple_product(s, static_cast<std::size_t>(std::max<std::int64_t>(n_max, 0)));
                    out.insert(out.end(), reports.begin(), reports.end());
                } catch (const DomainError& e) {
                    out.push_back(skipped_report(k, {{"s", s}}, e.what()));
                }
            });
            break;
        case IdentityKind::binomial_identity:
            tasks.push_back([n_max] {
                std::vector<VerificationReport> out;
                for (std::int64_t n = 1; n <= n_max; ++n) {
                    for (std::int64_t j = 1; j <= n; ++j) {
                        out.push_back(check_binomial_identity(n, j));
                    }
                }
                return out;
            });
            break;
        case IdentityKind::cor_s4:
        case IdentityKind::cor_s6:
        case IdentityKind::cor_s5: {
            const CorollaryKind ck = kind == IdentityKind::cor_s4   ? CorollaryKind::square
                                     : kind == IdentityKind::cor_s6 ? CorollaryKind::triangular
                                                                    : CorollaryKind::pentagonal;
            const int s = kind == IdentityKind::cor_s4 ? 4 : kind == IdentityKind::cor_s6 ? 6 : 5;
            tasks.push_back([&verifier, kind, ck, s, n_max] {
                std::vector<VerificationReport> out;
                for (std::int64_t n = 1; n <= n_max; ++n) {
                    out.push_back(guarded(kind, {{"s", s}, {"n", n}}, [&] { return verifier.check_corollary(ck, n); }));
                }
                return out;
            });
            break;
        }
        case IdentityKind::cor_prime:
            for (std::int64_t p : config.primes) {
                tasks.push_back([&verifier, p, n_max] {
                    std::vector<VerificationReport> out;
                    if (p <= 2 || !is_prime(p)) {
                        out.push_back(skipped_report(IdentityKind::cor_prime, {{"s", p + 2}, {"p", p}},
                                                     "p = " + std::to_string(p) + " is not an odd prime"));
                        return out;
                    }
                    for (std::int64_t n = p; n <= n_max; n += p) {
                        if ((n / p) % p == 0) {
                            continue;
                        }
                        out.push_back(guarded(IdentityKind::cor_prime, {{"s", p + 2}, {"n", n}, {"p", p}},
                                              [&] { return verifier.check_corollary(CorollaryKind::prime, n, p); }));
                    }
                    return out;
                });
            }
            break;
        case IdentityKind::crosscheck_polygonal:
        case IdentityKind::crosscheck_theta:
            // Needs fixture files; driven by the crosscheck module instead.
            break;
        }
    }
    return tasks;
}

bool report_order(const VerificationReport& a, const VerificationReport& b) {
    if (a.identity != b.identity) {
        return a.identity < b.identity;
    }
    constexpr auto absent = std::numeric_limits<std::int64_t>::min();
    const auto as = a.parameter("s").value_or(absent);
    const auto bs = b.parameter("s").value_or(absent);
    if (as != bs) {
        return as < bs;
    }
    const auto an = a.parameter("n").value_or(absent);
    const auto bn = b.parameter("n").value_or(absent);
    if (an != bn) {
        return an < bn;
    }
    return a.parameters < b.parameters;
}

} // namespace

SuiteResult run_suite(const SuiteConfig& config) {
    Verifier verifier(static_cast<std::size_t>(std::max<std::int64_t>(config.n_max, 0)));
    const std::vector<Task> tasks = plan_tasks(config, verifier);

    std::vector<std::vector<VerificationReport>> results(tasks.size());
    unsigned workers = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(tasks.size(), 1)));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto drain = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    if (workers <= 1) {
        drain();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(drain);
        }
    }

    if (error) {
        std::rethrow_exception(error);
    }

    SuiteResult out;
    for (auto& chunk : results) {
        std::move(chunk.begin(), chunk.end(), std::back_inserter(out.reports));
    }
    std::stable_sort(out.reports.begin(), out.reports.end(), report_order);
    out.summary = summarize(out.reports);
    return out;
}

} // namespace polyrep
