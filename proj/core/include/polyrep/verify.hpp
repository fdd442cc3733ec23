#ifndef POLYREP_VERIFY_HPP
#define POLYREP_VERIFY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyrep/bell.hpp"
#include "polyrep/exactnum.hpp"
#include "polyrep/polygonal.hpp"
#include "polyrep/repcount.hpp"
#include "polyrep/series.hpp"

namespace polyrep {

/// Identities the engine can check. Declaration order is the report sort order.
enum class IdentityKind {
    lemma1,
    lemma2,
    binomial_identity,
    theorem1,
    cor_s4,
    cor_s6,
    cor_s5,
    cor_prime,
    triple_product,
    crosscheck_polygonal,
    crosscheck_theta,
};

/// Canonical snake_case name, as written in reports.
std::string_view identity_name(IdentityKind kind);

/// Accepts canonical names and the CLI spellings ("binomial", "cor-s4", ...).
std::optional<IdentityKind> parse_identity(std::string_view name);

/// Identities run by `verify --identity all`.
std::vector<IdentityKind> suite_identities();

/// One checked instance of an identity. Both sides are kept as canonical
/// "p/q" strings so that a failing report carries its counterexample.
struct VerificationReport {
    IdentityKind identity = IdentityKind::theorem1;
    std::vector<std::pair<std::string, std::int64_t>> parameters;
    std::string lhs;
    std::string rhs;
    bool passed = false;
    /// Extra exact values that took part in the check (e.g. a third evaluation path).
    std::vector<std::pair<std::string, std::string>> witnesses;
    /// Set when the check could not run because its arguments were outside the domain.
    std::optional<std::string> skipped_reason;

    std::optional<std::int64_t> parameter(std::string_view name) const;
    bool skipped() const noexcept { return skipped_reason.has_value(); }
};

/// sum_{j=1}^{n} ((-1)^j / j) C(n, j) t_{s,j}(n).
/// Throws DomainError when the table is for another s or does not cover (j <= n, index n).
ExactRational theorem_rhs(std::int64_t n, int s, const RepTable& table);

/// The two sides of sum_{k=j}^{n} C(k, j)/k = C(n, j)/j.
VerificationReport check_binomial_identity(std::int64_t n, std::int64_t j);

enum class CorollaryKind { square, triangular, pentagonal, prime };

/// Runs identity checks over shared per-s precomputation.
///
/// Representation tables, Bell tables and log-series are built once per
/// (s, capacity) and then shared read-only, so one Verifier may be used from
/// several threads at once.
class Verifier {
public:
    /// Tables are built for at least n_capacity terms, so a sweep over
    /// n <= n_capacity builds each of them exactly once per s.
    explicit Verifier(std::size_t n_capacity = 0) : capacity_(n_capacity) {}

    VerificationReport check_theorem1(std::int64_t n, int s);

    /// Three evaluation paths: divisor_lhs (lhs), L_n / n! (rhs), and the
    /// negated q^n coefficient of log G_s (witness "log_series").
    VerificationReport check_lemma1(std::int64_t n, int s);

    /// B_{n,k}(g_1, ...) (lhs) against (n!/k!) sum_j (-1)^{k-j} C(k, j) t_{s,j}(n) (rhs).
    VerificationReport check_lemma2(std::int64_t n, std::int64_t k, int s);

    /// p is only read for CorollaryKind::prime.
    VerificationReport check_corollary(CorollaryKind kind, std::int64_t n, std::int64_t p = 0);

    /// Coefficientwise theta_series = triple_product_series, one report per q^n, n <= order.
    std::vector<VerificationReport> check_triple_product(int s, std::size_t order);

    std::shared_ptr<const RepTable> rep_table(int s, std::size_t n);
    std::shared_ptr<const PartialBellTable> bell_table(int s, std::size_t n);
    std::shared_ptr<const TruncatedSeries> log_theta(int s, std::size_t n);

private:
    template <typename Value>
    class OnceCache {
    public:
        template <typename Build>
        std::shared_ptr<const Value> get(std::pair<int, std::size_t> key, Build&& build);

    private:
        struct Slot {
            std::once_flag once;
            std::shared_ptr<const Value> value;
        };
        std::mutex mutex_;
        std::map<std::pair<int, std::size_t>, std::shared_ptr<Slot>> slots_;
    };

    std::size_t capacity_for(std::size_t n) const noexcept { return n > capacity_ ? n : capacity_; }

    std::size_t capacity_;
    OnceCache<RepTable> tables_;
    OnceCache<PartialBellTable> bells_;
    OnceCache<TruncatedSeries> logs_;
};

struct SuiteConfig {
    std::vector<IdentityKind> identities = suite_identities();
    int s_min = 4;
    int s_max = 12;
    std::int64_t n_max = 60;
    std::vector<std::int64_t> primes{3, 5, 7, 11, 13};
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct SuiteSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    bool all_passed() const noexcept { return failed == 0; }
};

struct SuiteResult {
    std::vector<VerificationReport> reports;
    SuiteSummary summary;
};

/// Runs every configured identity over its range. Reports are ordered by
/// identity, then s, then n, then the remaining parameters, independent of
/// thread scheduling. Domain errors become skipped reports.
SuiteResult run_suite(const SuiteConfig& config);

SuiteSummary summarize(const std::vector<VerificationReport>& reports);

} // namespace polyrep

#endif // POLYREP_VERIFY_HPP
