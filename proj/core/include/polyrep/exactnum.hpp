#ifndef POLYREP_EXACTNUM_HPP
#define POLYREP_EXACTNUM_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace polyrep {

/// Raised when an argument lies outside the mathematical domain of an operation
/// (n <= 0 for divisor functions, s < 4 for theorem-level checks, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Arbitrary-precision signed integer.
class ExactInteger {
public:
    ExactInteger() = default;
    ExactInteger(long long value) : value_(static_cast<long>(value)) {}
    explicit ExactInteger(mpz_class value) : value_(std::move(value)) {}

    /// Parses an optionally signed decimal literal. Throws std::invalid_argument.
    static ExactInteger parse(std::string_view text);

    const mpz_class& raw() const noexcept { return value_; }

    int sign() const noexcept { return sgn(value_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_odd() const noexcept { return mpz_odd_p(value_.get_mpz_t()) != 0; }
    bool fits_int64() const noexcept { return value_.fits_slong_p(); }
    std::int64_t to_int64() const;

    std::string to_string() const { return value_.get_str(10); }

    ExactInteger operator-() const { return ExactInteger(mpz_class(-value_)); }
    ExactInteger& operator+=(const ExactInteger& rhs) { value_ += rhs.value_; return *this; }
    ExactInteger& operator-=(const ExactInteger& rhs) { value_ -= rhs.value_; return *this; }
    ExactInteger& operator*=(const ExactInteger& rhs) { value_ *= rhs.value_; return *this; }

    friend ExactInteger operator+(ExactInteger a, const ExactInteger& b) { return a += b; }
    friend ExactInteger operator-(ExactInteger a, const ExactInteger& b) { return a -= b; }
    friend ExactInteger operator*(ExactInteger a, const ExactInteger& b) { return a *= b; }
    /// Truncating division; throws DomainError on a zero divisor.
    friend ExactInteger operator/(const ExactInteger& a, const ExactInteger& b);
    /// Remainder with the sign of the dividend (C++ semantics).
    friend ExactInteger operator%(const ExactInteger& a, const ExactInteger& b);

    friend bool operator==(const ExactInteger& a, const ExactInteger& b) noexcept {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const ExactInteger& a, const ExactInteger& b) noexcept {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactInteger& v) {
        return os << v.to_string();
    }

private:
    mpz_class value_;
};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long long value) : value_(static_cast<long>(value)) {}
    ExactRational(const ExactInteger& value) : value_(value.raw()) {}
    /// Throws DomainError when the denominator is zero.
    ExactRational(const ExactInteger& numerator, const ExactInteger& denominator);
    explicit ExactRational(mpq_class value);

    /// Accepts "p" or "p/q". Throws std::invalid_argument on malformed input.
    static ExactRational parse(std::string_view text);

    const mpq_class& raw() const noexcept { return value_; }

    ExactInteger numerator() const { return ExactInteger(mpz_class(value_.get_num())); }
    ExactInteger denominator() const { return ExactInteger(mpz_class(value_.get_den())); }

    int sign() const noexcept { return sgn(value_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const noexcept { return value_.get_den() == 1; }

    /// "p/q" in lowest terms, or "p" when q = 1.
    std::string to_string() const;

    ExactRational operator-() const { return ExactRational(mpq_class(-value_)); }
    ExactRational& operator+=(const ExactRational& rhs) { value_ += rhs.value_; return *this; }
    ExactRational& operator-=(const ExactRational& rhs) { value_ -= rhs.value_; return *this; }
    ExactRational& operator*=(const ExactRational& rhs) { value_ *= rhs.value_; return *this; }
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) noexcept {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) noexcept {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& v) {
        return os << v.to_string();
    }

private:
    mpq_class value_;
};

/// All positive divisors of n in increasing order (trial division up to sqrt(n)).
std::vector<std::int64_t> divisors(std::int64_t n);

/// Sum of the positive divisors of n.
ExactInteger sigma(std::int64_t n);

/// C(n, k); zero when k > n. Negative arguments are a DomainError.
ExactInteger binomial(std::int64_t n, std::int64_t k);

ExactInteger factorial(std::int64_t n);

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t n);

/// (-1)^e as an integer.
constexpr int sign_power(std::int64_t e) noexcept { return (e % 2 == 0) ? 1 : -1; }

} // namespace polyrep

#endif // POLYREP_EXACTNUM_HPP
