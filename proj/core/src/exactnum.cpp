#include "polyrep/exactnum.hpp"

#include <algorithm>
#include <cctype>

namespace polyrep {

namespace {

bool is_decimal_literal(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        text.remove_prefix(1);
    }
    return !text.empty() &&
           std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_mpz(std::string_view text) {
    if (!is_decimal_literal(text)) {
        throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return mpz_class(std::string(text), 10);
}

} // namespace

ExactInteger ExactInteger::parse(std::string_view text) {
    return ExactInteger(parse_mpz(text));
}

std::int64_t ExactInteger::to_int64() const {
    if (!fits_int64()) {
        throw DomainError("integer does not fit in 64 bits: " + to_string());
    }
    return value_.get_si();
}

ExactInteger operator/(const ExactInteger& a, const ExactInteger& b) {
    if (b.is_zero()) {
        throw DomainError("integer division by zero");
    }
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return ExactInteger(std::move(q));
}

ExactInteger operator%(const ExactInteger& a, const ExactInteger& b) {
    if (b.is_zero()) {
        throw DomainError("integer remainder by zero");
    }
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return ExactInteger(std::move(r));
}

ExactRational::ExactRational(const ExactInteger& numerator, const ExactInteger& denominator) {
    if (denominator.is_zero()) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(numerator.raw(), denominator.raw());
    value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return ExactRational(ExactInteger::parse(text));
    }
    auto num = ExactInteger::parse(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
        throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
    }
    auto den = ExactInteger::parse(den_text);
    if (den.is_zero()) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    return ExactRational(num, den);
}

std::string ExactRational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str(10);
    }
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.is_zero()) {
        throw DomainError("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n <= 0) {
        throw DomainError("divisors: n must be positive, got " + std::to_string(n));
    }
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::int64_t d = 1; d <= n / d; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

ExactInteger sigma(std::int64_t n) {
    if (n <= 0) {
        throw DomainError("sigma: n must be positive, got " + std::to_string(n));
    }
    ExactInteger total;
    for (auto d : divisors(n)) {
        total += d;
    }
    return total;
}

ExactInteger binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) {
        throw DomainError("binomial: arguments must be nonnegative");
    }
    if (k > n) {
        return ExactInteger{};
    }
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return ExactInteger(std::move(out));
}

ExactInteger factorial(std::int64_t n) {
    if (n < 0) {
        throw DomainError("factorial: n must be nonnegative");
    }
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return ExactInteger(std::move(out));
}

bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace polyrep
