#include "polyrep/divisorside.hpp"

#include <string>

namespace polyrep {

namespace {

void require_positive(std::int64_t n, const char* what) {
    if (n < 1) {
        throw DomainError(std::string(what) + ": n must be positive, got " + std::to_string(n));
    }
}

void require_modulus(std::int64_t v) {
    if (v < 2) {
        throw DomainError("residue weights need v >= 2, got v = " + std::to_string(v));
    }
}

ExactRational reciprocal(std::int64_t d) {
    return ExactRational(ExactInteger(1), ExactInteger(d));
}

} // namespace

int delta1(std::int64_t m, std::int64_t v) {
    require_modulus(v);
    require_positive(m, "delta1");
    if (v == 2) {
        return m % 2 == 1 ? 2 : 0;
    }
    const std::int64_t r = m % v;
    return (r == 1 || r == v - 1) ? 1 : 0;
}

int delta2(std::int64_t m, std::int64_t v) {
    require_modulus(v);
    require_positive(m, "delta2");
    return m % v == 0 ? 1 : 0;
}

ExactRational divisor_lhs(std::int64_t n, int s) {
    require_positive(n, "divisor_lhs");
    if (s < 4) {
        throw DomainError("divisor_lhs: s must be >= 4, got s = " + std::to_string(s));
    }
    const std::int64_t v = s - 2;
    ExactRational total;
    for (auto d : divisors(n)) {
        const std::int64_t m = n / d;
        const long long weight = sign_power(d) * delta1(m, v) + delta2(m, v);
        if (weight != 0) {
            total += ExactRational(weight) * reciprocal(d);
        }
    }
    return total;
}

ExactRational jha_square_lhs(std::int64_t n) {
    require_positive(n, "jha_square_lhs");
    ExactRational total;
    for (auto d : divisors(n)) {
        if (d % 2 == 1) {
            total += reciprocal(d);
        }
    }
    return ExactRational(2 * sign_power(n)) * total;
}

ExactRational jha_triangular_lhs(std::int64_t n) {
    require_positive(n, "jha_triangular_lhs");
    ExactRational total;
    for (auto d : divisors(n)) {
        total += ExactRational(1 + 2 * sign_power(d)) * reciprocal(d);
    }
    return total;
}

ExactRational pentagonal_corollary_lhs(std::int64_t n) {
    require_positive(n, "pentagonal_corollary_lhs");
    ExactRational total;
    for (auto d : divisors(n)) {
        const std::int64_t r = (n / d) % 3;
        if (r == 0) {
            total += reciprocal(d);
        } else {
            total += ExactRational(sign_power(d)) * reciprocal(d);
        }
    }
    return total;
}

ExactRational reciprocal_divisor_sum_excluding(std::int64_t n, std::int64_t p) {
    require_positive(n, "reciprocal_divisor_sum_excluding");
    ExactRational total;
    for (auto d : divisors(n)) {
        if (d != p) {
            total += reciprocal(d);
        }
    }
    return total;
}

bool prime_corollary_applies(std::int64_t n, std::int64_t p) {
    return n >= 1 && p > 2 && is_prime(p) && n % p == 0 && (n / p) % p != 0;
}

ExactRational prime_corollary_rhs_value(std::int64_t n, std::int64_t p) {
    if (!prime_corollary_applies(n, p)) {
        throw DomainError("prime corollary needs an odd prime p with p | n and p^2 not dividing n; got n = " +
                          std::to_string(n) + ", p = " + std::to_string(p));
    }
    const std::int64_t r = (n / p) % p;
    const ExactRational mean = ExactRational(sigma(n), ExactInteger(n));
    const long long removed = (r == 1 || r == p - 1) ? 2 : 1;
    return mean - ExactRational(ExactInteger(removed), ExactInteger(p));
}

} // namespace polyrep
