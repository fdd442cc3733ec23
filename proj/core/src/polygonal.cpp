#include "polyrep/polygonal.hpp"

#include <string>

namespace polyrep {

namespace {
__extension__ using Wide = __int128;
}

PolygonalSpec::PolygonalSpec(int sides) : sides_(sides) {
    if (sides < 3) {
        throw DomainError("polygonal numbers need s >= 3, got s = " + std::to_string(sides));
    }
}

void PolygonalSpec::require_theorem_range() const {
    if (sides_ < 4) {
        throw DomainError("identity is stated for s >= 4, got s = " + std::to_string(sides_));
    }
}

ExactInteger polygonal_number(const PolygonalSpec& spec, const ExactInteger& n) {
    const ExactInteger twice = ExactInteger(spec.sides() - 2) * n * n - ExactInteger(spec.sides() - 4) * n;
    // (s-2)n^2 - (s-4)n = (s-4)(n^2 - n) + 2n^2 is always even.
    return twice / ExactInteger(2);
}

std::int64_t polygonal_number(const PolygonalSpec& spec, std::int64_t n) {
    const Wide s = spec.sides();
    const Wide wide = ((s - 2) * n * n - (s - 4) * n) / 2;
    if (wide > INT64_MAX) {
        throw DomainError("polygonal number overflows 64 bits at n = " + std::to_string(n));
    }
    return static_cast<std::int64_t>(wide);
}

IndexRange index_range(const PolygonalSpec& spec, std::int64_t bound) {
    if (bound < 0) {
        throw DomainError("index_range: bound must be nonnegative");
    }
    IndexRange r{0, 0};
    while (polygonal_number(spec, r.hi + 1) <= bound) {
        ++r.hi;
    }
    while (polygonal_number(spec, r.lo - 1) <= bound) {
        --r.lo;
    }
    return r;
}

TruncatedSeries theta_series(const PolygonalSpec& spec, std::size_t order) {
    const auto bound = static_cast<std::int64_t>(order);
    const IndexRange range = index_range(spec, bound);
    std::vector<std::int64_t> counts(order + 1, 0);
    for (std::int64_t n = range.lo; n <= range.hi; ++n) {
        const std::int64_t value = polygonal_number(spec, n);
        if (value <= bound) {
            ++counts[static_cast<std::size_t>(value)];
        }
    }
    std::vector<ExactRational> coeffs(counts.begin(), counts.end());
    return TruncatedSeries(std::move(coeffs));
}

namespace {

// c(q) <- c(q) * (1 + sign q^e), in place.
void multiply_binomial_factor(std::vector<ExactRational>& c, std::size_t e, int sign) {
    for (std::size_t i = c.size(); i-- > e;) {
        if (c[i - e].is_zero()) {
            continue;
        }
        if (sign > 0) {
            c[i] += c[i - e];
        } else {
            c[i] -= c[i - e];
        }
    }
}

} // namespace

TruncatedSeries triple_product_series(const PolygonalSpec& spec, std::size_t order) {
    spec.require_theorem_range();
    const std::size_t v = static_cast<std::size_t>(spec.modulus());
    const std::size_t s = static_cast<std::size_t>(spec.sides());
    std::vector<ExactRational> c(order + 1);
    c[0] = 1;
    for (std::size_t j = 0;; ++j) {
        const std::size_t e1 = v * j + 1;
        const std::size_t e2 = v * j + s - 3;
        const std::size_t e3 = v * (j + 1);
        if (e1 > order && e2 > order && e3 > order) {
            break;
        }
        if (e1 <= order) multiply_binomial_factor(c, e1, +1);
        if (e2 <= order) multiply_binomial_factor(c, e2, +1);
        if (e3 <= order) multiply_binomial_factor(c, e3, -1);
    }
    return TruncatedSeries(std::move(c));
}

} // namespace polyrep
