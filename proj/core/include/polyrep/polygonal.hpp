#ifndef POLYREP_POLYGONAL_HPP
#define POLYREP_POLYGONAL_HPP

#include <cstdint>

#include "polyrep/exactnum.hpp"
#include "polyrep/series.hpp"

namespace polyrep {

/// Number of sides s >= 3 of a generalized polygonal family, with modulus v = s - 2.
class PolygonalSpec {
public:
    /// Throws DomainError when s < 3.
    explicit PolygonalSpec(int sides);

    int sides() const noexcept { return sides_; }
    int modulus() const noexcept { return sides_ - 2; }

    /// Throws DomainError unless s >= 4 (the range where the divisor-sum identities hold).
    void require_theorem_range() const;

    friend bool operator==(const PolygonalSpec&, const PolygonalSpec&) = default;

private:
    int sides_;
};

/// F_s(n) = ((s-2) n^2 - (s-4) n) / 2 for any integer n.
ExactInteger polygonal_number(const PolygonalSpec& spec, const ExactInteger& n);
std::int64_t polygonal_number(const PolygonalSpec& spec, std::int64_t n);

struct IndexRange {
    std::int64_t lo;
    std::int64_t hi;
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Smallest [lo, hi] containing every index n with F_s(n) <= bound.
IndexRange index_range(const PolygonalSpec& spec, std::int64_t bound);

/// G_s(q) = sum over n in Z of q^{F_s(n)}, mod q^{order+1}, by direct enumeration.
/// For s = 3 every triangular number is hit twice, so the constant term is 2.
TruncatedSeries theta_series(const PolygonalSpec& spec, std::size_t order);

/// G_s(q) from its Jacobi triple product
///   prod_{j>=0} (1 + q^{vj+1}) (1 + q^{vj+s-3}) (1 - q^{v(j+1)}),  v = s - 2.
/// Requires s >= 4.
TruncatedSeries triple_product_series(const PolygonalSpec& spec, std::size_t order);

} // namespace polyrep

#endif // POLYREP_POLYGONAL_HPP
