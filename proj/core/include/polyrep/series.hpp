#ifndef POLYREP_SERIES_HPP
#define POLYREP_SERIES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "polyrep/exactnum.hpp"

namespace polyrep {

/// Formal power series over exact rationals, truncated mod q^{N+1}.
///
/// Coefficient i holds the coefficient of q^i, for 0 <= i <= N. Binary
/// operations truncate at the smaller of the two orders; operands are never
/// silently extended with zeros.
class TruncatedSeries {
public:
    /// Zero series of the given truncation order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    /// Takes ownership of c[0..N]; throws DomainError when empty.
    explicit TruncatedSeries(std::vector<ExactRational> coeffs);

    static TruncatedSeries one(std::size_t order);
    /// c * q^power mod q^{order+1}.
    static TruncatedSeries monomial(const ExactRational& c, std::size_t power, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const ExactRational& operator[](std::size_t i) const { return coeffs_[i]; }
    /// Bounds-checked access; throws std::out_of_range past the order.
    const ExactRational& at(std::size_t i) const { return coeffs_.at(i); }
    std::span<const ExactRational> coeffs() const noexcept { return coeffs_; }

    /// Same series cut down to a smaller order. Throws DomainError if order > this->order().
    TruncatedSeries truncate(std::size_t order) const;

    /// "c0 + c1*q + ... + cN*q^N (mod q^{N+1})"
    std::string to_string() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const ExactRational& c, const TruncatedSeries& a);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<ExactRational> coeffs_;
};

/// Cauchy product truncated at min(a.order(), b.order()).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// a^j by repeated squaring; pow(a, 0) is the series 1.
TruncatedSeries pow(const TruncatedSeries& a, unsigned j);

/// Logarithm of a series with constant term 1 (DomainError otherwise).
/// Uses n L_n = n a_n - sum_{m=1}^{n-1} m L_m a_{n-m}.
TruncatedSeries log(const TruncatedSeries& a);

/// Exponential of a series with constant term 0 (DomainError otherwise).
/// Uses n E_n = sum_{m=1}^{n} m a_m E_{n-m}.
TruncatedSeries exp(const TruncatedSeries& a);

} // namespace polyrep

#endif // POLYREP_SERIES_HPP
