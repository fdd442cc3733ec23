#ifndef POLYREP_BELL_HPP
#define POLYREP_BELL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polyrep/exactnum.hpp"
#include "polyrep/polygonal.hpp"

namespace polyrep {

/// Derivatives at zero of G_s: g[m] = G_s^{(m)}(0) = m! [q^m] G_s(q).
///
/// g[0] is the constant term (1 for s >= 4, 2 for s = 3); the Bell
/// arguments are g[1..n_max].
struct TaylorCoeffs {
    std::vector<ExactInteger> g;

    std::size_t n_max() const noexcept { return g.empty() ? 0 : g.size() - 1; }
    /// g[1..n_max] as rationals, i.e. the argument list x_1, x_2, ... of B_{n,k}.
    std::vector<ExactRational> bell_arguments() const;
};

TaylorCoeffs taylor_coeffs(const PolygonalSpec& spec, std::size_t n_max);

/// Memo table of partial Bell polynomials B_{n,k}(x_1, x_2, ...) for n <= n_max,
/// filled by
///   B_{n,k} = sum_{m=1}^{n-k+1} C(n-1, m-1) x_m B_{n-m,k-1},
///   B_{0,0} = 1, B_{n,0} = 0 (n >= 1), B_{0,k} = 0 (k >= 1).
/// Entries needing more than x.size() arguments are left unavailable.
class PartialBellTable {
public:
    PartialBellTable(std::vector<ExactRational> x, std::size_t n_max);

    std::size_t n_max() const noexcept { return values_.size() - 1; }
    std::span<const ExactRational> arguments() const noexcept { return x_; }

    /// B_{n,k}; zero for k > n. Throws DomainError if the entry needs
    /// arguments that were not supplied, std::out_of_range if n > n_max.
    const ExactRational& operator()(std::size_t n, std::size_t k) const;

private:
    std::vector<ExactRational> x_;
    std::vector<std::vector<std::optional<ExactRational>>> values_;
};

/// B_{n,k}(x_1, ..., x_{n-k+1}); x[0] holds x_1.
ExactRational bell_partial(std::size_t n, std::size_t k, std::span<const ExactRational> x);

/// L_n = sum_{k=1}^{n} (-1)^k (k-1)! B_{n,k}(g_1, ..., g_n).
///
/// With this sign, L_n / n! equals divisor_lhs(n, s), which is the negated
/// coefficient of q^n in log G_s(q).
ExactRational log_polynomial(std::size_t n, const TaylorCoeffs& g);
ExactRational log_polynomial(std::size_t n, const PartialBellTable& table);

} // namespace polyrep

#endif // POLYREP_BELL_HPP
