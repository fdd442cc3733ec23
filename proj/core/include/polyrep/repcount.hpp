#ifndef POLYREP_REPCOUNT_HPP
#define POLYREP_REPCOUNT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "polyrep/exactnum.hpp"
#include "polyrep/polygonal.hpp"

namespace polyrep {

/// Table of t_{s,j}(n) = [q^n] G_s(q)^j for 0 <= j <= j_max, 0 <= n <= n_max.
///
/// t_{s,j}(n) counts ordered tuples (x_1, ..., x_j) in Z^j with
/// F_s(x_1) + ... + F_s(x_j) = n. Immutable once built.
class RepTable {
public:
    const PolygonalSpec& spec() const noexcept { return spec_; }
    std::size_t j_max() const noexcept { return rows_.size() - 1; }
    std::size_t n_max() const noexcept { return n_max_; }

    /// Throws std::out_of_range outside the table.
    const ExactInteger& count(std::size_t j, std::size_t n) const { return rows_.at(j).at(n); }
    std::span<const ExactInteger> row(std::size_t j) const { return rows_.at(j); }

private:
    friend RepTable build_table(const PolygonalSpec& spec, std::size_t j_max, std::size_t n_max);
    RepTable(PolygonalSpec spec, std::size_t n_max) : spec_(spec), n_max_(n_max) {}

    PolygonalSpec spec_;
    std::size_t n_max_;
    std::vector<std::vector<ExactInteger>> rows_;
};

/// rows[j] = rows[j-1] * rows[1] (mod q^{n_max+1}), rows[0] = 1.
RepTable build_table(const PolygonalSpec& spec, std::size_t j_max, std::size_t n_max);

/// Coefficient of q^n in G_s(q)^j.
ExactInteger rep_count(const PolygonalSpec& spec, std::size_t j, std::size_t n);

/// Bounds for the exhaustive enumerator. It is an oracle, not a production path.
struct BruteForceLimits {
    std::size_t max_j = 5;
    std::size_t max_n = 60;
};

/// Counts index tuples by recursive enumeration over index_range(spec, n),
/// pruning once the partial sum exceeds n. Throws DomainError past the limits.
ExactInteger rep_count_bruteforce(const PolygonalSpec& spec, std::size_t j, std::size_t n,
                                  BruteForceLimits limits = {});

} // namespace polyrep

#endif // POLYREP_REPCOUNT_HPP
