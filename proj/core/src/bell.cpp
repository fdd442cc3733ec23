#include "polyrep/bell.hpp"

#include <stdexcept>
#include <string>

namespace polyrep {

std::vector<ExactRational> TaylorCoeffs::bell_arguments() const {
    std::vector<ExactRational> x;
    x.reserve(n_max());
    for (std::size_t m = 1; m < g.size(); ++m) {
        x.emplace_back(g[m]);
    }
    return x;
}

TaylorCoeffs taylor_coeffs(const PolygonalSpec& spec, std::size_t n_max) {
    const TruncatedSeries theta = theta_series(spec, n_max);
    TaylorCoeffs out;
    out.g.reserve(n_max + 1);
    ExactInteger fact = 1;
    for (std::size_t m = 0; m <= n_max; ++m) {
        if (m > 0) {
            fact *= ExactInteger(static_cast<long long>(m));
        }
        out.g.push_back(fact * theta[m].numerator());
    }
    return out;
}

PartialBellTable::PartialBellTable(std::vector<ExactRational> x, std::size_t n_max)
    : x_(std::move(x)), values_(n_max + 1) {
    // Pascal row C(n-1, .) is rebuilt per n.
    std::vector<ExactInteger> pascal{1};
    for (std::size_t n = 0; n <= n_max; ++n) {
        auto& row = values_[n];
        row.resize(n + 1);
        row[0] = ExactRational(n == 0 ? 1 : 0);
        if (n >= 2) {
            std::vector<ExactInteger> next(n);
            next[0] = 1;
            next[n - 1] = 1;
            for (std::size_t i = 1; i + 1 < n; ++i) {
                next[i] = pascal[i - 1] + pascal[i];
            }
            pascal = std::move(next);
        }
        for (std::size_t k = 1; k <= n; ++k) {
            if (n - k + 1 > x_.size()) {
                continue;
            }
            ExactRational acc;
            for (std::size_t m = 1; m <= n - k + 1; ++m) {
                const auto& lower = values_[n - m][k - 1];
                if (k - 1 > n - m || !lower || lower->is_zero() || x_[m - 1].is_zero()) {
                    continue;
                }
                acc += ExactRational(pascal[m - 1]) * x_[m - 1] * *lower;
            }
            row[k] = std::move(acc);
        }
    }
}

const ExactRational& PartialBellTable::operator()(std::size_t n, std::size_t k) const {
    static const ExactRational zero;
    const auto& row = values_.at(n);
    if (k > n) {
        return zero;
    }
    if (!row[k]) {
        throw DomainError("B_{" + std::to_string(n) + "," + std::to_string(k) + "} needs " +
                          std::to_string(n - k + 1) + " arguments, only " + std::to_string(x_.size()) +
                          " supplied");
    }
    return *row[k];
}

ExactRational bell_partial(std::size_t n, std::size_t k, std::span<const ExactRational> x) {
    if (k > 0 && n >= k && x.size() < n - k + 1) {
        throw DomainError("bell_partial: B_{" + std::to_string(n) + "," + std::to_string(k) + "} needs " +
                          std::to_string(n - k + 1) + " arguments, got " + std::to_string(x.size()));
    }
    const std::size_t used = (k > 0 && n >= k) ? n - k + 1 : 0;
    const PartialBellTable table(std::vector<ExactRational>(x.begin(), x.begin() + used), n);
    return table(n, k);
}

ExactRational log_polynomial(std::size_t n, const PartialBellTable& table) {
    if (n == 0) {
        throw DomainError("log_polynomial: n must be positive");
    }
    ExactRational total;
    ExactInteger fact = 1; // (k-1)!
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            fact *= ExactInteger(static_cast<long long>(k - 1));
        }
        const ExactRational term = ExactRational(fact) * table(n, k);
        if (k % 2 == 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

ExactRational log_polynomial(std::size_t n, const TaylorCoeffs& g) {
    if (n == 0 || g.n_max() < n) {
        throw DomainError("log_polynomial: Taylor coefficients must cover 1.." + std::to_string(n));
    }
    const PartialBellTable table(g.bell_arguments(), n);
    return log_polynomial(n, table);
}

} // namespace polyrep
