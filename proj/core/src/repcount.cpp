#include "polyrep/repcount.hpp"

#include <string>
#include <utility>

namespace polyrep {

namespace {

struct SparseTerm {
    std::size_t power;
    ExactInteger coeff;
};

std::vector<SparseTerm> theta_terms(const PolygonalSpec& spec, std::size_t n_max) {
    const TruncatedSeries theta = theta_series(spec, n_max);
    std::vector<SparseTerm> terms;
    for (std::size_t i = 0; i <= n_max; ++i) {
        if (!theta[i].is_zero()) {
            terms.push_back({i, theta[i].numerator()});
        }
    }
    return terms;
}

} // namespace

RepTable build_table(const PolygonalSpec& spec, std::size_t j_max, std::size_t n_max) {
    RepTable table(spec, n_max);
    table.rows_.reserve(j_max + 1);

    std::vector<ExactInteger> unit(n_max + 1);
    unit[0] = 1;
    table.rows_.push_back(std::move(unit));
    if (j_max == 0) {
        return table;
    }

    const std::vector<SparseTerm> terms = theta_terms(spec, n_max);
    for (std::size_t j = 1; j <= j_max; ++j) {
        const auto& prev = table.rows_.back();
        std::vector<ExactInteger> next(n_max + 1);
        for (std::size_t n = 0; n <= n_max; ++n) {
            if (prev[n].is_zero()) {
                continue;
            }
            for (const auto& term : terms) {
                if (n + term.power > n_max) {
                    break;
                }
                next[n + term.power] += prev[n] * term.coeff;
            }
        }
        table.rows_.push_back(std::move(next));
    }
    return table;
}

ExactInteger rep_count(const PolygonalSpec& spec, std::size_t j, std::size_t n) {
    return build_table(spec, j, n).count(j, n);
}

namespace {

class TupleCounter {
public:
    TupleCounter(const PolygonalSpec& spec, std::int64_t target) : target_(target) {
        const IndexRange range = index_range(spec, target);
        for (std::int64_t x = range.lo; x <= range.hi; ++x) {
            values_.push_back(polygonal_number(spec, x));
        }
    }

    std::int64_t count(std::size_t slots, std::int64_t partial) const {
        if (slots == 0) {
            return partial == target_ ? 1 : 0;
        }
        std::int64_t total = 0;
        for (std::int64_t v : values_) {
            if (partial + v <= target_) {
                total += count(slots - 1, partial + v);
            }
        }
        return total;
    }

private:
    std::int64_t target_;
    std::vector<std::int64_t> values_;
};

} // namespace

ExactInteger rep_count_bruteforce(const PolygonalSpec& spec, std::size_t j, std::size_t n,
                                  BruteForceLimits limits) {
    if (j > limits.max_j || n > limits.max_n) {
        throw DomainError("brute-force enumeration refused: (j=" + std::to_string(j) + ", n=" +
                          std::to_string(n) + ") exceeds (j<=" + std::to_string(limits.max_j) +
                          ", n<=" + std::to_string(limits.max_n) + ")");
    }
    const TupleCounter counter(spec, static_cast<std::int64_t>(n));
    return ExactInteger(counter.count(j, 0));
}

} // namespace polyrep
