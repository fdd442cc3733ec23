#include "polyrep/series.hpp"

#include <algorithm>
#include <sstream>

namespace polyrep {

TruncatedSeries::TruncatedSeries(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw DomainError("series needs at least the constant coefficient");
    }
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries out(order);
    out.coeffs_[0] = 1;
    return out;
}

TruncatedSeries TruncatedSeries::monomial(const ExactRational& c, std::size_t power, std::size_t order) {
    TruncatedSeries out(order);
    if (power <= order) {
        out.coeffs_[power] = c;
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const {
    if (order > this->order()) {
        throw DomainError("cannot extend a truncated series");
    }
    return TruncatedSeries(std::vector<ExactRational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) {
            os << " + ";
        }
        os << coeffs_[i].to_string();
        if (i == 1) {
            os << "*q";
        } else if (i > 1) {
            os << "*q^" << i;
        }
    }
    os << " (mod q^" << coeffs_.size() << ")";
    return os.str();
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        out.coeffs_[i] = a[i] + b[i];
    }
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        out.coeffs_[i] = a[i] - b[i];
    }
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (std::size_t u = 0; u <= order; ++u) {
        if (a[u].is_zero()) {
            continue;
        }
        for (std::size_t v = 0; u + v <= order; ++v) {
            if (!b[v].is_zero()) {
                out.coeffs_[u + v] += a[u] * b[v];
            }
        }
    }
    return out;
}

TruncatedSeries operator*(const ExactRational& c, const TruncatedSeries& a) {
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
        out.coeffs_[i] = c * a[i];
    }
    return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a * b;
}

TruncatedSeries pow(const TruncatedSeries& a, unsigned j) {
    TruncatedSeries result = TruncatedSeries::one(a.order());
    TruncatedSeries base = a;
    while (j > 0) {
        if (j & 1U) {
            result = result * base;
        }
        j >>= 1U;
        if (j > 0) {
            base = base * base;
        }
    }
    return result;
}

TruncatedSeries log(const TruncatedSeries& a) {
    if (a[0] != ExactRational(1)) {
        throw DomainError("log: constant term must be 1, got " + a[0].to_string());
    }
    const std::size_t order = a.order();
    std::vector<ExactRational> out(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        ExactRational acc = ExactRational(static_cast<long long>(n)) * a[n];
        for (std::size_t m = 1; m < n; ++m) {
            if (!out[m].is_zero() && !a[n - m].is_zero()) {
                acc -= ExactRational(static_cast<long long>(m)) * out[m] * a[n - m];
            }
        }
        out[n] = acc / ExactRational(static_cast<long long>(n));
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries exp(const TruncatedSeries& a) {
    if (!a[0].is_zero()) {
        throw DomainError("exp: constant term must be 0, got " + a[0].to_string());
    }
    const std::size_t order = a.order();
    std::vector<ExactRational> out(order + 1);
    out[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        ExactRational acc;
        for (std::size_t m = 1; m <= n; ++m) {
            if (!a[m].is_zero()) {
                acc += ExactRational(static_cast<long long>(m)) * a[m] * out[n - m];
            }
        }
        out[n] = acc / ExactRational(static_cast<long long>(n));
    }
    return TruncatedSeries(std::move(out));
}

} // namespace polyrep
