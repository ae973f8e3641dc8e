#pragma once

#include <vector>

#include "goncarov/poly.hpp"

namespace gonc {

// Formal power series in t, truncated after t^order, with polynomial
// coefficients.
class TruncatedSeries {
public:
    explicit TruncatedSeries(unsigned order);
    TruncatedSeries(unsigned order, std::vector<MultiPoly> coeffs);

    static TruncatedSeries t(unsigned order);
    // Sum_{k>=1} t^k/k!, i.e. e^t - 1.
    static TruncatedSeries exp_minus_one(unsigned order);
    // Sum_{k>=1} (-1)^{k+1} t^k/k, i.e. log(1+t).
    static TruncatedSeries log_one_plus(unsigned order);

    unsigned order() const { return order_; }
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
    const MultiPoly& operator[](unsigned k) const { return coeffs_.at(k); }
    void set(unsigned k, MultiPoly c) { coeffs_.at(k) = std::move(c); }

    TruncatedSeries truncated(unsigned order) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const MultiPoly& c);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    unsigned order_;
    std::vector<MultiPoly> coeffs_;
};

inline constexpr unsigned kDefaultOrder = 12;

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned exp);
TruncatedSeries series_exp(const TruncatedSeries& a);
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);
TruncatedSeries series_reversion(const TruncatedSeries& f);

// c_0 == 0 and c_1 a nonzero scalar.
bool is_delta_indicator(const TruncatedSeries& f);

} // namespace gonc
