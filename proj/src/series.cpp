#include "goncarov/series.hpp"

#include <algorithm>

#include "goncarov/error.hpp"

namespace gonc {

TruncatedSeries::TruncatedSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<MultiPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    coeffs_.resize(order_ + 1);
}

TruncatedSeries TruncatedSeries::t(unsigned order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = MultiPoly(1);
    return s;
}

TruncatedSeries TruncatedSeries::exp_minus_one(unsigned order) {
    TruncatedSeries s(order);
    for (unsigned k = 1; k <= order; ++k) {
        s.coeffs_[k] = MultiPoly(Rational(Integer(1), factorial(k)));
    }
    return s;
}

TruncatedSeries TruncatedSeries::log_one_plus(unsigned order) {
    TruncatedSeries s(order);
    for (unsigned k = 1; k <= order; ++k) {
        s.coeffs_[k] = MultiPoly(Rational(Integer(k % 2 == 1 ? 1 : -1), Integer(k)));
    }
    return s;
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
    TruncatedSeries out(std::min(order, order_));
    std::copy_n(coeffs_.begin(), out.order_ + 1, out.coeffs_.begin());
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order_, b.order_));
    for (unsigned k = 0; k <= out.order_; ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order_, b.order_));
    for (unsigned k = 0; k <= out.order_; ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order_, b.order_));
    for (unsigned i = 0; i <= out.order_; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= out.order_; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const MultiPoly& c) {
    TruncatedSeries out = a;
    for (auto& coeff : out.coeffs_) coeff = coeff * c;
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned exp) {
    TruncatedSeries result(a.order());
    result.set(0, MultiPoly(1));
    for (unsigned i = 0; i < exp; ++i) result = result * a;
    return result;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (!a[0].is_zero()) {
        throw Error(ErrorCode::NonzeroConstantTerm, "series_exp needs a zero constant term");
    }
    // E' = a' E gives k E_k = sum_{j=1}^k j a_j E_{k-j}.
    const unsigned n = a.order();
    std::vector<MultiPoly> e(n + 1);
    e[0] = MultiPoly(1);
    for (unsigned k = 1; k <= n; ++k) {
        MultiPoly acc;
        for (unsigned j = 1; j <= k; ++j) {
            if (a[j].is_zero() || e[k - j].is_zero()) continue;
            acc += a[j] * e[k - j] * Rational(static_cast<long>(j));
        }
        e[k] = acc * Rational(Integer(1), Integer(k));
    }
    return TruncatedSeries(n, std::move(e));
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (!inner[0].is_zero()) {
        throw Error(ErrorCode::NonzeroConstantTerm, "inner series must have zero constant term");
    }
    const unsigned n = std::min(outer.order(), inner.order());
    const TruncatedSeries in = inner.truncated(n);
    // Horner: c_0 + g (c_1 + g (c_2 + ...)).
    TruncatedSeries acc(n);
    for (unsigned k = n + 1; k-- > 0;) {
        acc = acc * in;
        acc.set(0, acc[0] + outer[k]);
    }
    return acc;
}

bool is_delta_indicator(const TruncatedSeries& f) {
    return f.order() >= 1 && f[0].is_zero() && !f[1].is_zero() && f[1].is_constant();
}

TruncatedSeries series_reversion(const TruncatedSeries& f) {
    if (f.order() < 1 || !f[0].is_zero() || f[1].is_zero()) {
        throw Error(ErrorCode::NotADeltaIndicator, "reversion needs c_0 = 0 and c_1 != 0");
    }
    if (!f[1].is_constant()) {
        throw Error(ErrorCode::NonScalarLeadingCoefficient, "c_1 must be a scalar");
    }
    const unsigned n = f.order();
    const Rational lead = f[1].constant_term();
    const Rational inv_lead = Rational(1) / lead;

    // Solve order by order: [t^k] f(g) = lead*g_k + (terms in g_1..g_{k-1}).
    TruncatedSeries g(n);
    g.set(1, MultiPoly(inv_lead));
    for (unsigned k = 2; k <= n; ++k) {
        const TruncatedSeries partial = series_compose(f.truncated(k), g.truncated(k));
        g.set(k, -(partial[k] * inv_lead));
    }
    return g;
}

} // namespace gonc
