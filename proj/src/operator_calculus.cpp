#include "goncarov/operator_calculus.hpp"

#include "goncarov/error.hpp"
#include "goncarov/partition.hpp"

namespace gonc {

PolySequence::PolySequence(std::vector<MultiPoly> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.front() != MultiPoly(1)) {
        throw std::invalid_argument("polynomial sequence must start with p_0 = 1");
    }
}

PolySequence PolySequence::substituted(const Assignment& assignment) const {
    std::vector<MultiPoly> out;
    out.reserve(entries_.size());
    for (const auto& p : entries_) out.push_back(poly_substitute(p, assignment));
    return PolySequence(std::move(out));
}

CheckResult CheckResult::fail(unsigned n, MultiPoly residual, std::string detail) {
    CheckResult r;
    r.ok = false;
    r.index = n;
    r.residual = std::move(residual);
    r.detail = std::move(detail);
    return r;
}

PolySequence monomial_sequence(unsigned n_max) {
    std::vector<MultiPoly> out;
    for (unsigned n = 0; n <= n_max; ++n) out.emplace_back(Monomial(VarId::x(), n));
    return PolySequence(std::move(out));
}

PolySequence falling_factorial_sequence(unsigned n_max) {
    std::vector<MultiPoly> out;
    for (unsigned n = 0; n <= n_max; ++n) {
        out.push_back(factorial_poly(FactorialKind::Falling, MultiPoly(VarId::x()), n));
    }
    return PolySequence(std::move(out));
}

PolySequence zeta_sequence(unsigned n_max) {
    std::vector<MultiPoly> out;
    for (unsigned n = 0; n <= n_max; ++n) out.push_back(zeta_enumerator(n));
    return PolySequence(std::move(out));
}

PolySequence mobius_sequence(unsigned n_max) {
    std::vector<MultiPoly> out;
    for (unsigned n = 0; n <= n_max; ++n) out.push_back(mobius_enumerator(n));
    return PolySequence(std::move(out));
}

TruncatedSeries zeta_indicator(unsigned order) {
    TruncatedSeries g = TruncatedSeries::t(order);
    for (unsigned i = 2; i <= order; ++i) {
        g.set(i, MultiPoly(VarId::w(i)) * Rational(Integer(1), factorial(i)));
    }
    return g;
}

PolySequence conjugate_sequence(const TruncatedSeries& g, unsigned n_max) {
    if (!g[0].is_zero()) {
        throw Error(ErrorCode::NonzeroConstantTerm, "indicator must have zero constant term");
    }
    if (g.order() < n_max) {
        throw Error(ErrorCode::InsufficientOrder, "series order below n_max");
    }
    const TruncatedSeries e = series_exp(g.truncated(n_max) * MultiPoly(VarId::x()));
    std::vector<MultiPoly> out;
    for (unsigned n = 0; n <= n_max; ++n) out.push_back(e[n] * Rational(factorial(n)));
    return PolySequence(std::move(out));
}

TruncatedSeries indicator_from_sequence(const PolySequence& p) {
    TruncatedSeries g(p.max_index());
    for (unsigned k = 1; k <= p.max_index(); ++k) {
        g.set(k, p[k].coefficient_of(VarId::x(), 1) * Rational(Integer(1), factorial(k)));
    }
    return g;
}

MultiPoly apply_operator(const TruncatedSeries& f, const MultiPoly& p) {
    const unsigned deg = p.degree_in(VarId::x());
    if (f.order() < deg) {
        throw Error(ErrorCode::InsufficientOrder, "operator series order below polynomial degree");
    }
    MultiPoly out;
    MultiPoly derivative = p;
    for (unsigned k = 0; k <= deg; ++k) {
        if (!f[k].is_zero()) out += f[k] * derivative;
        derivative = poly_derivative(derivative, VarId::x());
    }
    return out;
}

CheckResult binomial_type_check(const PolySequence& p, unsigned n_max) {
    if (n_max > p.max_index()) {
        throw std::invalid_argument("binomial_type_check: n_max exceeds sequence length");
    }
    const VarId x = VarId::x();
    std::vector<MultiPoly> in_u, in_v;
    for (unsigned i = 0; i <= n_max; ++i) {
        in_u.push_back(poly_substitute(p[i], x, MultiPoly(VarId::u())));
        in_v.push_back(poly_substitute(p[i], x, MultiPoly(VarId::v())));
    }
    const MultiPoly sum_uv = MultiPoly(VarId::u()) + MultiPoly(VarId::v());
    for (unsigned n = 0; n <= n_max; ++n) {
        MultiPoly rhs;
        for (unsigned i = 0; i <= n; ++i) {
            rhs += in_u[i] * in_v[n - i] * Rational(binomial(n, i));
        }
        MultiPoly residual = poly_substitute(p[n], x, sum_uv) - rhs;
        if (!residual.is_zero()) {
            return CheckResult::fail(n, std::move(residual), "p_n(u+v) != sum C(n,i) p_i(u) p_{n-i}(v)");
        }
    }
    return CheckResult::pass();
}

CheckResult basic_property_check(const TruncatedSeries& f, const PolySequence& p, unsigned n_max) {
    if (!is_delta_indicator(f)) {
        throw Error(ErrorCode::NotADeltaIndicator, "basic_property_check needs a delta indicator");
    }
    if (n_max > p.max_index()) {
        throw std::invalid_argument("basic_property_check: n_max exceeds sequence length");
    }
    if (p[0] != MultiPoly(1)) return CheckResult::fail(0, p[0] - MultiPoly(1), "p_0 != 1");
    for (unsigned n = 1; n <= n_max; ++n) {
        const MultiPoly at_zero = poly_substitute(p[n], VarId::x(), MultiPoly(0));
        if (!at_zero.is_zero()) return CheckResult::fail(n, at_zero, "p_n(0) != 0");
        MultiPoly residual = apply_operator(f, p[n]) - p[n - 1] * Rational(static_cast<long>(n));
        if (!residual.is_zero()) return CheckResult::fail(n, std::move(residual), "f(D) p_n != n p_{n-1}");
    }
    return CheckResult::pass();
}

} // namespace gonc
