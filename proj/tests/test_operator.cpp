#include <doctest.h>

#include <random>

#include "goncarov/error.hpp"
#include "goncarov/operator_calculus.hpp"
#include "goncarov/partition.hpp"
#include "support.hpp"

using namespace gonc;
using gonc::test::P;

namespace {

const VarId X = VarId::x();

// Corpus of binomial-type sequences used by the round-trip and shift properties.
std::vector<PolySequence> corpus(unsigned n) {
    return {monomial_sequence(n), falling_factorial_sequence(n), zeta_sequence(n), mobius_sequence(n),
            conjugate_sequence(TruncatedSeries::exp_minus_one(n), n)};
}

// Delta indicator t + sum c_k t^k with random small rational c_k.
TruncatedSeries random_indicator(std::mt19937& rng, unsigned order) {
    TruncatedSeries f(order);
    f.set(1, MultiPoly(Rational(Integer(1 + static_cast<long>(rng() % 3)), Integer(1 + static_cast<long>(rng() % 2)))));
    for (unsigned k = 2; k <= order; ++k) {
        f.set(k, MultiPoly(Rational(Integer(static_cast<long>(rng() % 7) - 3), Integer(1 + static_cast<long>(rng() % 4)))));
    }
    return f;
}

} // namespace

TEST_CASE("conjugate sequences") {
    CHECK(conjugate_sequence(TruncatedSeries::t(6), 6) == monomial_sequence(6));
    const auto stirling = conjugate_sequence(TruncatedSeries::exp_minus_one(3), 3);
    CHECK(stirling[3] == P("x^3 + 3*x^2 + x"));
    CHECK(conjugate_sequence(zeta_indicator(4), 4) == zeta_sequence(4));
    // (1+t)^x generates the falling factorials.
    CHECK(conjugate_sequence(TruncatedSeries::log_one_plus(5), 5) == falling_factorial_sequence(5));
    CHECK_THROWS_AS(conjugate_sequence(TruncatedSeries::t(2), 3), Error);
    TruncatedSeries shifted = TruncatedSeries::t(3);
    shifted.set(0, MultiPoly(1));
    CHECK_THROWS_AS(conjugate_sequence(shifted, 3), Error);
}

TEST_CASE("indicators recovered from linear coefficients") {
    CHECK(indicator_from_sequence(monomial_sequence(5)) == TruncatedSeries::t(5));
    CHECK(indicator_from_sequence(zeta_sequence(5)) == zeta_indicator(5));
    TruncatedSeries mu(5);
    for (unsigned n = 1; n <= 5; ++n) {
        mu.set(n, mobius_type(SetPartition::finest(n), SetPartition::coarsest(n)) * Rational(1, factorial(n)));
    }
    CHECK(indicator_from_sequence(mobius_sequence(5)) == mu);
}

TEST_CASE("operator action") {
    CHECK(apply_operator(TruncatedSeries::t(3), P("x^3")) == P("3*x^2"));
    CHECK(apply_operator(TruncatedSeries::exp_minus_one(2), P("x*(x-1)")) == P("2*x"));
    CHECK(apply_operator(TruncatedSeries::t(1), MultiPoly(1)).is_zero());
    CHECK_THROWS_AS(apply_operator(TruncatedSeries::t(2), P("x^3")), Error);
}

TEST_CASE("binomial type checker") {
    CHECK(binomial_type_check(monomial_sequence(6), 6));
    CHECK(binomial_type_check(mobius_sequence(5), 5));
    const CheckResult bad = binomial_type_check(PolySequence({MultiPoly(1), P("x"), P("x^2 + 1")}), 2);
    CHECK_FALSE(bad);
    CHECK(bad.index == 2);
    CHECK_FALSE(bad.residual.is_zero());
}

TEST_CASE("basic property checker") {
    CHECK(basic_property_check(TruncatedSeries::t(6), monomial_sequence(6), 6));
    // Forward difference e^D - 1 lowers falling factorials.
    CHECK(basic_property_check(TruncatedSeries::exp_minus_one(6), falling_factorial_sequence(6), 6));
    // log(1+t) has the falling factorials as its conjugate, not its basic sequence.
    CHECK_FALSE(basic_property_check(TruncatedSeries::log_one_plus(6), falling_factorial_sequence(6), 6));
    CHECK_FALSE(basic_property_check(TruncatedSeries::t(4), zeta_sequence(4), 4));
    TruncatedSeries not_delta(3);
    not_delta.set(2, MultiPoly(1));
    CHECK_THROWS_AS(basic_property_check(not_delta, monomial_sequence(3), 3), Error);
}

TEST_CASE("scaled delta operator") {
    // 2D has basic sequence x^n / 2^n.
    std::vector<MultiPoly> p;
    for (unsigned n = 0; n <= 5; ++n) p.push_back(MultiPoly(Monomial(X, n), Rational(Integer(1), Integer(1u << n))));
    TruncatedSeries two_d(5);
    two_d.set(1, MultiPoly(2));
    CHECK(basic_property_check(two_d, PolySequence(p), 5));
    CHECK_FALSE(basic_property_check(two_d, monomial_sequence(5), 5));
}

TEST_CASE("reversion duality with symbolic weights") {
    const unsigned n = 5;
    const TruncatedSeries g = zeta_indicator(n);
    const TruncatedSeries f = series_reversion(g);
    CHECK(conjugate_sequence(g, n) == zeta_sequence(n));
    CHECK(basic_property_check(f, zeta_sequence(n), n));
    CHECK(conjugate_sequence(f, n) == mobius_sequence(n));
    CHECK(basic_property_check(g, mobius_sequence(n), n));
}

TEST_CASE("indicator and conjugate sequence round trip") {
    for (const auto& p : corpus(6)) {
        REQUIRE(binomial_type_check(p, 6));
        CHECK(conjugate_sequence(indicator_from_sequence(p), 6) == p);
    }
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const TruncatedSeries g = random_indicator(rng, 6);
        const PolySequence p = conjugate_sequence(g, 6);
        CHECK(binomial_type_check(p, 6));
        CHECK(indicator_from_sequence(p) == g);
        // The reversion of g is the operator lowering p.
        CHECK(basic_property_check(series_reversion(g), p, 6));
    }
}

TEST_CASE("operators commute with shifts") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const TruncatedSeries f = random_indicator(rng, 6);
        const MultiPoly c(Rational(Integer(static_cast<long>(rng() % 9) - 4), Integer(1 + static_cast<long>(rng() % 3))));
        for (const auto& p : corpus(6)) {
            const MultiPoly& q = p[1 + rng() % 6];
            const MultiPoly shift = MultiPoly(X) + c;
            CHECK(apply_operator(f, poly_substitute(q, X, shift)) == poly_substitute(apply_operator(f, q), X, shift));
        }
    }
}
