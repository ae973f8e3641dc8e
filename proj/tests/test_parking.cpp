#include <doctest.h>

#include <algorithm>
#include <random>

#include "goncarov/error.hpp"
#include "goncarov/goncarov.hpp"
#include "goncarov/operator_calculus.hpp"
#include "goncarov/parking.hpp"
#include "support.hpp"

using namespace gonc;
using gonc::test::P;

namespace {

const VarId X = VarId::x();

ParkingVector pv(std::vector<long> u) { return ParkingVector(std::move(u)); }

bool parks(std::vector<long> seq, const ParkingVector& u) { return is_u_parking(seq, u); }

// Arithmetic bounds u_i = a + b(i-1) are counted by a (a + n b)^(n-1).
unsigned long arithmetic_count(long a, long b, unsigned n) {
    unsigned long out = static_cast<unsigned long>(a);
    for (unsigned i = 1; i < n; ++i) out *= static_cast<unsigned long>(a + static_cast<long>(n) * b);
    return out;
}

MultiPoly goncarov_constant_term(const std::vector<long>& z, unsigned n) {
    const PolySequence t = goncarov_sequence(zeta_sequence(n), Grid::numeric(z).negated(), n);
    return poly_substitute(t[n], X, MultiPoly());
}

} // namespace

TEST_CASE("parking predicate") {
    const auto u = pv({1, 2, 3, 4});
    CHECK(parks({2, 1, 4, 1}, u));
    CHECK_FALSE(parks({2, 2, 3, 4}, u));
    CHECK(parks({1}, pv({1})));
    CHECK_FALSE(parks({0}, pv({1})));
    CHECK_THROWS_AS(parks({1, 1}, pv({1})), Error);
    CHECK_THROWS_AS(pv({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(pv({0, 1}), std::invalid_argument);
}

TEST_CASE("parking counts") {
    CHECK(count_parking(2, pv({1, 2})) == 3);
    CHECK(count_parking(3, pv({1, 2, 3})) == 16);
    CHECK(count_parking(2, pv({2, 2})) == 4);
    for (long a = 1; a <= 3; ++a) {
        for (long b = 0; b <= 2; ++b) {
            for (unsigned n = 1; n <= 5; ++n) {
                std::vector<long> u;
                for (unsigned i = 0; i < n; ++i) u.push_back(a + b * static_cast<long>(i));
                CHECK(count_parking(n, pv(u)) == arithmetic_count(a, b, n));
            }
        }
    }
    CHECK_THROWS_AS(count_parking(8, pv({1, 2, 3, 4, 5, 6, 7, 8})), Error);
    CHECK_THROWS_AS(count_parking(3, pv({1, 2})), Error);
}

TEST_CASE("parking predicate ignores order") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned n = 1 + rng() % 6;
        std::vector<long> u(n);
        long cur = 1;
        for (auto& b : u) b = cur += static_cast<long>(rng() % 3);
        std::vector<long> seq(n);
        for (auto& s : seq) s = 1 + static_cast<long>(rng() % static_cast<unsigned long>(u.back() + 1));
        const bool before = parks(seq, pv(u));
        std::shuffle(seq.begin(), seq.end(), rng);
        CHECK(parks(seq, pv(u)) == before);
    }
}

TEST_CASE("enlarging a bound never lowers the count") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = 1 + rng() % 4;
        std::vector<long> u(n);
        long cur = 1;
        for (auto& b : u) b = cur += static_cast<long>(rng() % 2);
        std::vector<long> bigger = u;
        const unsigned i = rng() % n;
        for (unsigned j = i; j < n; ++j) bigger[j] = std::max(bigger[j], u[i] + 1);
        CHECK(count_parking(n, pv(bigger)) >= count_parking(n, pv(u)));
    }
}

TEST_CASE("block-labelled parking counts") {
    for (long z0 = 1; z0 <= 4; ++z0) {
        for (long z1 = z0; z1 <= 5; ++z1) {
            const auto z = pv({z0, z1});
            CHECK(pf_partition(SetPartition::coarsest(2), z) == static_cast<std::uint64_t>(z0));
            CHECK(pf_partition(SetPartition::finest(2), z) == static_cast<std::uint64_t>(2 * z0 * z1 - z0 * z0));
        }
    }
    for (unsigned n = 1; n <= 5; ++n) {
        std::vector<long> u;
        for (unsigned i = 0; i < n; ++i) u.push_back(1 + static_cast<long>(i) * 2);
        CHECK(pf_partition(SetPartition::finest(n), pv(u)) == count_parking(n, pv(u)));
    }
    CHECK(pf_partition(SetPartition::finest(3), pv({1, 2, 3})) == 16);
    CHECK_THROWS_AS(pf_partition(SetPartition::finest(3), pv({1, 2})), Error);
}

TEST_CASE("weighted parking enumerator") {
    CHECK(weighted_pf_enumerator(0, pv({})) == MultiPoly(1));
    CHECK(weighted_pf_enumerator(2, pv({1, 2})) == P("3 + w2"));
    for (long z0 = 1; z0 <= 5; ++z0) CHECK(weighted_pf_enumerator(1, pv({z0})) == MultiPoly(z0));
    Assignment zero;
    for (unsigned i = 2; i <= 3; ++i) zero.emplace(VarId::w(i), MultiPoly());
    CHECK(poly_substitute(weighted_pf_enumerator(3, pv({1, 2, 3})), zero) == MultiPoly(16));
}

TEST_CASE("constant terms count weighted parking functions") {
    const std::vector<std::vector<long>> grids = {{1, 2, 3, 4, 5}, {2, 3, 5, 7, 11}, {1, 1, 2, 3, 3}, {3, 3, 3, 3, 3}};
    for (const auto& z : grids) {
        for (unsigned n = 1; n <= 5; ++n) {
            const std::vector<long> prefix(z.begin(), z.begin() + n);
            CHECK(goncarov_constant_term(z, n) == weighted_pf_enumerator(n, pv(prefix)));
        }
    }
}

TEST_CASE("decomposition over parking prefixes") {
    CHECK(verify_decomposition(0, pv({}), 1));
    CHECK(verify_decomposition(2, pv({1, 2}), 3));
    CHECK(verify_decomposition(3, pv({1, 3, 4}), 5));
    CHECK(verify_decomposition(4, pv({1, 2, 3, 4}), 6));
    CHECK_THROWS_AS(verify_decomposition(2, pv({1, 1}), 3), Error);
    CHECK_THROWS_AS(verify_decomposition(2, pv({1, 2}), 2), Error);
}
