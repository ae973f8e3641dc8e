#include <doctest.h>

#include <numeric>

#include "goncarov/error.hpp"
#include "goncarov/family.hpp"
#include "goncarov/goncarov.hpp"
#include "goncarov/operator_calculus.hpp"
#include "goncarov/partition.hpp"
#include "support.hpp"

using namespace gonc;
using gonc::test::P;

namespace {

const VarId X = VarId::x();

Assignment y_ones(unsigned n) {
    Assignment a;
    for (unsigned i = 1; i <= n; ++i) a.emplace(VarId::y(i), MultiPoly(1));
    return a;
}

MultiPoly at_zero(const MultiPoly& p) { return poly_substitute(p, X, MultiPoly()); }

// Sum over 2-regular graphs on [n] of x^{components}, by brute force over
// edge subsets of K_n.
MultiPoly two_regular_graphs(unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> edges;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    MultiPoly out;
    for (unsigned long mask = 0; mask < (1ul << edges.size()); ++mask) {
        std::vector<unsigned> degree(n, 0);
        std::vector<unsigned> parent(n);
        std::iota(parent.begin(), parent.end(), 0u);
        auto find = [&](unsigned v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        unsigned components = n;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (!(mask >> e & 1ul)) continue;
            auto [a, b] = edges[e];
            ++degree[a];
            ++degree[b];
            const unsigned ra = find(a), rb = find(b);
            if (ra != rb) {
                parent[ra] = rb;
                --components;
            }
        }
        if (std::all_of(degree.begin(), degree.end(), [](unsigned d) { return d == 2; })) {
            out += MultiPoly(Monomial(X, components));
        }
    }
    return out;
}

std::vector<DeckSpec> builtins() {
    std::vector<DeckSpec> out;
    for (const auto& name : builtin_family_names()) out.push_back(builtin_family(name));
    return out;
}

ParkingVector pv(std::vector<long> u) { return ParkingVector(std::move(u)); }

} // namespace

TEST_CASE("builtin decks") {
    const auto sp = builtin_family("set_partitions");
    for (unsigned n = 1; n <= 6; ++n) CHECK(sp.deck(n) == 1);
    CHECK(builtin_family("cycles").deck(3) == 2);
    const auto tr = builtin_family("two_regular");
    CHECK(tr.deck(1) == 0);
    CHECK(tr.deck(2) == 0);
    CHECK(tr.deck(4) == 3);
    CHECK(tr.deck(5) == 12);
    CHECK(tr.min_weight == 3);
    CHECK_THROWS_AS(builtin_family("trees"), Error);
}

TEST_CASE("hand enumerators") {
    CHECK(hand_enumerator(builtin_family("set_partitions"), 3) == P("x^3 + 3*x^2 + x"));
    CHECK(hand_enumerator(builtin_family("cycles"), 3) == P("x^3 + 3*x^2 + 2*x"));
    CHECK(hand_enumerator(builtin_family("two_regular"), 2).is_zero());
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(hand_enumerator(builtin_family("cycles"), n) == factorial_poly(FactorialKind::Rising, MultiPoly(X), n));
    }
    for (unsigned n = 1; n <= 6; ++n) CHECK(hand_enumerator(builtin_family("two_regular"), n) == two_regular_graphs(n));
}

TEST_CASE("both enumerator routes agree through n = 7") {
    for (const auto& F : builtins()) {
        for (unsigned n = 0; n <= 7; ++n) CHECK_NOTHROW(type_enumerator(F, n));
    }
    CHECK_THROWS_AS(hand_enumerator(builtin_family("cycles"), 13), Error);
}

TEST_CASE("type enumerators") {
    const auto tr = builtin_family("two_regular");
    CHECK(type_enumerator(tr, 3) == P("y3*x"));
    CHECK(type_enumerator(tr, 4) == P("3*y4*x"));
    CHECK(type_enumerator(tr, 5) == P("12*y5*x"));
    CHECK(type_enumerator(tr, 6) == P("60*y6*x + 10*y3^2*x^2"));
    Assignment to_w{{VarId::y(1), MultiPoly(1)}};
    for (unsigned i = 2; i <= 4; ++i) to_w.emplace(VarId::y(i), MultiPoly(VarId::w(i)));
    for (unsigned n = 0; n <= 4; ++n) {
        CHECK(poly_substitute(type_enumerator(builtin_family("set_partitions"), n), to_w) == zeta_enumerator(n));
    }
    for (const auto& F : builtins()) {
        for (unsigned n = 0; n <= 6; ++n) CHECK(poly_substitute(type_enumerator(F, n), y_ones(n)) == hand_enumerator(F, n));
    }
}

TEST_CASE("custom decks") {
    const auto matchings = custom_family("involutions", {{1, Integer(1)}, {2, Integer(1)}});
    const long involutions[] = {1, 1, 2, 4, 10, 26, 76};
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(poly_substitute(hand_enumerator(matchings, n), X, MultiPoly(1)) == MultiPoly(involutions[n]));
    }
    CHECK_THROWS_AS(custom_family("bad", {{0, Integer(1)}}), std::invalid_argument);
}

TEST_CASE("injective type enumerators") {
    CHECK(poly_substitute(injective_type_enumerator(builtin_family("set_partitions"), 2), y_ones(2)) == P("x^2"));
    CHECK(injective_type_enumerator(builtin_family("cycles"), 1) == P("y1*x"));
    CHECK(injective_type_enumerator(builtin_family("two_regular"), 3) == P("y3*x"));
}

TEST_CASE("set partition family table") {
    const auto sp = builtin_family("set_partitions");
    const Grid z = Grid::numeric({1, 2, 3, 4, 5}).negated();
    const PolySequence t = family_goncarov(sp, z, 4).substituted(y_ones(4));
    CHECK(t[0] == MultiPoly(1));
    CHECK(t[1] == P("x + 1"));
    CHECK(t[2] == P("x^2 + 5*x + 4"));
    CHECK(t[3] == P("x^3 + 12*x^2 + 40*x + 29"));
    CHECK(t[4] == P("x^4 + 22*x^3 + 163*x^2 + 453*x + 311"));
    const long a030019[] = {1, 1, 4, 29, 311};
    for (unsigned n = 0; n <= 4; ++n) CHECK(at_zero(t[n]) == MultiPoly(a030019[n]));
}

TEST_CASE("two-regular family, symbolic grid") {
    const auto tr = builtin_family("two_regular");
    const PolySequence t = family_goncarov(tr, Grid::symbolic(6), 6);
    CHECK(t[1].is_zero());
    CHECK(t[2].is_zero());
    CHECK(t[3] == P("y3*(x - z0)"));
    CHECK(t[4] == P("3*y4*(x - z0)"));
    CHECK(t[5] == P("12*y5*(x - z0)"));
    CHECK(t[6] == P("10*y3^2*x^2 + 60*y6*x - 20*y3^2*z3*x - 60*y6*z0 - 10*y3^2*z0^2 + 20*y3^2*z0*z3"));
    const PolySequence neg = family_goncarov(tr, Grid::symbolic(6).negated(), 6);
    CHECK(at_zero(neg[6]) == P("60*y6*z0 + 20*y3^2*z0*z3 - 10*y3^2*z0^2"));
    CHECK(verify_shift_invariance(type_sequence(tr, 6), 6));
}

TEST_CASE("hand parking enumerator") {
    CHECK(hand_parking_enumerator(builtin_family("two_regular"), pv({1, 2, 3, 4, 5, 6})) == P("60*y6 + 70*y3^2"));
    CHECK(poly_substitute(hand_parking_enumerator(builtin_family("set_partitions"), pv({1, 2, 3})), y_ones(3)) ==
          MultiPoly(29));
    for (long z0 = 1; z0 <= 4; ++z0) {
        CHECK(hand_parking_enumerator(builtin_family("cycles"), pv({z0})) == MultiPoly(Monomial(VarId::y(1)), Rational(z0)));
    }
    CHECK(hand_parking_enumerator(builtin_family("cycles"), pv({})) == MultiPoly(1));
}

TEST_CASE("constant terms count hand parking functions") {
    const std::vector<std::vector<long>> grids = {{1, 2, 3, 4, 5, 6}, {1, 3, 4, 6, 7, 9}};
    for (const auto& F : builtins()) {
        const unsigned n_max = F.name == "two_regular" ? 6 : 5;
        for (const auto& z : grids) {
            const PolySequence t = family_goncarov(F, Grid::numeric(z).negated(), n_max);
            for (unsigned n = 1; n <= n_max; ++n) {
                CHECK(at_zero(t[n]) == hand_parking_enumerator(F, pv({z.begin(), z.begin() + n})));
            }
        }
    }
}

TEST_CASE("injective analog for set partitions") {
    const auto sp = builtin_family("set_partitions");
    const std::vector<long> z = {1, 2, 4, 5};
    const PolySequence t = goncarov_sequence(injective_type_sequence(sp, 4), Grid::numeric(z).negated(), 4);
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(at_zero(t[n]) == hand_parking_enumerator(sp, pv({z.begin(), z.begin() + n}), true));
    }
}

TEST_CASE("family decomposition identity") {
    for (const auto& F : builtins()) {
        for (unsigned n = 0; n <= 4; ++n) {
            CHECK(verify_family_decomposition(F, n, pv({1, 2, 4, 5}), 6));
            CHECK(verify_family_decomposition(F, n, pv({1, 2, 3, 4}), 9));
        }
    }
    CHECK_THROWS_AS(verify_family_decomposition(builtin_family("cycles"), 2, pv({2, 2}), 5), Error);
}

TEST_CASE("family enumerators are of binomial type") {
    for (const auto& F : builtins()) {
        CHECK(binomial_type_check(type_sequence(F, 5), 5));
        CHECK(binomial_type_check(injective_type_sequence(F, 5), 5));
    }
}

TEST_CASE("closed forms") {
    for (unsigned n = 1; n <= 6; ++n) CHECK(closed_form_checks(ClosedFormCheck::Abel, {n}));
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(closed_form_checks(ClosedFormCheck::Family2, {n}));
        for (unsigned k = 1; k <= 3; ++k) CHECK(closed_form_checks(ClosedFormCheck::FussCatalan, {n, k}));
        for (long a = 1; a <= 3; ++a) {
            for (long b = 0; b <= 3; ++b) CHECK(closed_form_checks(ClosedFormCheck::LatticePath, {n, 1, a, b}));
        }
    }
    const PolySequence t = family_goncarov(builtin_family("cycles"), Grid::arithmetic(P("a"), P("b"), 1).negated(), 1);
    CHECK(poly_substitute(t[1], y_ones(1)) == P("x + a"));
    CHECK(parse_closed_form_check("fuss_catalan") == ClosedFormCheck::FussCatalan);
    CHECK_THROWS_AS(parse_closed_form_check("narayana"), Error);
    CHECK_THROWS(closed_form_checks(ClosedFormCheck::Abel, {7}));
}

TEST_CASE("boundary lattice paths") {
    CHECK(count_boundary_paths({}) == 1);
    const long catalan[] = {1, 1, 2, 5, 14, 42};
    for (unsigned n = 1; n <= 5; ++n) {
        std::vector<long> boundary;
        for (unsigned i = 0; i < n; ++i) boundary.push_back(1 + static_cast<long>(i));
        CHECK(count_boundary_paths(boundary) == catalan[n]);
    }
    CHECK(count_boundary_paths({2, 3}) == 5);
}
