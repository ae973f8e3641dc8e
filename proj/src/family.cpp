#include "goncarov/family.hpp"

#include <algorithm>

#include "goncarov/error.hpp"
#include "goncarov/partition.hpp"

namespace gonc {

namespace {

const VarId kX = VarId::x();

Monomial type_monomial(const std::vector<unsigned>& block_sizes) {
    Monomial m;
    for (unsigned s : block_sizes) m = m * Monomial(VarId::y(s));
    return m;
}

// Direct sum over Pi_n grouped by block-size profile.
MultiPoly partition_sum(const DeckSpec& F, unsigned n, bool with_types) {
    std::map<std::vector<unsigned>, unsigned long> profiles;
    for_each_partition(n, [&](const SetPartition& pi) {
        std::vector<unsigned> sizes;
        for (const auto& b : pi.blocks()) sizes.push_back(static_cast<unsigned>(b.size()));
        std::sort(sizes.begin(), sizes.end());
        ++profiles[sizes];
    });
    MultiPoly out;
    for (const auto& [sizes, count] : profiles) {
        Integer weight = count;
        for (unsigned s : sizes) weight *= F.deck(s);
        if (weight == 0) continue;
        Monomial m = Monomial(kX, static_cast<unsigned>(sizes.size()));
        if (with_types) m = m * type_monomial(sizes);
        out.add_term(m, Rational(weight));
    }
    return out;
}

MultiPoly exponential_formula(const DeckSpec& F, unsigned n, bool with_types) {
    const TruncatedSeries e = series_exp(deck_series(F, n, with_types) * MultiPoly(kX));
    return e[n] * Rational(factorial(n));
}

MultiPoly cross_checked(const DeckSpec& F, unsigned n, bool with_types) {
    if (n > kPartitionGuard) {
        throw Error(ErrorCode::SizeLimitExceeded, "hand enumeration limited to n <= 12");
    }
    if (n == 0) return MultiPoly(1);
    MultiPoly egf = exponential_formula(F, n, with_types);
    const MultiPoly direct = partition_sum(F, n, with_types);
    if (egf != direct) {
        throw Error(ErrorCode::InternalCrossCheckFailure,
                    "exponential formula and partition sum disagree for " + F.name + " at n=" + std::to_string(n));
    }
    return egf;
}

MultiPoly hand_weight(const DeckSpec& F, const SetPartition& pi) {
    Integer weight = 1;
    std::vector<unsigned> sizes;
    for (const auto& b : pi.blocks()) {
        weight *= F.deck(static_cast<unsigned>(b.size()));
        sizes.push_back(static_cast<unsigned>(b.size()));
    }
    if (weight == 0) return MultiPoly();
    return MultiPoly(type_monomial(sizes), Rational(weight));
}

PolySequence unit_type_sequence(const DeckSpec& F, unsigned n_max) {
    Assignment ones;
    for (unsigned k = 1; k <= n_max; ++k) ones.emplace(VarId::y(k), MultiPoly(1));
    return type_sequence(F, n_max).substituted(ones);
}

} // namespace

std::vector<std::string> builtin_family_names() { return {"set_partitions", "cycles", "two_regular"}; }

DeckSpec builtin_family(std::string_view name) {
    if (name == "set_partitions") {
        return {"set_partitions", [](unsigned) { return Integer(1); }, 1};
    }
    if (name == "cycles") {
        return {"cycles", [](unsigned n) { return factorial(n - 1); }, 1};
    }
    if (name == "two_regular") {
        return {"two_regular", [](unsigned n) { return n >= 3 ? Integer(factorial(n - 1) / 2) : Integer(0); }, 3};
    }
    throw Error(ErrorCode::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

DeckSpec custom_family(std::string name, const std::map<unsigned, Integer>& decks) {
    unsigned min_weight = 0;
    for (const auto& [weight, size] : decks) {
        if (weight == 0) throw std::invalid_argument("card weights start at 1");
        if (size < 0) throw std::invalid_argument("deck sizes must be nonnegative");
        if (size > 0 && min_weight == 0) min_weight = weight;
    }
    return {std::move(name),
            [decks](unsigned n) {
                auto it = decks.find(n);
                return it == decks.end() ? Integer(0) : it->second;
            },
            min_weight};
}

TruncatedSeries deck_series(const DeckSpec& F, unsigned order, bool with_types) {
    TruncatedSeries s(order);
    for (unsigned k = 1; k <= order; ++k) {
        const Integer d = F.deck(k);
        if (d == 0) continue;
        MultiPoly c(Rational(d, factorial(k)));
        if (with_types) c *= MultiPoly(VarId::y(k));
        s.set(k, std::move(c));
    }
    return s;
}

MultiPoly hand_enumerator(const DeckSpec& F, unsigned n) { return cross_checked(F, n, false); }

MultiPoly type_enumerator(const DeckSpec& F, unsigned n) { return cross_checked(F, n, true); }

MultiPoly injective_type_enumerator(const DeckSpec& F, unsigned n) {
    const MultiPoly h = type_enumerator(F, n);
    MultiPoly out;
    for (unsigned k = 0; k <= h.degree_in(kX); ++k) {
        const MultiPoly c = h.coefficient_of(kX, k);
        if (!c.is_zero()) out += c * factorial_poly(FactorialKind::Falling, MultiPoly(kX), k);
    }
    return out;
}

PolySequence type_sequence(const DeckSpec& F, unsigned n_max) {
    std::vector<MultiPoly> out;
    for (unsigned n = 0; n <= n_max; ++n) out.push_back(type_enumerator(F, n));
    return PolySequence(std::move(out));
}

PolySequence injective_type_sequence(const DeckSpec& F, unsigned n_max) {
    std::vector<MultiPoly> out;
    for (unsigned n = 0; n <= n_max; ++n) out.push_back(injective_type_enumerator(F, n));
    return PolySequence(std::move(out));
}

PolySequence family_goncarov(const DeckSpec& F, const Grid& grid, unsigned n_max) {
    return goncarov_sequence(type_sequence(F, n_max), grid, n_max);
}

MultiPoly hand_parking_enumerator(const DeckSpec& F, const ParkingVector& zvec, bool injective) {
    const unsigned n = static_cast<unsigned>(zvec.size());
    if (n == 0) return MultiPoly(1);
    if (n > kPartitionGuard) throw Error(ErrorCode::SizeLimitExceeded, "hand enumeration limited to n <= 12");
    MultiPoly out;
    for_each_partition(n, [&](const SetPartition& pi) {
        const MultiPoly weight = hand_weight(F, pi);
        if (weight.is_zero()) return;
        const std::uint64_t count = pf_partition(pi, zvec, injective);
        if (count) out += weight * Rational(Integer(static_cast<unsigned long>(count)));
    });
    return out;
}

CheckResult verify_family_decomposition(const DeckSpec& F, unsigned n, const ParkingVector& zvec, long x) {
    if (n == 0) return CheckResult::pass();
    const ParkingVector z = zvec.prefix(n);
    if (!z.strictly_increasing() || z.max_bound() >= x) {
        throw Error(ErrorCode::HypothesisViolated, "needs z_0 < z_1 < ... < z_{n-1} < x");
    }
    MultiPoly rhs;
    for (unsigned i = 0; i <= n; ++i) {
        const MultiPoly h = i < n ? poly_substitute(type_enumerator(F, n - i), kX, MultiPoly(x - z[i])) : MultiPoly(1);
        rhs += h * hand_parking_enumerator(F, z.prefix(i)) * Rational(binomial(n, i));
    }
    const MultiPoly lhs = poly_substitute(type_enumerator(F, n), kX, MultiPoly(x));
    if (lhs != rhs) return CheckResult::fail(n, lhs - rhs, "h_n(x;y) != sum C(n,i) h_{n-i}(x-z_i;y) PF_i");
    return CheckResult::pass();
}

Integer count_boundary_paths(const std::vector<long>& boundary) {
    const std::size_t rows = boundary.size();
    if (rows == 0) return 1;
    const long last_column = boundary.back() - 1;
    if (last_column < 0) return 0;
    // Depth-first walk over every admissible path.
    Integer count = 0;
    std::function<void(long, std::size_t)> walk = [&](long col, std::size_t row) {
        if (row == rows) {
            ++count;  // the remaining east steps are forced
            return;
        }
        if (col < boundary[row]) walk(col, row + 1);
        if (col < last_column) walk(col + 1, row);
    };
    walk(0, 0);
    return count;
}

ClosedFormCheck parse_closed_form_check(std::string_view name) {
    if (name == "abel") return ClosedFormCheck::Abel;
    if (name == "family2") return ClosedFormCheck::Family2;
    if (name == "fuss_catalan") return ClosedFormCheck::FussCatalan;
    if (name == "lattice_path") return ClosedFormCheck::LatticePath;
    throw Error(ErrorCode::UnknownCheck, "unknown closed-form check '" + std::string(name) + "'");
}

CheckResult closed_form_checks(ClosedFormCheck check, const ClosedFormParams& params) {
    const unsigned n = params.n;
    if (n < 1 || n > 6 || params.k > 3) {
        throw std::invalid_argument("closed-form checks run at n in [1,6], k <= 3");
    }
    const DeckSpec cycles = builtin_family("cycles");
    switch (check) {
    case ClosedFormCheck::Abel: {
        // Rooted trees: w_i = i^{i-1} gives a_n = x (x + n)^{n-1}.
        Assignment w;
        for (unsigned i = 2; i <= n; ++i) w.emplace(VarId::w(i), MultiPoly(pow(Rational(static_cast<long>(i)), i - 1)));
        const MultiPoly a = poly_substitute(zeta_enumerator(n), w);
        const MultiPoly expected = MultiPoly(kX) * pow(MultiPoly(kX) + MultiPoly(static_cast<long>(n)), n - 1);
        return a == expected ? CheckResult::pass() : CheckResult::fail(n, a - expected, "Abel polynomial mismatch");
    }
    case ClosedFormCheck::Family2: {
        const MultiPoly a(VarId::a()), b(VarId::b()), x(kX);
        const Grid grid = Grid::arithmetic(a, b, n).negated();
        const PolySequence t = goncarov_sequence(unit_type_sequence(cycles, n), grid, n);
        const MultiPoly expected =
            (x + a) * factorial_poly(FactorialKind::Rising, x + a + b * Rational(static_cast<long>(n)) + 1, n - 1);
        return t[n] == expected ? CheckResult::pass()
                                : CheckResult::fail(n, t[n] - expected, "(x+a)(x+a+nb+1)^(n-1) mismatch");
    }
    case ClosedFormCheck::FussCatalan:
    case ClosedFormCheck::LatticePath: {
        const long a = check == ClosedFormCheck::FussCatalan ? 1 : params.a;
        const long b = check == ClosedFormCheck::FussCatalan ? static_cast<long>(params.k) : params.b;
        std::vector<long> boundary;
        for (unsigned i = 0; i < n; ++i) boundary.push_back(a + b * static_cast<long>(i));
        const PolySequence t = goncarov_sequence(unit_type_sequence(cycles, n), Grid::numeric(boundary).negated(), n);
        const MultiPoly constant = poly_substitute(t[n], kX, MultiPoly(0));
        const Rational scaled = constant.constant_term() / Rational(factorial(n));
        Rational expected;
        if (check == ClosedFormCheck::FussCatalan) {
            const unsigned k = params.k;
            expected = Rational(binomial((k + 1) * n, n), Integer(1 + k * n));
        } else {
            expected = Rational(count_boundary_paths(boundary));
        }
        if (!constant.is_constant() || scaled != expected) {
            return CheckResult::fail(n, MultiPoly(scaled - expected), "t_n(0)/n! mismatch");
        }
        return CheckResult::pass();
    }
    }
    return CheckResult::pass();
}

} // namespace gonc
