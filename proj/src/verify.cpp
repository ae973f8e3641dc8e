#include "goncarov/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "goncarov/commands.hpp"
#include "goncarov/error.hpp"
#include "goncarov/family.hpp"
#include "goncarov/goncarov.hpp"
#include "goncarov/json_io.hpp"
#include "goncarov/operator_calculus.hpp"
#include "goncarov/parking.hpp"
#include "goncarov/parse.hpp"
#include "goncarov/partition.hpp"

namespace gonc {

namespace {

const VarId X = VarId::x();

using Body = std::function<std::string()>;

class Suite {
public:
    Suite(std::string name, std::vector<CheckReport>& out) : name_(std::move(name)), out_(out) {}

    void check(std::string name, std::vector<std::string> ops, const Body& body) {
        CheckReport r{name_, std::move(name), std::move(ops), true, {}};
        try {
            r.detail = body();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.ok = r.detail.empty();
        out_.push_back(std::move(r));
    }

private:
    std::string name_;
    std::vector<CheckReport>& out_;
};

std::string witness(const CheckResult& r, const std::string& label) {
    if (r) return {};
    std::string out = label + ": n=" + std::to_string(r.index) + ", residual " + r.residual.pretty();
    if (!r.detail.empty()) out += " (" + r.detail + ")";
    return out;
}

std::string mismatch(const std::string& label, const MultiPoly& got, const MultiPoly& want) {
    if (got == want) return {};
    return label + ": got " + got.pretty() + ", expected " + want.pretty();
}

MultiPoly random_poly(std::mt19937& rng) {
    static const VarId vars[] = {VarId::x(), VarId::u(), VarId::w(2), VarId::z(0)};
    MultiPoly out;
    const int terms = static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (VarId v : vars) m = m * Monomial(v, rng() % 3);
        out.add_term(m, Rational(Integer(static_cast<long>(rng() % 11) - 5), Integer(1 + static_cast<long>(rng() % 3))));
    }
    return out;
}

TruncatedSeries random_series(std::mt19937& rng, unsigned order, bool delta) {
    TruncatedSeries s(order);
    for (unsigned k = 1; k <= order; ++k) {
        s.set(k, MultiPoly(Rational(Integer(static_cast<long>(rng() % 7) - 3), Integer(1 + static_cast<long>(rng() % 3)))));
    }
    if (delta) s.set(1, MultiPoly(Rational(Integer(1 + static_cast<long>(rng() % 3)), Integer(1 + static_cast<long>(rng() % 2)))));
    return s;
}

std::vector<std::vector<Integer>> stirling2(unsigned n_max) {
    std::vector<std::vector<Integer>> s(n_max + 1, std::vector<Integer>(n_max + 1, 0));
    s[0][0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        for (unsigned k = 1; k <= n; ++k) s[n][k] = Integer(k) * s[n - 1][k] + s[n - 1][k - 1];
    }
    return s;
}

Assignment unit_weights(char prefix, unsigned n) {
    Assignment a;
    for (unsigned i = prefix == 'w' ? 2 : 1; i <= n; ++i) a.emplace(prefix == 'w' ? VarId::w(i) : VarId::y(i), MultiPoly(1));
    return a;
}

MultiPoly at_zero(const MultiPoly& p) { return poly_substitute(p, X, MultiPoly()); }

unsigned pick(unsigned requested, unsigned fallback) { return requested ? requested : fallback; }

// ---------------------------------------------------------------------------

void algebra_suite(std::vector<CheckReport>& out, const VerifyOptions& o) {
    Suite s("algebra", out);
    const int trials = o.quick ? 20 : 60;
    const unsigned order = pick(o.n_max, 6) + 4;

    s.check("ring axioms", {"poly_arith"}, [&]() -> std::string {
        std::mt19937 rng(1);
        for (int i = 0; i < trials; ++i) {
            const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
            if (poly_arith(a, b, Arith::Add) != poly_arith(b, a, Arith::Add)) return "addition not commutative";
            if (poly_arith(a, b, Arith::Mul) != poly_arith(b, a, Arith::Mul)) return "product not commutative";
            if (poly_arith(poly_arith(a, b, Arith::Mul), c, Arith::Mul) != poly_arith(a, poly_arith(b, c, Arith::Mul), Arith::Mul)) {
                return "product not associative";
            }
            if (a * (b + c) != poly_arith(a * b, a * c, Arith::Add)) return "distributivity fails";
            if (!poly_arith(a, a, Arith::Sub).is_zero()) return "a - a != 0";
        }
        return {};
    });

    s.check("substitution is a ring homomorphism", {"poly_substitute"}, [&]() -> std::string {
        std::mt19937 rng(2);
        const Assignment sub{{X, parse_poly("u + v")}, {VarId::w(2), parse_poly("z0 - 1")}};
        for (int i = 0; i < trials; ++i) {
            const MultiPoly a = random_poly(rng), b = random_poly(rng);
            if (poly_substitute(a * b, sub) != poly_substitute(a, sub) * poly_substitute(b, sub)) return "product not preserved";
            if (poly_substitute(a + b, sub) != poly_substitute(a, sub) + poly_substitute(b, sub)) return "sum not preserved";
        }
        return mismatch("t_2(0; w, -Z)", poly_substitute(parse_poly("x^2 + (w2 - 2*z1)*x + 2*z0*z1 - z0^2 - w2*z0"), X, MultiPoly()),
                        parse_poly("2*z0*z1 - z0^2 - w2*z0"));
    });

    s.check("Leibniz rule", {"poly_derivative"}, [&]() -> std::string {
        std::mt19937 rng(3);
        for (int i = 0; i < trials; ++i) {
            const MultiPoly a = random_poly(rng), b = random_poly(rng);
            const MultiPoly lhs = poly_derivative(a * b, X);
            const MultiPoly rhs = poly_derivative(a, X) * b + a * poly_derivative(b, X);
            if (lhs != rhs) return mismatch("D(ab)", lhs, rhs);
        }
        return {};
    });

    s.check("factorial polynomials", {"factorial_poly"}, [&]() -> std::string {
        const MultiPoly x(X);
        for (unsigned n = 0; n <= order; ++n) {
            const MultiPoly falling = factorial_poly(FactorialKind::Falling, x, n);
            const MultiPoly reflected = factorial_poly(FactorialKind::Rising, -x, n) * Rational(n % 2 ? -1 : 1);
            if (falling != reflected) return mismatch("x_(n) vs (-1)^n (-x)^(n)", falling, reflected);
            const MultiPoly next = falling * (x - MultiPoly(static_cast<long>(n)));
            if (factorial_poly(FactorialKind::Falling, x, n + 1) != next) return "falling factorial recursion fails";
        }
        return {};
    });

    s.check("exponential of a sum", {"series_exp", "series_mul"}, [&]() -> std::string {
        std::mt19937 rng(4);
        for (int i = 0; i < trials / 4; ++i) {
            const TruncatedSeries a = random_series(rng, order, false), b = random_series(rng, order, false);
            if (series_exp(a + b) != series_mul(series_exp(a), series_exp(b))) return "exp(a+b) != exp(a) exp(b)";
        }
        const TruncatedSeries e = series_exp(TruncatedSeries::t(order));
        for (unsigned k = 0; k <= order; ++k) {
            if (e[k] != MultiPoly(Rational(Integer(1), factorial(k)))) return "exp(t) coefficient " + std::to_string(k);
        }
        return {};
    });

    s.check("composition and reversion", {"series_compose", "series_reversion"}, [&]() -> std::string {
        std::mt19937 rng(5);
        std::vector<TruncatedSeries> cases{TruncatedSeries::log_one_plus(10), zeta_indicator(o.quick ? 6 : 8)};
        for (int i = 0; i < trials / 4; ++i) cases.push_back(random_series(rng, 10, true));
        for (const auto& f : cases) {
            const TruncatedSeries r = series_reversion(f);
            if (series_compose(f, r) != TruncatedSeries::t(f.order())) return "f(f^-1(t)) != t";
            if (series_compose(r, f) != TruncatedSeries::t(f.order())) return "f^-1(f(t)) != t";
        }
        if (series_reversion(TruncatedSeries::log_one_plus(10)) != TruncatedSeries::exp_minus_one(10)) {
            return "reversion of log(1+t) is not e^t - 1";
        }
        return {};
    });

    s.check("JSON round trip", {}, [&]() -> std::string {
        std::mt19937 rng(6);
        for (int i = 0; i < trials; ++i) {
            const MultiPoly a = random_poly(rng);
            if (poly_from_json(poly_to_json(a)) != a) return "poly JSON round trip";
        }
        const TruncatedSeries z = zeta_indicator(6);
        if (series_from_json(series_to_json(z)) != z) return "series JSON round trip";
        return {};
    });
}

void lattice_suite(std::vector<CheckReport>& out, const VerifyOptions& o) {
    Suite s("lattice", out);
    const unsigned n_max = pick(o.n_max, o.quick ? 4 : 5);

    s.check("Bell counts", {"partitions_of"}, [&]() -> std::string {
        // Bell triangle.
        std::vector<Integer> row{1};
        for (unsigned n = 1; n <= std::max(n_max, 7u); ++n) {
            if (partitions_of(n).size() != row.back()) return "|Pi_" + std::to_string(n) + "| != Bell(" + std::to_string(n) + ")";
            std::vector<Integer> next{row.back()};
            for (const auto& v : row) next.push_back(next.back() + v);
            row = std::move(next);
        }
        return {};
    });

    s.check("refinement and interval classes", {"refines", "induced_class"}, [&]() -> std::string {
        for (unsigned n = 1; n <= std::min(n_max, 4u); ++n) {
            const auto all = partitions_of(n);
            for (const auto& pi : all) {
                for (const auto& sigma : all) {
                    const bool le = refines(pi, sigma);
                    if (le && refines(sigma, pi) && !(pi == sigma)) return "refinement not antisymmetric";
                    if (!le) continue;
                    unsigned weighted = 0, blocks = 0;
                    const auto lambda = induced_class(pi, sigma).lambda;
                    for (std::size_t i = 0; i < lambda.size(); ++i) {
                        weighted += static_cast<unsigned>(i + 1) * lambda[i];
                        blocks += lambda[i];
                    }
                    if (weighted != pi.block_count() || blocks != sigma.block_count()) return "class sums wrong for " + pi.str();
                }
            }
        }
        const auto p = SetPartition::from_blocks(8, {{1}, {2}, {3, 4, 5}, {6, 7}, {8}});
        const auto q = SetPartition::parse("1 2 1 1 1 3 3 3");
        if (!refines(p, q) || induced_class(p, q).lambda != std::vector<unsigned>{1, 2, 0, 0, 0}) return "[8] example";
        return {};
    });

    s.check("convolution inverse", {"zeta_type", "mobius_type"}, [&]() -> std::string {
        for (unsigned n = 1; n <= n_max; ++n) {
            MobiusTable table(n);
            for (const auto& pi : partitions_of(n)) {
                const auto upper = coarsenings(pi);
                for (const auto& sigma : upper) {
                    MultiPoly sum;
                    for (const auto& tau : upper) {
                        if (refines(tau, sigma)) sum += table.mu(pi, tau) * zeta_type(tau, sigma);
                    }
                    if (sum != MultiPoly(pi == sigma ? 1 : 0)) return "sum mu*zeta on [" + pi.str() + ", " + sigma.str() + "]";
                }
            }
        }
        return mismatch("mu(0,1) on Pi_3", mobius_type(SetPartition::finest(3), SetPartition::coarsest(3)), parse_poly("3*w2^2 - w3"));
    });

    s.check("enumerators", {"zeta_enumerator", "mobius_enumerator"}, [&]() -> std::string {
        const auto st = stirling2(n_max);
        for (unsigned n = 1; n <= n_max; ++n) {
            const MultiPoly mu = mobius_type(SetPartition::finest(n), SetPartition::coarsest(n));
            if (auto m = mismatch("linear coefficient of b_" + std::to_string(n), mobius_enumerator(n).coefficient_of(X, 1), mu); !m.empty()) {
                return m;
            }
            MultiPoly touchard;
            for (unsigned k = 0; k <= n; ++k) touchard += MultiPoly(Monomial(X, k), Rational(st[n][k]));
            if (auto m = mismatch("a_n at w = 1", poly_substitute(zeta_enumerator(n), unit_weights('w', n)), touchard); !m.empty()) {
                return m;
            }
        }
        if (auto m = mismatch("a_2", zeta_enumerator(2), parse_poly("x^2 + w2*x")); !m.empty()) return m;
        return mismatch("b_3", mobius_enumerator(3), parse_poly("x^3 - 3*w2*x^2 + (3*w2^2 - w3)*x"));
    });

    s.check("enumerators are of binomial type", {"binomial_type_check"}, [&]() -> std::string {
        if (auto m = witness(binomial_type_check(zeta_sequence(n_max), n_max), "a_n"); !m.empty()) return m;
        return witness(binomial_type_check(mobius_sequence(n_max), n_max), "b_n");
    });
}

void operator_suite(std::vector<CheckReport>& out, const VerifyOptions& o) {
    Suite s("operator", out);
    const unsigned n = pick(o.n_max, o.quick ? 4 : 5);

    s.check("conjugate sequences", {"conjugate_sequence"}, [&]() -> std::string {
        if (conjugate_sequence(TruncatedSeries::t(n), n) != monomial_sequence(n)) return "exp(xt) != x^n";
        if (conjugate_sequence(zeta_indicator(n), n) != zeta_sequence(n)) return "exp(x g) != a_n";
        if (conjugate_sequence(TruncatedSeries::log_one_plus(n), n) != falling_factorial_sequence(n)) return "(1+t)^x != x_(n)";
        return mismatch("Touchard p_3", conjugate_sequence(TruncatedSeries::exp_minus_one(3), 3)[3], parse_poly("x^3 + 3*x^2 + x"));
    });

    s.check("indicator round trip", {"indicator_from_sequence"}, [&]() -> std::string {
        for (const auto& p : {monomial_sequence(n), falling_factorial_sequence(n), zeta_sequence(n), mobius_sequence(n)}) {
            if (conjugate_sequence(indicator_from_sequence(p), n) != p) return "conjugate(indicator(p)) != p";
        }
        return {};
    });

    s.check("reversion duality", {"series_reversion", "basic_property_check"}, [&]() -> std::string {
        const TruncatedSeries g = zeta_indicator(n);
        const TruncatedSeries f = series_reversion(g);
        if (auto m = witness(basic_property_check(f, zeta_sequence(n), n), "f lowers a_n"); !m.empty()) return m;
        if (conjugate_sequence(f, n) != mobius_sequence(n)) return "exp(x f) != b_n";
        if (auto m = witness(basic_property_check(g, mobius_sequence(n), n), "g lowers b_n"); !m.empty()) return m;
        return witness(basic_property_check(TruncatedSeries::exp_minus_one(n), falling_factorial_sequence(n), n),
                       "forward difference lowers x_(n)");
    });

    s.check("operators commute with shifts", {"apply_operator"}, [&]() -> std::string {
        std::mt19937 rng(7);
        const MultiPoly shift = MultiPoly(X) + MultiPoly(Rational(Integer(3), Integer(2)));
        const PolySequence a = zeta_sequence(n);
        for (int trial = 0; trial < (o.quick ? 5 : 15); ++trial) {
            const TruncatedSeries f = random_series(rng, n, true);
            for (const auto& q : a.entries()) {
                if (apply_operator(f, poly_substitute(q, X, shift)) != poly_substitute(apply_operator(f, q), X, shift)) {
                    return "f(D) E_c != E_c f(D) on " + q.pretty();
                }
            }
        }
        return mismatch("forward difference of x(x-1)", apply_operator(TruncatedSeries::exp_minus_one(2), parse_poly("x*(x-1)")),
                        parse_poly("2*x"));
    });
}

void goncarov_suite(std::vector<CheckReport>& out, const VerifyOptions& o) {
    Suite s("goncarov", out);
    const unsigned n = pick(o.n_max, o.quick ? 4 : 5);
    const std::vector<std::pair<std::string, PolySequence>> corpus = {
        {"x^n", monomial_sequence(n)},
        {"a_n", zeta_sequence(n)},
        {"cycles", type_sequence(builtin_family("cycles"), n)},
    };

    s.check("ordered partitions", {"ordered_partitions"}, [&]() -> std::string {
        const unsigned top = o.quick ? 6 : 7;
        const auto st = stirling2(top);
        for (unsigned m = 1; m <= top; ++m) {
            Integer fubini = 0;
            for (unsigned k = 1; k <= m; ++k) fubini += factorial(k) * st[m][k];
            if (Integer(static_cast<unsigned long>(ordered_partitions(m).size())) != fubini) return "Fubini(" + std::to_string(m) + ")";
        }
        return {};
    });

    s.check("ordered-partition form vs recurrence", {"goncarov_constant_ordered_partitions", "goncarov_sequence"},
            [&]() -> std::string {
                const Grid z = Grid::symbolic(n);
                for (const auto& [label, p] : corpus) {
                    const PolySequence t = goncarov_sequence(p, z.negated(), n);
                    for (unsigned m = 1; m <= n; ++m) {
                        if (auto r = mismatch(label + " t_" + std::to_string(m) + "(0;-Z)",
                                              goncarov_constant_ordered_partitions(p, z, m), at_zero(t[m]));
                            !r.empty()) {
                            return r;
                        }
                    }
                }
                return {};
            });

    s.check("reconstruction", {"goncarov_sequence"}, [&]() -> std::string {
        const Grid z = Grid::symbolic(n);
        for (const auto& [label, p] : corpus) {
            if (auto m = witness(verify_reconstruction(p, z, goncarov_sequence(p, z, n), n), label); !m.empty()) return m;
        }
        const PolySequence t = goncarov_sequence(zeta_sequence(2), Grid::symbolic(2), 2);
        return mismatch("t_2", t[2], parse_poly("x^2 + (w2 - 2*z1)*x + 2*z0*z1 - z0^2 - w2*z0"));
    });

    s.check("t_n(0; -Z) = t_n(x; x - Z)", {"goncarov_sequence"}, [&]() -> std::string {
        const unsigned m = std::min(n, 4u);
        const Grid z = Grid::symbolic(m);
        const PolySequence a = goncarov_sequence(zeta_sequence(m), z.negated(), m);
        const PolySequence b = goncarov_sequence(zeta_sequence(m), z.reflected(MultiPoly(X)), m);
        for (unsigned k = 0; k <= m; ++k) {
            if (auto r = mismatch("n=" + std::to_string(k), at_zero(a[k]), b[k]); !r.empty()) return r;
        }
        return {};
    });

    s.check("shift invariance", {"verify_shift_invariance"}, [&]() -> std::string {
        const unsigned m = std::min(n, 4u);
        if (auto r = witness(verify_shift_invariance(zeta_sequence(m), m), "a_n"); !r.empty()) return r;
        return witness(verify_shift_invariance(type_sequence(builtin_family("two_regular"), 6), 6), "two_regular");
    });

    s.check("biorthogonality", {"verify_biorthogonality"}, [&]() -> std::string {
        const unsigned m = std::min(n, 4u);
        const Grid z = Grid::symbolic(m + 1);
        if (auto r = witness(verify_biorthogonality(TruncatedSeries::t(m), z, goncarov_sequence(monomial_sequence(m), z, m), m),
                             "classical");
            !r.empty()) {
            return r;
        }
        Assignment w;
        for (unsigned i = 2; i <= 4; ++i) w.emplace(VarId::w(i), MultiPoly(Rational(Integer(1), Integer(i))));
        TruncatedSeries g = zeta_indicator(4);
        for (unsigned k = 0; k <= 4; ++k) g.set(k, poly_substitute(g[k], w));
        const Grid z3 = Grid::symbolic(4);
        return witness(verify_biorthogonality(series_reversion(g), z3, goncarov_sequence(zeta_sequence(3).substituted(w), z3, 3), 3),
                       "rational weights");
    });
}

void parking_suite(std::vector<CheckReport>& out, const VerifyOptions& o) {
    Suite s("parking", out);
    const unsigned n = pick(o.n_max, 4);
    std::vector<long> grid = o.grid;
    if (grid.empty()) {
        for (unsigned i = 0; i < n; ++i) grid.push_back(1 + static_cast<long>(i));
    }

    s.check("parking predicate", {"is_u_parking"}, [&]() -> std::string {
        const ParkingVector u({1, 2, 3, 4});
        const std::vector<long> good{2, 1, 4, 1}, bad{2, 2, 3, 4};
        if (!is_u_parking(good, u) || is_u_parking(bad, u)) return "(2,1,4,1) / (2,2,3,4) misclassified";
        std::mt19937 rng(8);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<long> seq(4);
            for (auto& v : seq) v = 1 + static_cast<long>(rng() % 5);
            const bool before = is_u_parking(seq, u);
            std::shuffle(seq.begin(), seq.end(), rng);
            if (is_u_parking(seq, u) != before) return "not invariant under permutation";
        }
        return {};
    });

    s.check("parking counts", {"count_parking"}, [&]() -> std::string {
        for (unsigned m = 1; m <= 5; ++m) {
            std::vector<long> u;
            for (unsigned i = 0; i < m; ++i) u.push_back(1 + static_cast<long>(i));
            const Integer expected = pow(Rational(static_cast<long>(m + 1)), m - 1).num();
            if (Integer(static_cast<unsigned long>(count_parking(m, ParkingVector(u)))) != expected) {
                return "(n+1)^(n-1) fails at n=" + std::to_string(m);
            }
            u.back() += 1;
            if (count_parking(m, ParkingVector(u)) < expected) return "count decreased when a bound grew";
        }
        return {};
    });

    s.check("singleton blocks recover parking functions", {"pf_partition"}, [&]() -> std::string {
        for (unsigned m = 1; m <= std::min<std::size_t>(n, grid.size()); ++m) {
            const ParkingVector z(std::vector<long>(grid.begin(), grid.begin() + m));
            if (pf_partition(SetPartition::finest(m), z) != count_parking(m, z)) return "PF_0 != count at n=" + std::to_string(m);
        }
        return {};
    });

    s.check("constant term counts weighted parking functions", {"weighted_pf_enumerator"}, [&]() -> std::string {
        std::vector<std::vector<long>> grids{grid};
        if (!o.quick && o.grid.empty()) grids.push_back({2, 3, 5, 7, 11});
        for (const auto& z : grids) {
            const unsigned m_max = static_cast<unsigned>(std::min<std::size_t>(std::max(n, 5u), z.size()));
            const PolySequence t = goncarov_sequence(zeta_sequence(m_max), Grid::numeric(z).negated(), m_max);
            for (unsigned m = 1; m <= m_max; ++m) {
                const ParkingVector prefix(std::vector<long>(z.begin(), z.begin() + m));
                if (auto r = mismatch("n=" + std::to_string(m), at_zero(t[m]), weighted_pf_enumerator(m, prefix)); !r.empty()) return r;
            }
        }
        return {};
    });

    s.check("decomposition by parking prefix", {"verify_decomposition"}, [&]() -> std::string {
        const ParkingVector z(grid);
        const unsigned m_max = static_cast<unsigned>(std::min<std::size_t>(n, grid.size()));
        const long x = o.x ? o.x : z[m_max - 1] + 2;
        for (unsigned m = 0; m <= m_max; ++m) {
            if (auto r = witness(verify_decomposition(m, z, x), "x=" + std::to_string(x)); !r.empty()) return r;
        }
        return {};
    });
}

void family_suite(std::vector<CheckReport>& out, const VerifyOptions& o) {
    Suite s("family", out);
    const unsigned n = pick(o.n_max, o.quick ? 4 : 5);
    std::vector<DeckSpec> families;
    for (const auto& name : builtin_family_names()) families.push_back(builtin_family(name));

    s.check("builtin decks", {"builtin_family"}, [&]() -> std::string {
        const DeckSpec tr = builtin_family("two_regular");
        if (builtin_family("set_partitions").deck(4) != 1 || builtin_family("cycles").deck(3) != 2) return "deck sizes";
        if (tr.deck(1) != 0 || tr.deck(2) != 0 || tr.deck(5) != 12) return "two_regular deck sizes";
        return {};
    });

    s.check("enumerator routes agree", {"hand_enumerator", "type_enumerator"}, [&]() -> std::string {
        const unsigned top = o.quick ? 6 : 7;
        for (const auto& F : families) {
            for (unsigned m = 0; m <= top; ++m) {
                // Both functions cross-check their two routes and throw on disagreement.
                if (auto r = mismatch(F.name + " h_" + std::to_string(m),
                                      poly_substitute(type_enumerator(F, m), unit_weights('y', m)), hand_enumerator(F, m));
                    !r.empty()) {
                    return r;
                }
            }
        }
        return mismatch("cycles h_3", hand_enumerator(builtin_family("cycles"), 3), parse_poly("x^3 + 3*x^2 + 2*x"));
    });

    s.check("binomial type, plain and injective", {"injective_type_enumerator", "binomial_type_check"}, [&]() -> std::string {
        for (const auto& F : families) {
            if (auto r = witness(binomial_type_check(type_sequence(F, n), n), F.name); !r.empty()) return r;
            if (auto r = witness(binomial_type_check(injective_type_sequence(F, n), n), F.name + " injective"); !r.empty()) return r;
        }
        return mismatch("injective set_partitions n=2",
                        poly_substitute(injective_type_enumerator(builtin_family("set_partitions"), 2), unit_weights('y', 2)),
                        parse_poly("x^2"));
    });

    s.check("constant term counts hand parking functions", {"family_goncarov", "hand_parking_enumerator"}, [&]() -> std::string {
        const std::vector<std::vector<long>> grids{{1, 2, 3, 4, 5, 6}, {1, 3, 4, 6, 7, 9}};
        for (const auto& F : families) {
            const unsigned m_max = F.name == "two_regular" ? std::max(n, 6u) : n;
            for (const auto& z : grids) {
                const PolySequence t = family_goncarov(F, Grid::numeric(z).negated(), m_max);
                for (unsigned m = 1; m <= m_max; ++m) {
                    const ParkingVector prefix(std::vector<long>(z.begin(), z.begin() + m));
                    if (auto r = mismatch(F.name + " n=" + std::to_string(m), at_zero(t[m]), hand_parking_enumerator(F, prefix));
                        !r.empty()) {
                        return r;
                    }
                }
            }
        }
        const PolySequence t = family_goncarov(builtin_family("two_regular"), Grid::symbolic(6).negated(), 6);
        return mismatch("two_regular t_6(0;-Z)", at_zero(t[6]), parse_poly("60*y6*z0 + 20*y3^2*z0*z3 - 10*y3^2*z0^2"));
    });

    s.check("injective analog", {"hand_parking_enumerator", "injective_type_enumerator"}, [&]() -> std::string {
        const DeckSpec sp = builtin_family("set_partitions");
        const std::vector<long> z{1, 2, 4, 5};
        const PolySequence t = goncarov_sequence(injective_type_sequence(sp, 4), Grid::numeric(z).negated(), 4);
        for (unsigned m = 1; m <= 4; ++m) {
            const ParkingVector prefix(std::vector<long>(z.begin(), z.begin() + m));
            if (auto r = mismatch("n=" + std::to_string(m), at_zero(t[m]), hand_parking_enumerator(sp, prefix, true)); !r.empty()) return r;
        }
        return {};
    });

    s.check("family decomposition", {"type_enumerator", "hand_parking_enumerator"}, [&]() -> std::string {
        for (const auto& F : families) {
            for (unsigned m = 0; m <= 4; ++m) {
                if (auto r = witness(verify_family_decomposition(F, m, ParkingVector({1, 2, 3, 4}), 6), F.name); !r.empty()) return r;
            }
        }
        return {};
    });

    s.check("closed forms", {"closed_form_checks"}, [&]() -> std::string {
        for (unsigned m = 1; m <= 4; ++m) {
            if (auto r = witness(closed_form_checks(ClosedFormCheck::Abel, {m}), "abel"); !r.empty()) return r;
            if (auto r = witness(closed_form_checks(ClosedFormCheck::Family2, {m}), "family2"); !r.empty()) return r;
            for (unsigned k = 1; k <= 3; ++k) {
                if (auto r = witness(closed_form_checks(ClosedFormCheck::FussCatalan, {m, k}), "fuss_catalan"); !r.empty()) return r;
                if (auto r = witness(closed_form_checks(ClosedFormCheck::LatticePath, {m, 1, 1, static_cast<long>(k)}), "lattice_path");
                    !r.empty()) {
                    return r;
                }
            }
        }
        return {};
    });
}

ComputeRequest request(ComputeKind kind, unsigned n, std::string family = {}) {
    ComputeRequest r;
    r.kind = kind;
    r.n = n;
    r.family = std::move(family);
    return r;
}

void cli_suite(std::vector<CheckReport>& out, const VerifyOptions& o) {
    Suite s("cli", out);

    s.check("compute output round-trips through JSON", {"cmd_compute"}, [&]() -> std::string {
        std::vector<ComputeRequest> requests;
        requests.push_back(request(ComputeKind::Zeta, 2));
        requests.push_back(request(ComputeKind::Mobius, 4));
        ComputeRequest g = request(ComputeKind::Goncarov, 3, "set_partitions");
        g.grid = "1,2,3";
        g.negate_grid = true;
        g.y = "all=1";
        g.at = "x=0";
        requests.push_back(g);
        const ComputeRequest c = request(ComputeKind::GoncarovConstant, 2);
        requests.push_back(c);
        requests.push_back(request(ComputeKind::Type, 6, "two_regular"));
        for (const auto& r : requests) {
            const auto j = compute_json(r);
            const auto again = nlohmann::json::parse(j.dump());
            if (poly_to_json(poly_from_json(again.at("result"))) != j.at("result")) return "round trip failed for " + j.dump();
        }
        if (auto r = mismatch("compute zeta --n 2", compute_poly(requests[0]), parse_poly("x^2 + w2*x")); !r.empty()) return r;
        if (auto r = mismatch("set_partitions t_3(0)", compute_poly(g), MultiPoly(29)); !r.empty()) return r;
        return mismatch("goncarov-constant x^n, n=2", compute_poly(c), parse_poly("2*z0*z1 - z0^2"));
    });

    s.check("tables", {"cmd_tables"}, [&]() -> std::string {
        const std::string a = table_csv(TableKind::A030019, 5);
        for (const char* row : {"\n0,1,paper-printed", "\n1,1,paper-printed", "\n2,4,paper-printed", "\n3,29,paper-printed", "\n4,311,paper-printed"}) {
            if (a.find(row) == std::string::npos) return std::string("a030019 row missing:") + row;
        }
        const std::string g = table_csv(TableKind::PaperGoldens, 0);
        std::size_t flagged = 0;
        for (std::size_t pos = 0; (pos = g.find("erratum-candidate", pos)) != std::string::npos; ++pos) ++flagged;
        if (flagged != 2) return "expected exactly two erratum-candidate rows, found " + std::to_string(flagged);
        if (g.find("two_regular,h_4,3*y4*x,2*y4*x,erratum-candidate") == std::string::npos) return "h_4 row";
        if (g.find("two_regular,t_4,") == std::string::npos) return "t_4 row";
        return {};
    });

    s.check("verify is deterministic", {"cmd_verify"}, [&]() -> std::string {
        VerifyOptions q = o;
        q.quick = true;
        q.n_max = 0;
        const auto a = run_verify("algebra", q);
        const auto b = run_verify("algebra", q);
        if (a.size() != b.size()) return "report sizes differ";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].name != b[i].name || a[i].ok != b[i].ok || a[i].detail != b[i].detail) return "reports differ at " + a[i].name;
        }
        return {};
    });
}

using SuiteFn = void (*)(std::vector<CheckReport>&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"algebra", algebra_suite}, {"lattice", lattice_suite}, {"operator", operator_suite}, {"goncarov", goncarov_suite},
        {"parking", parking_suite}, {"family", family_suite},   {"cli", cli_suite},
    };
    return table;
}

} // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suites()) out.push_back(name);
        out.push_back("all");
        return out;
    }();
    return names;
}

std::vector<CheckReport> run_verify(std::string_view suite, const VerifyOptions& options) {
    std::vector<CheckReport> out;
    bool found = false;
    for (const auto& [name, fn] : suites()) {
        if (suite == "all" || suite == name) {
            found = true;
            // Suite-specific sizes only make sense for a single suite.
            VerifyOptions o = options;
            if (suite == "all" && name != "parking") {
                o.grid.clear();
                o.x = 0;
            }
            fn(out, o);
        }
    }
    if (!found) throw Error(ErrorCode::UnknownCheck, "unknown suite '" + std::string(suite) + "'");
    return out;
}

const std::vector<std::string>& operation_names() {
    static const std::vector<std::string> names = {
        "poly_arith", "poly_substitute", "poly_derivative", "factorial_poly", "series_mul", "series_exp", "series_compose",
        "series_reversion", "partitions_of", "refines", "induced_class", "zeta_type", "mobius_type", "zeta_enumerator",
        "mobius_enumerator", "conjugate_sequence", "indicator_from_sequence", "apply_operator", "binomial_type_check",
        "basic_property_check", "goncarov_sequence", "goncarov_constant_ordered_partitions", "ordered_partitions",
        "verify_shift_invariance", "verify_biorthogonality", "is_u_parking", "count_parking", "pf_partition",
        "weighted_pf_enumerator", "verify_decomposition", "builtin_family", "hand_enumerator", "type_enumerator",
        "injective_type_enumerator", "family_goncarov", "hand_parking_enumerator", "closed_form_checks", "cmd_compute",
        "cmd_verify", "cmd_tables",
    };
    return names;
}

} // namespace gonc
