#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goncarov/rational.hpp"

namespace gonc {

// Variable families, in canonical order. A and B are free parameters used by
// arithmetic-progression grids.
enum class VarFamily : std::uint8_t { X, U, V, Eta, A, B, W, Y, Z };

class VarId {
public:
    constexpr VarId() = default;

    static constexpr VarId x() { return VarId(VarFamily::X, 0); }
    static constexpr VarId u() { return VarId(VarFamily::U, 0); }
    static constexpr VarId v() { return VarId(VarFamily::V, 0); }
    static constexpr VarId eta() { return VarId(VarFamily::Eta, 0); }
    static constexpr VarId a() { return VarId(VarFamily::A, 0); }
    static constexpr VarId b() { return VarId(VarFamily::B, 0); }
    static VarId w(unsigned i);
    static VarId y(unsigned i);
    static VarId z(unsigned i);

    // Parses "x", "u", "v", "eta", "a", "b", "w<i>", "y<i>", "z<i>".
    static VarId parse(std::string_view name);

    constexpr VarFamily family() const { return family_; }
    constexpr unsigned index() const { return index_; }
    std::string name() const;

    friend constexpr auto operator<=>(const VarId&, const VarId&) = default;

private:
    constexpr VarId(VarFamily f, unsigned i) : family_(f), index_(i) {}

    VarFamily family_ = VarFamily::X;
    unsigned index_ = 0;
};

// Power product with strictly positive exponents, sorted by variable.
class Monomial {
public:
    using Factor = std::pair<VarId, unsigned>;

    Monomial() = default;
    explicit Monomial(VarId v, unsigned exp = 1);
    Monomial(std::initializer_list<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    unsigned total_degree() const;
    unsigned exponent(VarId v) const;

    // Removes `v` and returns its exponent.
    Monomial without(VarId v, unsigned* exp_out = nullptr) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

// Canonical order: total degree, then lexicographic on variables with
// earlier variables more significant.
struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly;
using Assignment = std::map<VarId, MultiPoly>;

class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational, CanonicalOrder>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);
    MultiPoly(long c) : MultiPoly(Rational(c)) {}
    MultiPoly(int c) : MultiPoly(Rational(c)) {}
    MultiPoly(VarId v) : MultiPoly(Monomial(v)) {}
    MultiPoly(const Monomial& m, const Rational& c = Rational(1));

    static MultiPoly var(VarId v) { return MultiPoly(v); }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant value; meaningful only when is_constant().
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    unsigned degree_in(VarId v) const;
    unsigned total_degree() const;
    bool contains(VarId v) const;
    std::vector<VarId> variables() const;

    // Polynomial coefficient of v^k, as a polynomial in the other variables.
    MultiPoly coefficient_of(VarId v, unsigned k) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    // Adds c*m in place.
    void add_term(const Monomial& m, const Rational& c);

    // Conventional notation, highest degree first: "x^2 + w2*x - 3/2".
    std::string pretty() const;

private:
    Terms terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned exp);

enum class Arith { Add, Sub, Mul };
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, Arith op);

// Simultaneous substitution; unassigned variables pass through.
MultiPoly poly_substitute(const MultiPoly& p, const Assignment& assignment);
MultiPoly poly_substitute(const MultiPoly& p, VarId v, const MultiPoly& value);

MultiPoly poly_derivative(const MultiPoly& p, VarId v);

enum class FactorialKind { Falling, Rising };
MultiPoly factorial_poly(FactorialKind kind, const MultiPoly& base, unsigned n);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

} // namespace gonc
