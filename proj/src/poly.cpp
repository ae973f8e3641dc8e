#include "goncarov/poly.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "goncarov/error.hpp"

namespace gonc {

namespace {

unsigned parse_index(std::string_view digits, std::string_view full) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw Error(ErrorCode::ParseError, "bad variable name '" + std::string(full) + "'");
    }
    return value;
}

} // namespace

VarId VarId::w(unsigned i) {
    if (i < 1) {
        throw std::invalid_argument("w index must be >= 1");
    }
    return VarId(VarFamily::W, i);
}

VarId VarId::y(unsigned i) {
    if (i < 1) {
        throw std::invalid_argument("y index must be >= 1");
    }
    return VarId(VarFamily::Y, i);
}

VarId VarId::z(unsigned i) { return VarId(VarFamily::Z, i); }

VarId VarId::parse(std::string_view name) {
    if (name == "x") return x();
    if (name == "u") return u();
    if (name == "v") return v();
    if (name == "eta") return eta();
    if (name == "a") return a();
    if (name == "b") return b();
    if (name.size() >= 2) {
        const auto idx = name.substr(1);
        switch (name.front()) {
        case 'w': {
            const unsigned i = parse_index(idx, name);
            if (i < 1) break;
            return w(i);
        }
        case 'y': {
            const unsigned i = parse_index(idx, name);
            if (i < 1) break;
            return y(i);
        }
        case 'z': return z(parse_index(idx, name));
        default: break;
        }
    }
    throw Error(ErrorCode::ParseError, "unknown variable '" + std::string(name) + "'");
}

std::string VarId::name() const {
    switch (family_) {
    case VarFamily::X: return "x";
    case VarFamily::U: return "u";
    case VarFamily::V: return "v";
    case VarFamily::Eta: return "eta";
    case VarFamily::A: return "a";
    case VarFamily::B: return "b";
    case VarFamily::W: return "w" + std::to_string(index_);
    case VarFamily::Y: return "y" + std::to_string(index_);
    case VarFamily::Z: return "z" + std::to_string(index_);
    }
    return "?";
}

Monomial::Monomial(VarId v, unsigned exp) {
    if (exp > 0) {
        factors_.emplace_back(v, exp);
    }
}

Monomial::Monomial(std::initializer_list<Factor> factors) {
    for (const auto& f : factors) {
        *this = *this * Monomial(f.first, f.second);
    }
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) {
        d += f.second;
    }
    return d;
}

unsigned Monomial::exponent(VarId v) const {
    for (const auto& f : factors_) {
        if (f.first == v) return f.second;
    }
    return 0;
}

Monomial Monomial::without(VarId v, unsigned* exp_out) const {
    Monomial out;
    unsigned e = 0;
    for (const auto& f : factors_) {
        if (f.first == v) {
            e = f.second;
        } else {
            out.factors_.push_back(f);
        }
    }
    if (exp_out) *exp_out = e;
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            out.factors_.push_back(*i++);
        } else if (j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    return out;
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.total_degree();
    const unsigned db = b.total_degree();
    if (da != db) return da < db;
    // Lex: walk variables in canonical order; the first variable where the
    // exponents differ decides.
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first != fb[i].first) {
            // The monomial carrying the earlier variable has the larger exponent there.
            return fb[i].first < fa[i].first;
        }
        if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
    }
    return fa.size() < fb.size();
}

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

MultiPoly::MultiPoly(const Monomial& m, const Rational& c) {
    if (!c.is_zero()) terms_.emplace(m, c);
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial()); }

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::degree_in(VarId v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.exponent(v));
    }
    return d;
}

unsigned MultiPoly::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

bool MultiPoly::contains(VarId v) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.exponent(v) > 0; });
}

std::vector<VarId> MultiPoly::variables() const {
    std::vector<VarId> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& f : m.factors()) out.push_back(f.first);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MultiPoly MultiPoly::coefficient_of(VarId v, unsigned k) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        unsigned e = 0;
        Monomial rest = m.without(v, &e);
        if (e == k) out.add_term(rest, c);
    }
    return out;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

std::string MultiPoly::pretty() const {
    if (terms_.empty()) return "0";
    // Descending powers of x; within one power, reverse canonical order.
    const VarId x = VarId::x();
    std::vector<const Terms::value_type*> order;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) order.push_back(&*it);
    std::stable_sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        return a->first.exponent(x) > b->first.exponent(x);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* term : order) {
        const auto& [m, c] = *term;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        unsigned x_exp = 0;
        for (const auto& [var, e] : m.factors()) {
            if (var == x) {
                x_exp = e;
                continue;
            }
            factors.push_back(var.name() + (e > 1 ? "^" + std::to_string(e) : ""));
        }
        if (x_exp > 0) factors.push_back("x" + (x_exp > 1 ? "^" + std::to_string(x_exp) : std::string()));
        if (!mag.is_one() || factors.empty()) factors.insert(factors.begin(), mag.str());
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.pretty(); }

MultiPoly pow(const MultiPoly& p, unsigned exp) {
    MultiPoly result(1);
    MultiPoly base = p;
    while (exp > 0) {
        if (exp & 1u) result *= base;
        exp >>= 1u;
        if (exp > 0) base = base * base;
    }
    return result;
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, Arith op) {
    switch (op) {
    case Arith::Add: return a + b;
    case Arith::Sub: return a - b;
    case Arith::Mul: return a * b;
    }
    return {};
}

MultiPoly poly_substitute(const MultiPoly& p, const Assignment& assignment) {
    if (assignment.empty()) return p;
    std::map<std::pair<VarId, unsigned>, MultiPoly> power_cache;
    auto power = [&](VarId v, const MultiPoly& value, unsigned e) -> const MultiPoly& {
        auto key = std::make_pair(v, e);
        auto it = power_cache.find(key);
        if (it == power_cache.end()) {
            it = power_cache.emplace(key, pow(value, e)).first;
        }
        return it->second;
    };

    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest;
        MultiPoly factor(c);
        for (const auto& [var, e] : m.factors()) {
            auto it = assignment.find(var);
            if (it == assignment.end()) {
                rest = rest * Monomial(var, e);
            } else {
                factor *= power(var, it->second, e);
            }
        }
        for (const auto& [fm, fc] : factor.terms()) {
            out.add_term(fm * rest, fc);
        }
    }
    return out;
}

MultiPoly poly_substitute(const MultiPoly& p, VarId v, const MultiPoly& value) {
    return poly_substitute(p, Assignment{{v, value}});
}

MultiPoly poly_derivative(const MultiPoly& p, VarId v) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        unsigned e = 0;
        Monomial rest = m.without(v, &e);
        if (e == 0) continue;
        out.add_term(rest * Monomial(v, e - 1), c * Rational(static_cast<long>(e)));
    }
    return out;
}

MultiPoly factorial_poly(FactorialKind kind, const MultiPoly& base, unsigned n) {
    MultiPoly out(1);
    for (unsigned k = 0; k < n; ++k) {
        const long shift = static_cast<long>(k);
        out *= base + MultiPoly(kind == FactorialKind::Falling ? -shift : shift);
    }
    return out;
}

} // namespace gonc
