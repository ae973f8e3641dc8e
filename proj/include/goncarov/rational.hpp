#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gonc {

using Integer = mpz_class;

// Exact rational in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(v) {}
    Rational(const Integer& v) : v_(v) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q".
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

Rational pow(const Rational& base, unsigned exp);
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

} // namespace gonc
