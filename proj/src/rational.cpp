#include "goncarov/rational.hpp"

#include <string>

#include "goncarov/error.hpp"

namespace gonc {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw Error(ErrorCode::ParseError, "zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
        Integer out;
        std::string digits = part;
        if (!digits.empty() && digits.front() == '+') {
            digits.erase(0, 1);
        }
        if (digits.empty() || out.set_str(digits, 10) != 0) {
            throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
        }
        return out;
    };
    if (slash == std::string::npos) {
        return Rational(parse_int(s));
    }
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational pow(const Rational& base, unsigned exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exp);
    return Rational(num, den);
}

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned n, unsigned k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace gonc
