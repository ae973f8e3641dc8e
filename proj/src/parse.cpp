#include "goncarov/parse.hpp"

#include <cctype>

#include "goncarov/error.hpp"

namespace gonc {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    MultiPoly parse() {
        MultiPoly out = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return out;
    }

private:
    MultiPoly expression() {
        skip_space();
        MultiPoly acc;
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
        acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_space();
            const char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            MultiPoly rhs = term();
            acc = c == '+' ? acc + rhs : acc - rhs;
        }
    }

    MultiPoly term() {
        MultiPoly acc = power();
        while (true) {
            skip_space();
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= power();
            } else if (c == '/') {
                ++pos_;
                const MultiPoly d = power();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                acc *= Rational(1) / d.constant_term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly power() {
        MultiPoly base = atom();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            const std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (start == pos_) fail("exponent must be a nonnegative integer");
            return pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    MultiPoly atom() {
        skip_space();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expression();
            skip_space();
            if (peek() != ')') fail("missing ')'");
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            return MultiPoly(Rational::parse(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            std::erase(name, '_');
            return MultiPoly(VarId::parse(name));
        }
        fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
        return {};
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::ParseError, why + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

} // namespace

MultiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::vector<std::pair<std::string, std::string>> parse_assignments(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string item = trim(text.substr(start, comma - start));
        if (!item.empty()) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected key=value, got '" + item + "'");
            out.emplace_back(trim(std::string_view(item).substr(0, eq)), trim(std::string_view(item).substr(eq + 1)));
        }
        start = comma + 1;
    }
    return out;
}

} // namespace gonc
