#include "lgcy/parse.hpp"

#include <cctype>
#include <map>

namespace lgcy {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : s_(text), vars_(vars) {
        for (std::size_t i = 0; i < vars.size(); ++i) index_[vars[i]] = i;
    }

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Polynomial expr() {
        int sign = 1;
        if (accept('-')) sign = -1;
        else accept('+');
        Polynomial p = term() * Rational(sign);
        for (;;) {
            if (accept('+')) p += term();
            else if (accept('-')) p -= term();
            else break;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (accept('*')) p = p * factor();
        return p;
    }

    Polynomial factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return coefficient();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable_factor();
        fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial coefficient() {
        std::size_t at = pos_;
        std::string num = integer_digits(true);
        std::string den;
        if (accept('/')) {
            den = integer_digits(false);
            if (den == "0") { pos_ = at; fail("zero denominator"); }
        }
        Rational c = Rational::from_string(den.empty() ? num : num + "/" + den);
        return Polynomial::constant(vars_.size(), c);
    }

    std::string integer_digits(bool allow_sign) {
        skip_ws();
        std::string out;
        if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            if (s_[pos_] == '-') out += '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected digits");
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            out += s_[pos_++];
        return out;
    }

    Polynomial variable_factor() {
        std::size_t at = pos_;
        std::string name;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            name += s_[pos_++];
        auto it = index_.find(name);
        if (it == index_.end()) {
            pos_ = at;
            fail("unknown identifier '" + name + "'");
        }
        std::uint64_t e = 1;
        if (accept('^')) {
            std::size_t eat = pos_;
            std::string digits = integer_digits(false);
            e = 0;
            for (char d : digits) {
                e = e * 10 + static_cast<std::uint64_t>(d - '0');
                if (e > kExponentLimit) { pos_ = eat; fail("exponent overflow"); }
            }
        }
        Monomial m(vars_.size());
        m[it->second] = static_cast<std::uint32_t>(e);
        return Polynomial::monomial(m);
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    std::map<std::string, std::size_t> index_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
    return Parser(text, variables).run();
}

}  // namespace lgcy
