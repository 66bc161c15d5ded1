#include "omf/polyparse.hpp"

#include <cctype>

namespace omf {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    IntPoly run() {
        skip();
        IntPoly r;
        if (peek() == '[') {
            r = list();
        } else {
            r = expr();
        }
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw om_error(errc::parse_error, msg + " at position " + std::to_string(pos_));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Int integer() {
        skip();
        std::string digits;
        if (peek() == '-') digits.push_back(get());
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
        return to_int(digits);
    }

    IntPoly list() {
        if (!eat('[')) fail("expected '['");
        std::vector<Int> cs;
        skip();
        if (!eat(']')) {
            cs.push_back(integer());
            while (eat(',')) cs.push_back(integer());
            if (!eat(']')) fail("expected ']' or ','");
        }
        return IntPoly(std::move(cs));
    }

    IntPoly expr() {
        skip();
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        }
        IntPoly r = term();
        if (neg) r = -r;
        while (true) {
            skip();
            char c = peek();
            if (c == '+') {
                ++pos_;
                r = r + term();
            } else if (c == '-') {
                ++pos_;
                r = r - term();
            } else {
                break;
            }
        }
        return r;
    }

    IntPoly term() {
        IntPoly r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }

    IntPoly factor() {
        skip();
        char c = peek();
        if (c == '(') {
            ++pos_;
            IntPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 'x') {
            ++pos_;
            long long e = 1;
            if (eat('^')) {
                skip();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
                Int ev = integer();
                require(ev >= 0 && ev.fits_slong_p() && to_ll(ev) <= 4096, errc::parse_error,
                        "exponent out of range");
                e = to_ll(ev);
            }
            return IntPoly::monomial(to_int(1), e);
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw om_error(errc::not_univariate,
                           std::string("unexpected variable '") + c + "' (only x is allowed)");
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return IntPoly::constant(integer());
        fail("expected a factor");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

IntPoly parse_poly(const std::string& src) { return Parser(src).run(); }

std::string render_poly(const IntPoly& P) { return P.str(); }

} // namespace omf
