#include "tknot/poly.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace tknot {

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}

XPoly XPoly::constant(const BigInt& c) { return monomial(c, 0, 0); }

XPoly XPoly::monomial(const BigInt& c, int xdeg, int aexp) {
    if (xdeg < 0) throw std::invalid_argument("negative x degree");
    XPoly p;
    p.add_term({xdeg, aexp}, c);
    return p;
}

BigInt XPoly::coeff(int xdeg, int aexp) const {
    auto it = terms_.find({xdeg, aexp});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void XPoly::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

XPoly& XPoly::operator+=(const XPoly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

XPoly operator*(const XPoly& p, const XPoly& q) {
    XPoly r;
    for (const auto& [m1, c1] : p.terms_)
        for (const auto& [m2, c2] : q.terms_)
            r.add_term({m1.xdeg + m2.xdeg, m1.aexp + m2.aexp}, c1 * c2);
    return r;
}

XPoly& XPoly::operator*=(const XPoly& q) { return *this = *this * q; }

XPoly XPoly::operator-() const {
    XPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

XPoly XPoly::pow(unsigned k) const {
    XPoly r = constant(1), base = *this;
    while (k) {
        if (k & 1u) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

XPoly XPoly::shift_a(int k) const {
    XPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.xdeg, m.aexp + k}, c);
    return r;
}

XPoly XPoly::mirror_a() const {
    XPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.xdeg, -m.aexp}, c);
    return r;
}

std::string XPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (c < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        bool unit = m.xdeg == 0 && m.aexp == 0;
        std::string body;
        if (m.xdeg == 1)
            body = "x";
        else if (m.xdeg > 1)
            body = "x^" + std::to_string(m.xdeg);
        if (m.aexp != 0) {
            if (!body.empty()) body += '*';
            body += "a^" + std::to_string(m.aexp);
        }
        if (unit)
            out += mag.str();
        else if (mag == 1)
            out += body;
        else
            out += mag.str() + "*" + body;
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    XPoly run() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_);
        XPoly p = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    XPoly expr() {
        XPoly acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        XPoly t = term();
        acc = neg ? -t : t;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    XPoly term() {
        XPoly p = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                p *= factor();
            } else if (c == '(' || c == 'x' || c == 'a') {
                p *= factor();
            } else {
                break;
            }
        }
        return p;
    }

    long long integer(bool allow_sign) {
        skip();
        std::size_t start = pos_;
        bool neg = false;
        if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
            skip();
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected integer", start);
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (std::numeric_limits<int>::max() - 9) / 10) throw ParseError("exponent too large", start);
            v = v * 10 + (s_[pos_++] - '0');
        }
        return neg ? -v : v;
    }

    XPoly factor() {
        skip();
        std::size_t start = pos_;
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        XPoly base;
        bool is_a = false, is_x = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t b = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            base = XPoly::constant(BigInt(std::string(s_.substr(b, pos_ - b))));
        } else if (c == 'x') {
            ++pos_;
            base = XPoly::x();
            is_x = true;
        } else if (c == 'a') {
            ++pos_;
            base = XPoly::a();
            is_a = true;
        } else if (c == '(') {
            ++pos_;
            base = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
        } else {
            throw ParseError(std::string("unexpected '") + c + "'", start);
        }
        if (!eat('^')) return base;
        std::size_t epos = pos_;
        long long e = integer(true);
        if (is_a) return XPoly::a(static_cast<int>(e));
        if (e < 0) throw ParseError(is_x ? "negative power of x" : "negative power", epos);
        return base.pow(static_cast<unsigned>(e));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

XPoly XPoly::parse(std::string_view text) { return Parser(text).run(); }

XPoly circle_power(unsigned gamma) {
    return (-(XPoly::a(2) + XPoly::a(-2))).pow(gamma);
}

std::strong_ordering canonical_compare(const XPoly& p, const XPoly& q) {
    auto i = p.terms().begin(), j = q.terms().begin();
    for (; i != p.terms().end() && j != q.terms().end(); ++i, ++j) {
        if (auto c = i->first <=> j->first; c != 0) return c;
        if (i->second != j->second) return i->second < j->second ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return p.size() <=> q.size();
}

XPoly canonical_mirror_rep(const XPoly& p) {
    XPoly m = p.mirror_a();
    return canonical_compare(m, p) < 0 ? m : p;
}

}  // namespace tknot
