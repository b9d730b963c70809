#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tknot {

using BigInt = boost::multiprecision::cpp_int;

struct Monomial {
    int xdeg = 0;
    int aexp = 0;
    auto operator<=>(const Monomial&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Element of Z[a, a^-1][x]. Terms are kept sorted by (xdeg, aexp) and
// never store a zero coefficient.
class XPoly {
public:
    using Terms = std::map<Monomial, BigInt>;

    XPoly() = default;
    static XPoly constant(const BigInt& c);
    static XPoly monomial(const BigInt& c, int xdeg, int aexp);
    static XPoly x() { return monomial(1, 1, 0); }
    static XPoly a(int k = 1) { return monomial(1, 0, k); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    BigInt coeff(int xdeg, int aexp) const;

    XPoly& operator+=(const XPoly& q);
    XPoly& operator-=(const XPoly& q);
    XPoly& operator*=(const XPoly& q);
    friend XPoly operator+(XPoly p, const XPoly& q) { return p += q; }
    friend XPoly operator-(XPoly p, const XPoly& q) { return p -= q; }
    friend XPoly operator*(const XPoly& p, const XPoly& q);
    XPoly operator-() const;
    friend bool operator==(const XPoly&, const XPoly&) = default;

    XPoly pow(unsigned k) const;
    // multiply by a^k
    XPoly shift_a(int k) const;
    XPoly mirror_a() const;

    // canonical text: descending xdeg, then descending aexp
    std::string str() const;
    static XPoly parse(std::string_view text);

private:
    void add_term(const Monomial& m, const BigInt& c);
    Terms terms_;
};

// (-a^2 - a^-2)^gamma
XPoly circle_power(unsigned gamma);

// Lexicographic order on ascending (xdeg, aexp, coeff) term sequences.
std::strong_ordering canonical_compare(const XPoly& p, const XPoly& q);

// min of p and mirror_a(p) under canonical_compare
XPoly canonical_mirror_rep(const XPoly& p);

}  // namespace tknot
