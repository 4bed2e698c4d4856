#include "disckit/rational.hpp"

#include <cctype>

#include "disckit/core.hpp"

namespace disckit {

Int rat_floor(const Rational& r) {
    Int q = numer(r) / denom(r);  // truncates toward zero
    if (r < 0 && q * denom(r) != numer(r)) --q;
    return q;
}

Int int_pow(const Int& base, unsigned exp) {
    Int acc = 1;
    Int b = base;
    while (exp) {
        if (exp & 1u) acc *= b;
        b *= b;
        exp >>= 1u;
    }
    return acc;
}

std::string rat_str(const Rational& r) {
    if (denom(r) == 1) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

// Unsigned integer or decimal literal -> rational.
Rational parse_unsigned(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        if (!all_digits(s)) throw InputError("not a number: '" + s + "'");
        return Rational(Int(s));
    }
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw InputError("not a number: '" + s + "'");
    if (!whole.empty() && !all_digits(whole)) throw InputError("not a number: '" + s + "'");
    if (!frac.empty() && !all_digits(frac)) throw InputError("not a number: '" + s + "'");
    Rational out = whole.empty() ? Rational(0) : Rational(Int(whole));
    if (!frac.empty()) out += Rational(Int(frac), int_pow(10, static_cast<unsigned>(frac.size())));
    return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::size_t lo = 0, hi = text.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
    std::string s = text.substr(lo, hi - lo);
    if (s.empty()) throw InputError("empty rational literal");

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    Rational out;
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        out = parse_unsigned(s);
    } else {
        std::string ns = s.substr(0, slash);
        std::string ds = s.substr(slash + 1);
        if (!all_digits(ns) || !all_digits(ds)) throw InputError("not a fraction: '" + text + "'");
        Int d(ds);
        if (d == 0) throw InputError("zero denominator: '" + text + "'");
        out = Rational(Int(ns), d);
    }
    return negative ? Rational(-out) : out;
}

}  // namespace disckit
