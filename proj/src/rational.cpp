#include "balcov/rational.hpp"

#include <cctype>

#include "balcov/types.hpp"

namespace balcov {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Int pow10(size_t e) {
    Int p = 1;
    for (size_t i = 0; i < e; ++i) p *= 10;
    return p;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    if (s.empty()) throw Error(ErrorKind::parse, "empty rational literal '" + text + "'");

    Rational value;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q))
            throw Error(ErrorKind::parse, "malformed rational '" + text + "'");
        Int denom(q);
        if (denom == 0) throw Error(ErrorKind::parse, "zero denominator in '" + text + "'");
        value = Rational(Int(p), denom);
    } else if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || !all_digits(fp))
            throw Error(ErrorKind::parse, "malformed decimal '" + text + "'");
        Int scale = pow10(fp.size());
        value = Rational(Int(ip) * scale + Int(fp), scale);
    } else {
        if (!all_digits(s)) throw Error(ErrorKind::parse, "malformed rational '" + text + "'");
        value = Rational(Int(s));
    }
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
    Int n = num(value), d = den(value);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Int int_lcm(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

}  // namespace balcov
