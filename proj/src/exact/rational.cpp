#include "psn/exact/rational.hpp"

namespace psn::exact {

Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("ratio: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return std::invalid_argument("not a rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto check_int = [&](const std::string& part) {
        std::size_t i = (part.size() > 0 && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(Integer(s[0] == '+' ? s.substr(1) : s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Integer d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw bad();
    Rational q(Integer(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector add(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("add: length mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVector sub(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("sub: length mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVector scale(const Rational& s, const RatVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

bool is_zero(const RatVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

RatVector primitive_integer(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    for (const auto& x : v) {
        Integer a = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    if (g == 0) return v;
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i].get_num() * (l / v[i].get_den()) / g);
    return r;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational r = 1, b = base;
    while (exponent) {
        if (exponent & 1u) r *= b;
        b *= b;
        exponent >>= 1;
    }
    return r;
}

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::string to_string(const RatVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

} // namespace psn::exact
