#include "psn/exact/polynomial.hpp"

#include <stdexcept>

namespace psn::exact {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
}

Polynomial Polynomial::monomial(const Rational& c, unsigned degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& a) { return Polynomial({-a, 1}); }

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
    Polynomial p(Rational(1));
    for (const auto& a : roots) p = p * linear(a);
    return p;
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return c_.back();
}

Rational Polynomial::operator()(const Rational& t) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
}

int Polynomial::sign_at(const Rational& t) const { return sgn((*this)(t)); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x = -x;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r(Rational(1)), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    std::vector<Rational> v(c_);
    Rational inv = 1 / c_.back();
    for (auto& x : v) x *= inv;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted(const Rational& a) const {
    Polynomial r, base = Polynomial({a, 1});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * base + Polynomial(*it);
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(c_);
    if (rem.size() < d.c_.size()) return {Polynomial(), *this};
    std::vector<Rational> q(rem.size() - d.c_.size() + 1);
    const Rational& lc = d.c_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational f = rem[k + d.c_.size() - 1] / lc;
        q[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (!s.empty()) {
            s += a < 0 ? " - " : " + ";
            a = abs(a);
        } else if (a < 0 && i > 0 && a == -1) {
            s += "-";
            a = 1;
        }
        if (i == 0 || a != 1) s += exact::to_string(a);
        if (i > 0) s += (i == 1 ? "t" : "t^" + std::to_string(i));
    }
    return s;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
    std::vector<Polynomial> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    Polynomial d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        Polynomial r = -(seq[seq.size() - 2].divmod(seq.back()).second);
        if (r.is_zero()) break;
        seq.push_back(std::move(r));
    }
    return seq;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace

int count_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
    auto seq = sturm_sequence(p);
    std::vector<int> at_neg, at_pos;
    for (const auto& q : seq) {
        int lc = sgn(q.leading());
        at_pos.push_back(lc);
        at_neg.push_back(q.degree() % 2 == 0 ? lc : -lc);
    }
    return sign_changes(at_neg) - sign_changes(at_pos);
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<Polynomial> out;
    if (p.degree() == 0) return out;
    Polynomial f = p.monic();
    Polynomial a = gcd(f, f.derivative());
    Polynomial b = f.divmod(a).first;
    Polynomial c = f.derivative().divmod(a).first;
    Polynomial d = c - b.derivative();
    while (b.degree() > 0) {
        Polynomial g = gcd(b, d);
        out.push_back(g);
        b = b.divmod(g).first;
        c = d.divmod(g).first;
        d = c - b.derivative();
    }
    return out;
}

Positivity poly_positivity(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("poly_positivity: zero polynomial");
    if (p.degree() == 0) return p.leading() > 0 ? Positivity::PositiveEverywhere : Positivity::ChangesSign;
    // The sign only changes at roots of odd multiplicity.
    auto parts = squarefree_decomposition(p);
    Polynomial odd(Rational(1));
    bool has_even_root = false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if ((i + 1) % 2 == 1) odd = odd * parts[i];
        else if (parts[i].degree() > 0 && count_real_roots(parts[i]) > 0) has_even_root = true;
    }
    if (odd.degree() > 0 && count_real_roots(odd) > 0) return Positivity::ChangesSign;
    // No sign change: the sign everywhere equals the sign of the leading coefficient.
    if (p.leading() < 0) return Positivity::ChangesSign;
    return has_even_root ? Positivity::NonnegativeWithZeros : Positivity::PositiveEverywhere;
}

std::string to_string(Positivity v) {
    switch (v) {
    case Positivity::PositiveEverywhere: return "POSITIVE_EVERYWHERE";
    case Positivity::NonnegativeWithZeros: return "NONNEGATIVE_WITH_ZEROS";
    case Positivity::ChangesSign: return "CHANGES_SIGN";
    }
    return "?";
}

} // namespace psn::exact
