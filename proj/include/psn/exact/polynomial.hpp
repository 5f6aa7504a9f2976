#pragma once

#include "psn/exact/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace psn::exact {

/// Univariate polynomial over Q; coefficient index = degree, no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}
    Polynomial(const Rational& constant);
    static Polynomial monomial(const Rational& c, unsigned degree);
    /// Π (t − root).
    static Polynomial from_roots(const std::vector<Rational>& roots);
    /// t − a.
    static Polynomial linear(const Rational& a);

    bool is_zero() const { return c_.empty(); }
    /// −1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    /// Coefficient of t^i (zero beyond the degree).
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;
    Rational operator()(const Rational& t) const;
    int sign_at(const Rational& t) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial pow(unsigned e) const;
    Polynomial derivative() const;
    Polynomial monic() const;
    /// p(t + a); its coefficients are those of p in powers of (t − a).
    Polynomial shifted(const Rational& a) const;
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

    bool operator==(const Polynomial&) const = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0,0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Sturm sequence p, p', −rem(p, p'), ...
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of distinct real roots of a nonzero polynomial.
int count_real_roots(const Polynomial& p);

/// Yun's square-free decomposition: p = lc · Π f_i^i with f_i square-free, pairwise coprime.
/// Entry i-1 holds f_i (possibly constant 1).
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

enum class Positivity { PositiveEverywhere, NonnegativeWithZeros, ChangesSign };

/// Throws std::invalid_argument on the zero polynomial. Any polynomial that is
/// negative somewhere is reported as ChangesSign.
Positivity poly_positivity(const Polynomial& p);

std::string to_string(Positivity v);

} // namespace psn::exact
