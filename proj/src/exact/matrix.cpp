#include "psn/exact/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace psn::exact {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
    if (rows.empty()) return {};
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw DimensionMismatch("from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatVector RatMatrix::row(std::size_t i) const {
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVector RatMatrix::col(std::size_t j) const {
    RatVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatVector RatMatrix::apply(const RatVector& x) const {
    if (x.size() != cols_) throw DimensionMismatch("apply: length mismatch");
    RatVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

RatMatrix RatMatrix::multiply(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("multiply: shape mismatch");
    RatMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(i, k) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += (*this)(i, k) * other(k, j);
        }
    return p;
}

std::size_t rank(const RatMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
    for (std::size_t i = 0; i < R; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::size_t rank(const std::vector<RatVector>& rows) {
    if (rows.empty()) return 0;
    return rank(RatMatrix::from_rows(rows));
}

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots) {
    RatMatrix a = m;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = std::move(piv);
    return a;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    std::vector<std::size_t> piv;
    RatMatrix a = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveResult solve_linear_system(const RatMatrix& m, const RatVector& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("solve_linear_system: rhs length mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> piv;
    RatMatrix a = rref(aug, &piv);
    if (!piv.empty() && piv.back() == m.cols()) return {SolveStatus::NoSolution, {}};
    if (piv.size() < m.cols()) return {SolveStatus::Underdetermined, {}};
    RatVector x(m.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = a(i, m.cols());
    return {SolveStatus::Unique, std::move(x)};
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("inverse: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return {};
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    RatMatrix a = rref(aug, &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("inverse: matrix singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
    return inv;
}

} // namespace psn::exact
