#pragma once

#include "psn/exact/rational.hpp"

#include <cstddef>
#include <vector>

namespace psn::exact {

/// Dense row-major rational matrix.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    /// All rows must have the same length; an empty list gives a 0x0 matrix.
    static RatMatrix from_rows(const std::vector<RatVector>& rows);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatVector col(std::size_t j) const;
    RatMatrix transpose() const;
    RatVector apply(const RatVector& x) const;
    RatMatrix multiply(const RatMatrix& other) const;

    bool operator==(const RatMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact rank via fraction-free (Bareiss) elimination on a denominator-cleared copy.
std::size_t rank(const RatMatrix& m);
std::size_t rank(const std::vector<RatVector>& rows);

/// Reduced row echelon form; pivot columns are returned through `pivots`.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of {x : M x = 0}, one vector per free column.
std::vector<RatVector> nullspace(const RatMatrix& m);

enum class SolveStatus { Unique, NoSolution, Underdetermined };

struct SolveResult {
    SolveStatus status;
    RatVector solution; // filled only when status == Unique
};

SolveResult solve_linear_system(const RatMatrix& m, const RatVector& b);

/// Throws std::domain_error if m is not square and invertible.
RatMatrix inverse(const RatMatrix& m);

} // namespace psn::exact
