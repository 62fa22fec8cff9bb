#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricfs {

using Int = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Raised when a mathematical precondition of an operation does not hold.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Element of N or M in fixed coordinates. Arbitrary precision entries.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::size_t n) : coords_(n) {}
    explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
    LatticeVector(std::initializer_list<long> coords);

    std::size_t size() const { return coords_.size(); }
    const Int& operator[](std::size_t i) const { return coords_[i]; }
    Int& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Int>& coords() const { return coords_; }
    bool is_zero() const;

    LatticeVector& operator+=(const LatticeVector& other);
    LatticeVector& operator-=(const LatticeVector& other);
    LatticeVector& operator*=(const Int& k);

    friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }
    // Lexicographic.
    friend bool operator<(const LatticeVector& a, const LatticeVector& b) { return a.coords_ < b.coords_; }

private:
    std::vector<Int> coords_;
};

LatticeVector operator+(LatticeVector a, const LatticeVector& b);
LatticeVector operator-(LatticeVector a, const LatticeVector& b);
LatticeVector operator-(LatticeVector a);
LatticeVector operator*(const Int& k, LatticeVector a);

Int dot(const LatticeVector& a, const LatticeVector& b);
Int content(const LatticeVector& v);
std::string to_string(const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// v divided by the gcd of its entries. Throws on the zero vector.
LatticeVector primitive(const LatticeVector& v);

/// Dense row-major integer matrix.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<LatticeVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    LatticeVector row(std::size_t i) const;
    LatticeVector column(std::size_t j) const;
    IntegerMatrix transpose() const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
    // col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
    void negate_row(std::size_t i);

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
LatticeVector operator*(const IntegerMatrix& a, const LatticeVector& x);
std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntegerMatrix& a);

/// Rows m_i with <m_i, n_j> = delta_ij, where the n_j are the rows of
/// `generators`. Requires a square matrix with determinant +-1.
IntegerMatrix dual_basis(const IntegerMatrix& generators);

/// Inverse over Q, or nullopt when singular. Returned as rows.
std::optional<std::vector<RationalVector>> rational_inverse(const IntegerMatrix& a);

/// Unique solution of the square system a * x = b over Q, or nullopt.
std::optional<RationalVector> solve_rational(const IntegerMatrix& a, const RationalVector& b);

struct SmithForm {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;
    std::size_t rank = 0;

    /// Nonzero diagonal entries d_1 | d_2 | ... .
    std::vector<Int> invariant_factors() const;
};

/// U * A * V = D with U, V unimodular and D diagonal with a divisibility
/// chain. Pivot: smallest absolute value, ties broken by row then column.
SmithForm smith_normal_form(const IntegerMatrix& a);

/// Some integer x with a * x = b, or nullopt when none exists.
std::optional<LatticeVector> solve_integer(const IntegerMatrix& a, const LatticeVector& b);

}  // namespace toricfs
