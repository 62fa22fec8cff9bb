#include "toricfs/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace toricfs {

LatticeVector::LatticeVector(std::initializer_list<long> coords)
{
    coords_.reserve(coords.size());
    for (long c : coords)
        coords_.emplace_back(c);
}

bool LatticeVector::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c == 0; });
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other)
{
    if (other.size() != size())
        throw Error("lattice vector dimension mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        coords_[i] += other.coords_[i];
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other)
{
    if (other.size() != size())
        throw Error("lattice vector dimension mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        coords_[i] -= other.coords_[i];
    return *this;
}

LatticeVector& LatticeVector::operator*=(const Int& k)
{
    for (auto& c : coords_)
        c *= k;
    return *this;
}

LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
LatticeVector operator-(LatticeVector a) { return a *= Int(-1); }
LatticeVector operator*(const Int& k, LatticeVector a) { return a *= k; }

Int dot(const LatticeVector& a, const LatticeVector& b)
{
    if (a.size() != b.size())
        throw Error("pairing of vectors with different dimensions");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Int content(const LatticeVector& v)
{
    Int g = 0;
    for (const auto& c : v.coords())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

std::string to_string(const LatticeVector& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v)
{
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os << ')';
}

LatticeVector primitive(const LatticeVector& v)
{
    Int g = content(v);
    if (g == 0)
        throw Error("zero vector has no primitive part");
    LatticeVector r = v;
    for (std::size_t i = 0; i < r.size(); ++i)
        mpz_divexact(r[i].get_mpz_t(), r[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error("ragged matrix literal");
        for (long x : r)
            entries_.emplace_back(x);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<LatticeVector>& rows, std::size_t cols)
{
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error("row length does not match column count");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

LatticeVector IntegerMatrix::row(std::size_t i) const
{
    LatticeVector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        r[j] = (*this)(i, j);
    return r;
}

LatticeVector IntegerMatrix::column(std::size_t j) const
{
    LatticeVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

IntegerMatrix IntegerMatrix::transpose() const
{
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool IntegerMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& c) { return c == 0; });
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(dst, j) += k * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k)
{
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, dst) += k * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) = -(*this)(i, j);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error("matrix product dimension mismatch");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

LatticeVector operator*(const IntegerMatrix& a, const LatticeVector& x)
{
    if (a.cols() != x.size())
        throw Error("matrix-vector dimension mismatch");
    LatticeVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[i] += a(i, j) * x[j];
    return y;
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m)
{
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i)
        os << (i ? "," : "") << m.row(i);
    return os << ']';
}

Int determinant(const IntegerMatrix& a)
{
    if (a.rows() != a.cols())
        throw Error("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntegerMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::optional<std::vector<RationalVector>> rational_inverse(const IntegerMatrix& a)
{
    if (a.rows() != a.cols())
        throw Error("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<RationalVector> m(n, RationalVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a(i, j);
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(m[p], m[c]);
        Rational inv = 1 / m[c][c];
        for (auto& x : m[c])
            x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0)
                continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    std::vector<RationalVector> inv(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = m[i][n + j];
    return inv;
}

std::optional<RationalVector> solve_rational(const IntegerMatrix& a, const RationalVector& b)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw Error("solve_rational expects a square system");
    std::vector<RationalVector> m(n, RationalVector(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a(i, j);
        m[i][n] = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(m[p], m[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0)
                continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j <= n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = m[i][n] / m[i][i];
    return x;
}

IntegerMatrix dual_basis(const IntegerMatrix& generators)
{
    if (generators.rows() != generators.cols())
        throw Error("dual basis needs a square generator matrix");
    Int det = determinant(generators);
    if (abs(det) != 1)
        throw Error("cone not smooth; dual basis not integral");
    auto inv = rational_inverse(generators);
    const std::size_t n = generators.rows();
    // m_i is column i of the inverse.
    IntegerMatrix dual(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            dual(i, k) = (*inv)[k][i].get_num();
    return dual;
}

std::vector<Int> SmithForm::invariant_factors() const
{
    std::vector<Int> f;
    for (std::size_t i = 0; i < rank; ++i)
        f.push_back(D(i, i));
    return f;
}

namespace {

Int floor_div(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithForm s{IntegerMatrix::identity(m), a, IntegerMatrix::identity(n), 0};
    IntegerMatrix& d = s.D;

    std::size_t t = 0;
    while (t < std::min(m, n)) {
        std::size_t pi = m, pj = n;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (d(i, j) == 0)
                    continue;
                Int v = abs(d(i, j));
                if (pi == m || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m)
            break;

        d.swap_rows(t, pi);
        s.U.swap_rows(t, pi);
        d.swap_cols(t, pj);
        s.V.swap_cols(t, pj);

        bool residue = false;
        for (std::size_t i = t + 1; i < m; ++i) {
            if (d(i, t) == 0)
                continue;
            Int q = -floor_div(d(i, t), d(t, t));
            d.add_row_multiple(i, t, q);
            s.U.add_row_multiple(i, t, q);
            residue = residue || d(i, t) != 0;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (d(t, j) == 0)
                continue;
            Int q = -floor_div(d(t, j), d(t, t));
            d.add_col_multiple(j, t, q);
            s.V.add_col_multiple(j, t, q);
            residue = residue || d(t, j) != 0;
        }
        // Remainders are strictly smaller than the pivot; re-pivot.
        if (residue)
            continue;

        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i)
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(i, j) % d(t, t) != 0) {
                    d.add_row_multiple(t, i, 1);
                    s.U.add_row_multiple(t, i, 1);
                    fixed = true;
                    break;
                }
            }
        if (fixed)
            continue;

        if (d(t, t) < 0) {
            d.negate_row(t);
            s.U.negate_row(t);
        }
        ++t;
    }
    s.rank = t;
    return s;
}

std::optional<LatticeVector> solve_integer(const IntegerMatrix& a, const LatticeVector& b)
{
    if (b.size() != a.rows())
        throw Error("right-hand side length does not match row count");
    SmithForm s = smith_normal_form(a);
    LatticeVector c = s.U * b;
    LatticeVector y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            if (c[i] % s.D(i, i) != 0)
                return std::nullopt;
            y[i] = c[i] / s.D(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V * y;
}

}  // namespace toricfs
