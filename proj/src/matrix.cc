#include <parsub/matrix.hh>

#include <stdexcept>

using namespace parsub;

using std::size_t;
using std::vector;

BigMatrix::BigMatrix(size_t rows, size_t cols) :
    _rows(rows),
    _cols(cols),
    _entries(rows * cols, 0)
{
}

auto BigMatrix::identity(size_t n) -> BigMatrix
{
    BigMatrix result(n, n);
    for (size_t i = 0 ; i < n ; ++i)
        result(i, i) = 1;
    return result;
}

auto BigMatrix::transpose() const -> BigMatrix
{
    BigMatrix result(_cols, _rows);
    for (size_t r = 0 ; r < _rows ; ++r)
        for (size_t c = 0 ; c < _cols ; ++c)
            result(c, r) = (*this)(r, c);
    return result;
}

auto BigMatrix::is_symmetric() const -> bool
{
    if (_rows != _cols)
        return false;
    for (size_t r = 0 ; r < _rows ; ++r)
        for (size_t c = r + 1 ; c < _cols ; ++c)
            if ((*this)(r, c) != (*this)(c, r))
                return false;
    return true;
}

auto BigMatrix::first_difference(const BigMatrix & other) const -> std::optional<std::pair<size_t, size_t> >
{
    if (_rows != other._rows || _cols != other._cols)
        throw std::invalid_argument("matrix shapes differ");
    for (size_t r = 0 ; r < _rows ; ++r)
        for (size_t c = 0 ; c < _cols ; ++c)
            if ((*this)(r, c) != other(r, c))
                return std::pair{ r, c };
    return std::nullopt;
}

auto parsub::operator* (const BigMatrix & a, const BigMatrix & b) -> BigMatrix
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix shapes do not compose");
    BigMatrix result(a.rows(), b.cols());
    for (size_t r = 0 ; r < a.rows() ; ++r)
        for (size_t k = 0 ; k < a.cols() ; ++k) {
            if (a(r, k) == 0)
                continue;
            for (size_t c = 0 ; c < b.cols() ; ++c)
                result(r, c) += a(r, k) * b(k, c);
        }
    return result;
}

auto parsub::operator* (const BigMatrix & a, const vector<BigInt> & x) -> vector<BigInt>
{
    if (a.cols() != x.size())
        throw std::invalid_argument("vector length does not match matrix");
    vector<BigInt> result(a.rows(), 0);
    for (size_t r = 0 ; r < a.rows() ; ++r)
        for (size_t c = 0 ; c < a.cols() ; ++c)
            result[r] += a(r, c) * x[c];
    return result;
}

namespace
{
    /**
     * Bareiss elimination on the first `pivots` columns of m, in place. After
     * step k, m(i, j) for i, j > k is the (k+1)-th leading minor bordered by
     * row i and column j, so the division by the previous pivot is exact.
     * Returns the sign of the row permutation, or 0 if a zero column stops it.
     */
    auto bareiss(BigMatrix & m, size_t pivots) -> int
    {
        int sign = 1;
        BigInt previous = 1;
        for (size_t k = 0 ; k < pivots ; ++k) {
            size_t p = k;
            while (p < m.rows() && m(p, k) == 0)
                ++p;
            if (p == m.rows())
                return 0;
            if (p != k) {
                for (size_t c = 0 ; c < m.cols() ; ++c)
                    std::swap(m(p, c), m(k, c));
                sign = -sign;
            }
            for (size_t i = k + 1 ; i < m.rows() ; ++i) {
                for (size_t j = k + 1 ; j < m.cols() ; ++j)
                    m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
                m(i, k) = 0;
            }
            previous = m(k, k);
        }
        return sign;
    }
}

auto parsub::det_exact(const BigMatrix & a) -> BigInt
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (a.rows() == 0)
        return 1;
    auto m = a;
    int sign = bareiss(m, m.rows());
    if (sign == 0)
        return 0;
    return sign * m(m.rows() - 1, m.cols() - 1);
}

auto parsub::solve_exact(const BigMatrix & a, const vector<BigInt> & b) -> std::optional<vector<BigRational> >
{
    auto n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw std::invalid_argument("solve_exact needs a square system");

    BigMatrix augmented(n, n + 1);
    for (size_t r = 0 ; r < n ; ++r) {
        for (size_t c = 0 ; c < n ; ++c)
            augmented(r, c) = a(r, c);
        augmented(r, n) = b[r];
    }

    if (bareiss(augmented, n) == 0)
        return std::nullopt;

    vector<BigRational> x(n);
    for (size_t i = n ; i-- > 0 ; ) {
        BigRational acc = augmented(i, n);
        for (size_t j = i + 1 ; j < n ; ++j)
            acc -= BigRational(augmented(i, j)) * x[j];
        x[i] = acc / BigRational(augmented(i, i));
    }
    return x;
}
