#ifndef PARSUB_MATRIX_HH
#define PARSUB_MATRIX_HH 1

#include <parsub/big.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parsub
{
    /// Dense row-major matrix of arbitrary-precision integers.
    class BigMatrix
    {
        private:
            std::size_t _rows = 0, _cols = 0;
            std::vector<BigInt> _entries;

        public:
            BigMatrix() = default;

            BigMatrix(std::size_t rows, std::size_t cols);

            static auto identity(std::size_t n) -> BigMatrix;

            auto rows() const -> std::size_t
            {
                return _rows;
            }

            auto cols() const -> std::size_t
            {
                return _cols;
            }

            auto operator() (std::size_t r, std::size_t c) -> BigInt &
            {
                return _entries[r * _cols + c];
            }

            auto operator() (std::size_t r, std::size_t c) const -> const BigInt &
            {
                return _entries[r * _cols + c];
            }

            auto transpose() const -> BigMatrix;

            auto is_symmetric() const -> bool;

            /// First entry where the two differ, if any (shapes must agree).
            auto first_difference(const BigMatrix & other) const -> std::optional<std::pair<std::size_t, std::size_t> >;

            friend auto operator== (const BigMatrix &, const BigMatrix &) -> bool = default;
    };

    auto operator* (const BigMatrix &, const BigMatrix &) -> BigMatrix;

    auto operator* (const BigMatrix &, const std::vector<BigInt> &) -> std::vector<BigInt>;

    /// Fraction-free (Bareiss) elimination with row pivoting; every division
    /// is exact.
    auto det_exact(const BigMatrix &) -> BigInt;

    /// Exact solution of A x = b for square non-singular A; nullopt when A is
    /// singular. Forward elimination is fraction-free, back substitution is
    /// over the rationals.
    auto solve_exact(const BigMatrix & a, const std::vector<BigInt> & b) -> std::optional<std::vector<BigRational> >;
}

#endif
