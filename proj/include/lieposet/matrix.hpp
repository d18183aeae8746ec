#pragma once

#include <cstdint>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lieposet/error.hpp"
#include "lieposet/rational.hpp"

namespace lieposet {

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational exact_divide(const Rational& a, const Rational& b) { return a / b; }

using RationalMatrix = Matrix<Rational>;
using RationalVector = std::vector<Rational>;

/// Fraction-free (Bareiss) row echelon reduction over an integral domain.
/// Divisions are exact; zero columns are skipped so the routine also yields
/// the rank of singular and rectangular matrices. Returns the rank and, for
/// square input, the determinant through `det` (zero when singular).
/// T needs +, -, *, exact /, == and is_zero(T).
template <typename T>
std::size_t bareiss_reduce(Matrix<T>& m, T* det = nullptr) {
    const std::size_t rows = m.rows(), cols = m.cols();
    T prev_pivot(1);
    std::size_t rank = 0;
    bool negate = false;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (!is_zero(m(r, col))) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != rank) {
            m.swap_rows(pivot, rank);
            negate = !negate;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                T value = m(rank, col) * m(r, c) - m(r, col) * m(rank, c);
                m(r, c) = exact_divide(value, prev_pivot);
            }
            m(r, col) = T(0);
        }
        prev_pivot = m(rank, col);
        ++rank;
    }
    if (det) {
        if (rows == cols && rank == rows && rows > 0)
            *det = negate ? T(0) - m(rows - 1, cols - 1) : m(rows - 1, cols - 1);
        else if (rows == cols && rows == 0)
            *det = T(1);
        else
            *det = T(0);
    }
    return rank;
}

std::size_t rank(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

/// Rank of m mod `prime` after clearing each row's denominators. Never exceeds
/// the rational rank. Throws OutOfRange when `prime` divides a row's
/// common denominator.
std::size_t modular_rank(const RationalMatrix& m, std::uint64_t prime);

/// Exact nonsingularity: modular ranks first, rational elimination only when
/// every prime tried loses rank.
bool is_nonsingular(const RationalMatrix& m);

/// Basis of the right null space {v : m v = 0}, from the reduced row echelon
/// form; one vector per free column with a 1 in that column.
std::vector<RationalVector> kernel(const RationalMatrix& m);

/// Pfaffian of a skew-symmetric matrix of even size, by skew-symmetric
/// Gaussian elimination. Throws ShapeMismatch otherwise.
Rational pfaffian(const RationalMatrix& m);

bool is_skew_symmetric(const RationalMatrix& m);

RationalVector multiply(const RationalMatrix& m, const RationalVector& v);

/// Rank of a sparse matrix given as rows of (column, value) pairs with
/// distinct columns. Exact elimination over the rationals.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
std::size_t sparse_rank(std::vector<SparseRow> rows);

/// Row-major text dump: one row per line, entries "p/q" separated by spaces.
std::string to_text(const RationalMatrix& m);
RationalMatrix parse_matrix_text(const std::string& text);

}  // namespace lieposet
