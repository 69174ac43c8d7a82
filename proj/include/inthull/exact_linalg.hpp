#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "inthull/error.hpp"

/**
 * Exact scalars and the integer/rational matrix kernels used throughout the
 * library: Bareiss determinant, reduced row echelon form, Smith normal form
 * with unimodular transforms, and gcd normalization of inequality rows.
 *
 * Nothing here touches floating point.
 */
namespace inthull {

using BigInteger = mpz_class;
using BigRational = mpq_class;
using IntVector = std::vector<BigInteger>;
using RatVector = std::vector<BigRational>;

/** Canonical rational num/den (den != 0); sign moved to the numerator, common factors removed. */
BigRational make_rational(const BigInteger& num, const BigInteger& den);

BigInteger floor_div(const BigInteger& a, const BigInteger& b);
BigInteger ceil_div(const BigInteger& a, const BigInteger& b);
BigInteger floor_of(const BigRational& q);
BigInteger ceil_of(const BigRational& q);

/** Dense row-major matrix over an exact scalar type. */
template <class T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw DimensionError("ragged matrix initializer");
            for (long x : row)
                data_.emplace_back(x);
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a != b)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a != b)
            for (std::size_t i = 0; i < rows_; ++i)
                std::swap((*this)(i, a), (*this)(i, b));
    }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInteger>;
using RatMatrix = Matrix<BigRational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix to_rational(const IntMatrix& m);

/** Exact determinant by Bareiss fraction-free elimination. Throws DimensionError if not square. */
BigInteger determinant(const IntMatrix& m);

struct RrefResult
{
    RatMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/** Reduced row echelon form. Pivots are taken from the lowest row index available. */
RrefResult rref(const RatMatrix& m);

/**
 * D = P * M * Q with P, Q unimodular and D = diag(delta_1, ..., delta_n),
 * delta_i > 0, delta_{i-1} | delta_i. delta = |det M| = prod delta_i.
 */
struct SmithDecomposition
{
    IntMatrix p;
    IntMatrix d;
    IntMatrix q;
    BigInteger delta;

    /** Diagonal of D. */
    IntVector invariant_factors() const;
};

inline const BigInteger kDefaultMaxSnfDelta{"1000000000"};

/**
 * Smith normal form of a square nonsingular integer matrix.
 * Throws SingularMatrixError when det M = 0, ResourceError when |det M| > max_delta,
 * DimensionError when M is not square.
 */
SmithDecomposition smith_normal_form(const IntMatrix& m,
                                     const BigInteger& max_delta = kDefaultMaxSnfDelta);

struct NormalizedRow
{
    IntVector a;
    BigInteger beta;
};

/**
 * Divide a by g = gcd |a_j| and round beta down: a/g . x <= floor(beta/g) keeps
 * every integer solution of a . x <= beta. Throws DegenerateRowError when a = 0.
 */
NormalizedRow gcd_normalize_row(std::span<const BigInteger> a, const BigInteger& beta);

BigInteger gcd_of(std::span<const BigInteger> v);

/** Divide an integer vector by the gcd of its entries (zero vector unchanged). */
void make_primitive(IntVector& v);

BigInteger dot(std::span<const BigInteger> a, std::span<const BigInteger> b);
BigRational dot(std::span<const BigInteger> a, std::span<const BigRational> x);

std::string to_string(const BigRational& q);

}  // namespace inthull
