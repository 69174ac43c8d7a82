#include "inthull/exact_linalg.hpp"

#include <algorithm>
#include <optional>

namespace inthull {

BigRational make_rational(const BigInteger& num, const BigInteger& den)
{
    if (den == 0)
        throw Error("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigInteger floor_div(const BigInteger& a, const BigInteger& b)
{
    BigInteger r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInteger ceil_div(const BigInteger& a, const BigInteger& b)
{
    BigInteger r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInteger floor_of(const BigRational& q)
{
    return floor_div(q.get_num(), q.get_den());
}

BigInteger ceil_of(const BigRational& q)
{
    return ceil_div(q.get_num(), q.get_den());
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionError("matrix product: inner dimensions differ");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j);
    return r;
}

BigInteger determinant(const IntMatrix& m)
{
    if (!m.square())
        throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    int sign = 1;
    BigInteger prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && a(swap_with, k) == 0)
                ++swap_with;
            if (swap_with == n)
                return 0;
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInteger t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

RrefResult rref(const RatMatrix& m)
{
    RrefResult out{m, {}, 0};
    RatMatrix& r = out.reduced;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < r.rows() && r(piv, col) == 0)
            ++piv;
        if (piv == r.rows())
            continue;
        r.swap_rows(lead, piv);
        const BigRational inv = 1 / r(lead, col);
        for (std::size_t j = col; j < r.cols(); ++j)
            r(lead, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r(i, col) == 0)
                continue;
            const BigRational f = r(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                r(i, j) -= f * r(lead, j);
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.rank = out.pivot_cols.size();
    return out;
}

IntVector SmithDecomposition::invariant_factors() const
{
    IntVector f(d.rows());
    for (std::size_t i = 0; i < d.rows(); ++i)
        f[i] = d(i, i);
    return f;
}

namespace {

// Elementary operations on the working matrix, mirrored into P (rows) and Q (columns).
struct SnfState
{
    IntMatrix a, p, q;

    void add_row(std::size_t dst, std::size_t src, const BigInteger& f)
    {
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(dst, j) += f * a(src, j);
        for (std::size_t j = 0; j < p.cols(); ++j)
            p(dst, j) += f * p(src, j);
    }
    void add_col(std::size_t dst, std::size_t src, const BigInteger& f)
    {
        for (std::size_t i = 0; i < a.rows(); ++i)
            a(i, dst) += f * a(i, src);
        for (std::size_t i = 0; i < q.rows(); ++i)
            q(i, dst) += f * q(i, src);
    }
    void swap_rows(std::size_t i, std::size_t j)
    {
        a.swap_rows(i, j);
        p.swap_rows(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j)
    {
        a.swap_cols(i, j);
        q.swap_cols(i, j);
    }
    void negate_row(std::size_t i)
    {
        for (auto& x : a.row(i))
            x = -x;
        for (auto& x : p.row(i))
            x = -x;
    }

    // Smallest |nonzero| entry of the trailing block starting at (t, t); lowest row, then column.
    std::optional<std::pair<std::size_t, std::size_t>> smallest(std::size_t t) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                if (a(i, j) == 0)
                    continue;
                if (!best || abs(a(i, j)) < abs(a(best->first, best->second)))
                    best = {i, j};
            }
        return best;
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m, const BigInteger& max_delta)
{
    if (!m.square())
        throw DimensionError("Smith normal form needs a square matrix");
    const BigInteger det = determinant(m);
    if (det == 0)
        throw SingularMatrixError("Smith normal form of a singular matrix");
    const BigInteger delta = abs(det);
    if (delta > max_delta)
        throw ResourceError("Smith normal form: |det| = " + delta.get_str() + " exceeds limit " +
                            max_delta.get_str());

    const std::size_t n = m.rows();
    SnfState s{m, IntMatrix::identity(n), IntMatrix::identity(n)};
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            auto piv = s.smallest(t);
            // Nonsingular input: the trailing block never vanishes.
            s.swap_rows(t, piv->first);
            s.swap_cols(t, piv->second);
            const BigInteger pivot = s.a(t, t);

            bool dirty = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (s.a(i, t) == 0)
                    continue;
                s.add_row(i, t, -floor_div(s.a(i, t), pivot));
                dirty = dirty || s.a(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s.a(t, j) == 0)
                    continue;
                s.add_col(j, t, -floor_div(s.a(t, j), pivot));
                dirty = dirty || s.a(t, j) != 0;
            }
            if (dirty)
                continue;

            // Row and column t are clear; enforce pivot | every trailing entry.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < n && !bad_row; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s.a(i, j) % pivot != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row)
                break;
            s.add_row(t, *bad_row, 1);
        }
        if (s.a(t, t) < 0)
            s.negate_row(t);
    }
    return SmithDecomposition{std::move(s.p), std::move(s.a), std::move(s.q), delta};
}

BigInteger gcd_of(std::span<const BigInteger> v)
{
    BigInteger g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

void make_primitive(IntVector& v)
{
    const BigInteger g = gcd_of(v);
    if (g > 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

NormalizedRow gcd_normalize_row(std::span<const BigInteger> a, const BigInteger& beta)
{
    const BigInteger g = gcd_of(a);
    if (g == 0)
        throw DegenerateRowError("inequality with zero left-hand side");
    NormalizedRow out{IntVector(a.begin(), a.end()), beta};
    if (g != 1) {
        for (auto& x : out.a)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        out.beta = floor_div(beta, g);
    }
    return out;
}

BigInteger dot(std::span<const BigInteger> a, std::span<const BigInteger> b)
{
    BigInteger s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

BigRational dot(std::span<const BigInteger> a, std::span<const BigRational> x)
{
    BigRational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            s += a[i] * x[i];
    return s;
}

std::string to_string(const BigRational& q)
{
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

}  // namespace inthull
