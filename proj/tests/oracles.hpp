#pragma once

// Brute-force reference computations for the tests. Nothing in here calls the
// library's determinant, rref, Smith form or DD code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "inthull/polytope.hpp"

namespace oracle {

using inthull::BigInteger;
using inthull::BigRational;
using inthull::HPolyhedron;
using inthull::Inequality;
using inthull::IntVector;
using inthull::RatVector;

using Grid = std::vector<std::vector<BigInteger>>;

inline BigInteger cofactor_det(const Grid& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    BigInteger det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0)
            continue;
        Grid minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<BigInteger> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        const BigInteger term = m[0][c] * cofactor_det(minor);
        det += (c % 2 == 0) ? term : BigInteger(-term);
    }
    return det;
}

/** Solve A x = b by Cramer's rule; nullopt when A is singular. */
inline std::optional<RatVector> cramer(const Grid& a, const std::vector<BigInteger>& b)
{
    const BigInteger det = cofactor_det(a);
    if (det == 0)
        return std::nullopt;
    const std::size_t n = a.size();
    RatVector x(n);
    for (std::size_t j = 0; j < n; ++j) {
        Grid aj = a;
        for (std::size_t i = 0; i < n; ++i)
            aj[i][j] = b[i];
        x[j] = BigRational(cofactor_det(aj), det);
        x[j].canonicalize();
    }
    return x;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

inline bool feasible(const HPolyhedron& h, const RatVector& x)
{
    for (const auto& r : h.rows()) {
        BigRational s = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            s += r.a[j] * x[j];
        if (s > r.beta)
            return false;
    }
    return true;
}

/** Vertices of H: solutions of every nonsingular d-row subsystem that satisfy all rows. */
inline std::set<RatVector> brute_force_vertices(const HPolyhedron& h)
{
    std::set<RatVector> out;
    const std::size_t d = h.dim();
    for_each_subset(h.size(), d, [&](const std::vector<std::size_t>& rows) {
        Grid a;
        std::vector<BigInteger> b;
        for (std::size_t i : rows) {
            a.push_back(h.row(i).a);
            b.push_back(h.row(i).beta);
        }
        if (auto x = cramer(a, b); x && feasible(h, *x))
            out.insert(*x);
    });
    return out;
}

/** {u in [0, delta)^d : u A = 0 mod delta} by exhaustive scan, lexicographic order. */
inline std::vector<std::vector<std::int64_t>> brute_force_residues(const std::vector<std::vector<std::int64_t>>& a,
                                                                    std::int64_t delta)
{
    const std::size_t d = a.size();
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> u(d, 0);
    for (;;) {
        bool ok = true;
        for (std::size_t j = 0; j < d && ok; ++j) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < d; ++i)
                s += u[i] * a[i][j];
            ok = ((s % delta) + delta) % delta == 0;
        }
        if (ok)
            out.push_back(u);
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (++u[i] < delta)
                break;
            u[i] = 0;
            if (i == 0)
                return out;
        }
    }
}

/** Lattice points of H in [lo, hi] by recursion over coordinates. */
inline std::vector<IntVector> lattice_points_recursive(const HPolyhedron& h, const IntVector& lo,
                                                       const IntVector& hi)
{
    std::vector<IntVector> out;
    IntVector x(h.dim());
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == h.dim()) {
            for (const auto& r : h.rows()) {
                BigInteger s = 0;
                for (std::size_t k = 0; k < x.size(); ++k)
                    s += r.a[k] * x[k];
                if (s > r.beta)
                    return;
            }
            out.push_back(x);
            return;
        }
        for (x[j] = lo[j]; x[j] <= hi[j]; ++x[j])
            rec(j + 1);
    };
    rec(0);
    return out;
}

/** Rank by plain rational Gaussian elimination. */
inline std::size_t rank_of(std::vector<RatVector> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t n = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const BigRational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < n; ++k)
                rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

/**
 * Vertices of conv(points) for a full-dimensional point set: a point is a vertex
 * iff the facet hyperplanes through it have normals of rank d. Facet hyperplanes
 * are found by trying every d-subset of points (exponential; tiny inputs only).
 */
inline std::set<IntVector> brute_force_hull_vertices(const std::vector<IntVector>& pts)
{
    const std::size_t d = pts.empty() ? 0 : pts.front().size();
    std::vector<std::vector<RatVector>> normals(pts.size());
    for_each_subset(pts.size(), d, [&](const std::vector<std::size_t>& idx) {
        // Hyperplane c . x = gamma through the chosen points: c from cofactors of the differences.
        Grid diff;
        for (std::size_t k = 1; k < d; ++k) {
            std::vector<BigInteger> row(d);
            for (std::size_t j = 0; j < d; ++j)
                row[j] = pts[idx[k]][j] - pts[idx[0]][j];
            diff.push_back(std::move(row));
        }
        IntVector c(d);
        for (std::size_t j = 0; j < d; ++j) {
            Grid m = diff;
            std::vector<BigInteger> ej(d);
            ej[j] = 1;
            m.insert(m.begin(), ej);
            c[j] = cofactor_det(m);
        }
        if (std::all_of(c.begin(), c.end(), [](const BigInteger& v) { return v == 0; }))
            return;
        BigInteger gamma = 0;
        for (std::size_t j = 0; j < d; ++j)
            gamma += c[j] * pts[idx[0]][j];
        bool le = true, ge = true;
        for (const auto& p : pts) {
            BigInteger s = 0;
            for (std::size_t j = 0; j < d; ++j)
                s += c[j] * p[j];
            le = le && s <= gamma;
            ge = ge && s >= gamma;
        }
        if (!le && !ge)
            return;
        RatVector cn(c.begin(), c.end());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            BigInteger s = 0;
            for (std::size_t j = 0; j < d; ++j)
                s += c[j] * pts[i][j];
            if (s == gamma)
                normals[i].push_back(cn);
        }
    });
    std::set<IntVector> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (rank_of(normals[i]) == d)
            out.insert(pts[i]);
    return out;
}

/** Random inequality system inside a box [-r, r]^d plus `extra` random rows. */
inline HPolyhedron random_bounded(std::mt19937_64& rng, std::size_t d, std::size_t extra, long coef,
                                  long r)
{
    std::uniform_int_distribution<long> c(-coef, coef);
    std::uniform_int_distribution<long> rhs(0, r * coef);
    HPolyhedron h(d);
    for (std::size_t j = 0; j < d; ++j) {
        IntVector e(d);
        e[j] = 1;
        h.add(e, r);
        e[j] = -1;
        h.add(e, r);
    }
    for (std::size_t k = 0; k < extra; ++k) {
        IntVector a(d);
        for (auto& x : a)
            x = c(rng);
        if (std::all_of(a.begin(), a.end(), [](const BigInteger& v) { return v == 0; }))
            continue;
        h.add(a, rhs(rng));
    }
    return h;
}

inline std::set<RatVector> vertex_set(const std::vector<inthull::Vertex>& vs)
{
    std::set<RatVector> s;
    for (const auto& v : vs)
        s.insert(v.coords);
    return s;
}

}  // namespace oracle
