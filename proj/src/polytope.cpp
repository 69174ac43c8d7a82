#include "inthull/polytope.hpp"

#include <algorithm>

#include "inthull/ddm.hpp"

namespace inthull {

HPolyhedron::HPolyhedron(std::size_t dim, const std::vector<Inequality>& rows) : dim_(dim)
{
    for (const auto& r : rows)
        add(r);
}

std::optional<std::size_t> HPolyhedron::add(std::span<const BigInteger> a, const BigInteger& beta)
{
    if (a.size() != dim_)
        throw DimensionError("inequality has " + std::to_string(a.size()) +
                             " coefficients, polyhedron dimension is " + std::to_string(dim_));
    if (gcd_of(a) == 0) {
        if (beta < 0)
            infeasible_ = true;
        return std::nullopt;
    }
    // Exact rescaling by gcd(a, beta): the half-space itself is unchanged.
    Inequality row{IntVector(a.begin(), a.end()), beta};
    BigInteger g = gcd_of(a);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), beta.get_mpz_t());
    if (g != 1) {
        for (auto& x : row.a)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(row.beta.get_mpz_t(), row.beta.get_mpz_t(), g.get_mpz_t());
    }
    if (!index_.insert(row).second)
        return std::nullopt;
    rows_.push_back(std::move(row));
    return rows_.size() - 1;
}

bool HPolyhedron::contains(std::span<const BigRational> x) const
{
    if (infeasible_)
        return false;
    return std::all_of(rows_.begin(), rows_.end(),
                       [&](const Inequality& r) { return dot(r.a, x) <= r.beta; });
}

bool HPolyhedron::contains(std::span<const BigInteger> x) const
{
    if (infeasible_)
        return false;
    return std::all_of(rows_.begin(), rows_.end(),
                       [&](const Inequality& r) { return dot(r.a, x) <= r.beta; });
}

BigInteger Box::volume() const
{
    BigInteger v = 1;
    for (std::size_t j = 0; j < lo.size(); ++j) {
        if (hi[j] < lo[j])
            return 0;
        v *= hi[j] - lo[j] + 1;
    }
    return v;
}

bool is_integer_point(std::span<const BigRational> v)
{
    return std::all_of(v.begin(), v.end(), [](const BigRational& x) { return x.get_den() == 1; });
}

IntVector to_integer_point(std::span<const BigRational> v)
{
    if (!is_integer_point(v))
        throw PreconditionError("point is not integral");
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(x.get_num());
    return out;
}

RowSet tight_rows(const HPolyhedron& h, std::span<const BigRational> x)
{
    RowSet s(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        if (dot(h.row(i).a, x) == h.row(i).beta)
            s.set(i);
    return s;
}

VertexBasis vertex_basis(const Vertex& v, const HPolyhedron& h)
{
    const std::size_t d = h.dim();
    std::vector<std::size_t> incident;
    for (auto i = v.incidence.find_first(); i != RowSet::npos; i = v.incidence.find_next(i))
        if (i < h.size())
            incident.push_back(i);

    // Columns of the transpose are the incident rows; its pivot columns pick the
    // first independent rows in H order.
    RatMatrix t(d, incident.size());
    for (std::size_t c = 0; c < incident.size(); ++c)
        for (std::size_t j = 0; j < d; ++j)
            t(j, c) = h.row(incident[c]).a[j];
    const auto echelon = rref(t);
    if (echelon.rank < d)
        throw DegenerateVertexError("vertex has incidence rank " + std::to_string(echelon.rank) +
                                    " < " + std::to_string(d));

    VertexBasis basis{IntMatrix(d, d), IntVector(d), 0, {}};
    for (std::size_t k = 0; k < d; ++k) {
        const auto& row = h.row(incident[echelon.pivot_cols[k]]);
        basis.rows.push_back(incident[echelon.pivot_cols[k]]);
        for (std::size_t j = 0; j < d; ++j)
            basis.a(k, j) = row.a[j];
        basis.b[k] = row.beta;
    }
    basis.delta = abs(determinant(basis.a));
#ifndef NDEBUG
    for (std::size_t k = 0; k < d; ++k)
        if (dot(basis.a.row(k), std::span<const BigRational>(v.coords)) != basis.b[k])
            throw DegenerateVertexError("basis row not tight at vertex");
    if (basis.delta == 0)
        throw DegenerateVertexError("singular vertex basis");
#endif
    return basis;
}

LatticePointSet enumerate_lattice_points(const HPolyhedron& h, const Box& box,
                                         const BigInteger& max_volume, const Deadline& deadline)
{
    const std::size_t d = h.dim();
    if (box.lo.size() != d || box.hi.size() != d)
        throw DimensionError("box dimension does not match polyhedron");
    LatticePointSet out;
    const BigInteger volume = box.volume();
    if (volume > max_volume)
        throw ResourceError("lattice scan box holds " + volume.get_str() + " points, limit " +
                            max_volume.get_str());
    if (volume == 0 || h.trivially_infeasible())
        return out;
    if (d == 0) {
        out.points.emplace_back();
        return out;
    }

    // Odometer over the box, last coordinate fastest; slack_i = beta_i - a_i . x kept incrementally.
    const auto& rows = h.rows();
    IntVector x = box.lo;
    IntVector slack(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        slack[i] = rows[i].beta - dot(rows[i].a, x);

    std::size_t ticks = 0;
    for (;;) {
        if ((++ticks & 0xfff) == 0)
            deadline.check();
        if (std::all_of(slack.begin(), slack.end(), [](const BigInteger& s) { return s >= 0; }))
            out.points.push_back(x);

        std::size_t j = d;
        while (j > 0) {
            --j;
            if (x[j] < box.hi[j]) {
                ++x[j];
                for (std::size_t i = 0; i < rows.size(); ++i)
                    slack[i] -= rows[i].a[j];
                break;
            }
            const BigInteger span = x[j] - box.lo[j];
            x[j] = box.lo[j];
            for (std::size_t i = 0; i < rows.size(); ++i)
                slack[i] += rows[i].a[j] * span;
            if (j == 0)
                return out;
        }
    }
}

LatticePointSet enumerate_lattice_points(const HPolyhedron& h, const BigInteger& max_volume,
                                         const Deadline& deadline)
{
    const DDPair dd = build(h, {.deadline = deadline});
    if (dd.status == DDStatus::Empty)
        return {};
    if (!dd.rays.empty() || !dd.lines.empty())
        throw UnboundedError("lattice enumeration needs a bounded polyhedron or an explicit box");
    std::vector<RatVector> pts;
    pts.reserve(dd.vertices.size());
    for (const auto& v : dd.vertices)
        pts.push_back(v.coords);
    return enumerate_lattice_points(h, bounding_box(pts), max_volume, deadline);
}

Box bounding_box(const std::vector<RatVector>& points)
{
    if (points.empty())
        throw PreconditionError("bounding box of an empty point set");
    const std::size_t d = points.front().size();
    Box box{IntVector(d), IntVector(d)};
    for (std::size_t j = 0; j < d; ++j) {
        BigRational lo = points.front()[j], hi = points.front()[j];
        for (const auto& p : points) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
        }
        box.lo[j] = ceil_of(lo);
        box.hi[j] = floor_of(hi);
    }
    return box;
}

long affine_dimension(const std::vector<RatVector>& points)
{
    if (points.empty())
        return -1;
    const std::size_t d = points.front().size();
    RatMatrix diffs(points.size() - 1, d);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            diffs(i - 1, j) = points[i][j] - points[0][j];
    return static_cast<long>(rref(diffs).rank);
}

std::vector<Inequality> affine_hull_equations(const std::vector<RatVector>& points)
{
    if (points.empty())
        throw PreconditionError("affine hull of an empty point set");
    const std::size_t d = points.front().size();
    // Unknowns (c, gamma) with c . p - gamma = 0 for every point.
    RatMatrix m(points.size(), d + 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j)
            m(i, j) = points[i][j];
        m(i, d) = -1;
    }
    const auto r = rref(m);
    std::vector<bool> is_pivot(d + 1, false);
    for (auto c : r.pivot_cols)
        is_pivot[c] = true;

    std::vector<Inequality> eqs;
    for (std::size_t free = 0; free <= d; ++free) {
        if (is_pivot[free])
            continue;
        RatVector sol(d + 1);
        sol[free] = 1;
        for (std::size_t k = 0; k < r.rank; ++k)
            sol[r.pivot_cols[k]] = -r.reduced(k, free);
        BigInteger lcm = 1;
        for (const auto& s : sol)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.get_den().get_mpz_t());
        IntVector ints(d + 1);
        for (std::size_t j = 0; j <= d; ++j) {
            BigRational scaled = sol[j] * lcm;
            ints[j] = scaled.get_num();
        }
        make_primitive(ints);
        Inequality e{IntVector(ints.begin(), ints.begin() + static_cast<long>(d)), ints[d]};
        eqs.push_back(std::move(e));
    }
    return eqs;
}

}  // namespace inthull
