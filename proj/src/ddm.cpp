#include "inthull/ddm.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <numeric>

namespace inthull {

namespace {

// p and q are adjacent iff no other generator is tight on all rows both are tight on.
bool adjacent(const std::vector<RowSet>& inc, std::size_t p, std::size_t q, std::size_t min_common,
              RowSet& common)
{
    common = inc[p];
    common &= inc[q];
    if (common.count() < min_common)
        return false;
    for (std::size_t r = 0; r < inc.size(); ++r) {
        if (r == p || r == q)
            continue;
        if (common.is_subset_of(inc[r]))
            return false;
    }
    return true;
}

// Cone {y : c . y <= 0} being built one constraint at a time.
class ConeState
{
public:
    ConeState(std::size_t n, std::size_t num_constraints) : n_(n), processed_(num_constraints)
    {
        for (std::size_t i = 0; i < n; ++i) {
            IntVector e(n);
            e[i] = 1;
            lines.push_back(std::move(e));
        }
    }

    ConeState(std::size_t n, RowSet processed) : n_(n), processed_(std::move(processed)) {}

    void add(const IntVector& c, std::size_t index, const Deadline& deadline)
    {
        deadline.check();
        std::size_t pivot = lines.size();
        BigInteger cl;
        for (std::size_t k = 0; k < lines.size(); ++k) {
            cl = dot(c, lines[k]);
            if (cl != 0) {
                pivot = k;
                break;
            }
        }
        if (pivot < lines.size())
            split_line(c, index, pivot, cl);
        else
            combine(c, index, deadline);
        processed_.set(index);
    }

    std::vector<IntVector> rays;
    std::vector<RowSet> inc;
    std::vector<IntVector> lines;

private:
    // The constraint cuts the lineality space: project everything onto its
    // hyperplane along the chosen line, which becomes a new ray.
    void split_line(const IntVector& c, std::size_t index, std::size_t pivot, const BigInteger& cl)
    {
        const IntVector l = lines[pivot];
        for (std::size_t k = 0; k < lines.size(); ++k) {
            if (k == pivot)
                continue;
            const BigInteger v = dot(c, lines[k]);
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < n_; ++j)
                lines[k][j] = cl * lines[k][j] - v * l[j];
            make_primitive(lines[k]);
        }
        const BigInteger scale = abs(cl);
        const int s = sgn(cl);
        for (std::size_t r = 0; r < rays.size(); ++r) {
            const BigInteger v = dot(c, rays[r]);
            if (v != 0) {
                for (std::size_t j = 0; j < n_; ++j)
                    rays[r][j] = scale * rays[r][j] - s * v * l[j];
                make_primitive(rays[r]);
            }
            inc[r].set(index);
        }
        IntVector ray = l;
        if (s > 0)
            for (auto& x : ray)
                x = -x;
        rays.push_back(std::move(ray));
        inc.push_back(processed_);
        lines.erase(lines.begin() + static_cast<long>(pivot));
    }

    void combine(const IntVector& c, std::size_t index, const Deadline& deadline)
    {
        std::vector<BigInteger> value(rays.size());
        std::vector<std::size_t> plus, minus;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(c, rays[r]);
            if (value[r] > 0)
                plus.push_back(r);
            else if (value[r] < 0)
                minus.push_back(r);
            else
                inc[r].set(index);
        }
        if (plus.empty())
            return;

        const std::size_t min_common = n_ >= lines.size() + 2 ? n_ - lines.size() - 2 : 0;
        std::vector<IntVector> new_rays;
        std::vector<RowSet> new_inc;
        RowSet common;
        for (std::size_t p : plus) {
            deadline.check();
            for (std::size_t q : minus) {
                if (!adjacent(inc, p, q, min_common, common))
                    continue;
                IntVector g(n_);
                for (std::size_t j = 0; j < n_; ++j)
                    g[j] = value[p] * rays[q][j] - value[q] * rays[p][j];
                make_primitive(g);
                common.set(index);
                new_rays.push_back(std::move(g));
                new_inc.push_back(common);
            }
        }

        std::vector<IntVector> kept_rays;
        std::vector<RowSet> kept_inc;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (value[r] > 0)
                continue;
            kept_rays.push_back(std::move(rays[r]));
            kept_inc.push_back(std::move(inc[r]));
        }
        for (std::size_t k = 0; k < new_rays.size(); ++k) {
            kept_rays.push_back(std::move(new_rays[k]));
            kept_inc.push_back(std::move(new_inc[k]));
        }
        rays = std::move(kept_rays);
        inc = std::move(kept_inc);
    }

    std::size_t n_;
    RowSet processed_;
};

// Cone constraint 0 is t >= 0; cone constraint i + 1 is H row i.
IntVector homogenize(const Inequality& row)
{
    IntVector c(row.a);
    c.push_back(-row.beta);
    return c;
}

IntVector homogenize(const RatVector& x)
{
    BigInteger lcm = 1;
    for (const auto& q : x)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    IntVector g;
    g.reserve(x.size() + 1);
    for (const auto& q : x) {
        BigInteger v = q.get_num() * lcm;
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), q.get_den().get_mpz_t());
        g.push_back(std::move(v));
    }
    g.push_back(lcm);
    make_primitive(g);
    return g;
}

RowSet drop_homogenizing_bit(const RowSet& cone_inc, std::size_t m)
{
    RowSet out = cone_inc >> 1;
    out.resize(m);
    return out;
}

RowSet add_homogenizing_bit(RowSet inc, std::size_t cone_size, bool tight)
{
    inc.resize(cone_size);
    inc <<= 1;
    inc[0] = tight;
    return inc;
}

DDPair from_cone(ConeState&& cone, HPolyhedron h)
{
    const std::size_t d = h.dim();
    const std::size_t m = h.size();
    DDPair dd{std::move(h), {}, {}, {}, DDStatus::Feasible};
    for (std::size_t r = 0; r < cone.rays.size(); ++r) {
        const IntVector& g = cone.rays[r];
        if (g[d] > 0) {
            RatVector x(d);
            for (std::size_t j = 0; j < d; ++j)
                x[j] = make_rational(g[j], g[d]);
            dd.vertices.push_back(Vertex{std::move(x), drop_homogenizing_bit(cone.inc[r], m), {}});
        } else {
            dd.rays.push_back(
                Ray{IntVector(g.begin(), g.begin() + static_cast<long>(d)),
                    drop_homogenizing_bit(cone.inc[r], m)});
        }
    }
    for (auto& l : cone.lines) {
        IntVector v(l.begin(), l.begin() + static_cast<long>(d));
        make_primitive(v);
        dd.lines.push_back(std::move(v));
    }
    if (dd.vertices.empty()) {
        dd.status = DDStatus::Empty;
        dd.rays.clear();
        dd.lines.clear();
    }
    return dd;
}

DDPair empty_pair(HPolyhedron h)
{
    return DDPair{std::move(h), {}, {}, {}, DDStatus::Empty};
}

// General insertion through the cone form; used when the pair carries lines.
DDPair add_via_cone(DDPair dd, const Inequality& row, std::size_t index, const Deadline& deadline)
{
    const std::size_t d = dd.h.dim();
    const std::size_t cone_size = dd.h.size() + 1;
    RowSet processed(cone_size);
    processed.set();
    processed.reset(index + 1);
    ConeState cone(d + 1, processed);
    for (const auto& v : dd.vertices) {
        cone.rays.push_back(homogenize(v.coords));
        cone.inc.push_back(add_homogenizing_bit(v.incidence, cone_size, false));
    }
    for (const auto& r : dd.rays) {
        IntVector g = r.direction;
        g.push_back(0);
        cone.rays.push_back(std::move(g));
        cone.inc.push_back(add_homogenizing_bit(r.incidence, cone_size, true));
    }
    for (const auto& l : dd.lines) {
        IntVector g = l;
        g.push_back(0);
        cone.lines.push_back(std::move(g));
    }
    cone.add(homogenize(row), index + 1, deadline);
    return from_cone(std::move(cone), std::move(dd.h));
}

}  // namespace

ConeGenerators cone_generators(const std::vector<IntVector>& constraints, std::size_t n,
                               const std::vector<std::size_t>& order, const Deadline& deadline)
{
    ConeState cone(n, constraints.size());
    for (std::size_t idx : order)
        cone.add(constraints.at(idx), idx, deadline);
    return ConeGenerators{std::move(cone.rays), std::move(cone.inc), std::move(cone.lines)};
}

DDPair build(const HPolyhedron& h, const BuildOptions& options)
{
    if (h.trivially_infeasible())
        return empty_pair(h);
    const std::size_t d = h.dim();
    const std::size_t m = h.size();

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (options.sort_rows) {
        auto zeros = [&](std::size_t i) {
            const auto& a = h.row(i).a;
            return std::count(a.begin(), a.end(), 0);
        };
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t l, std::size_t r) { return zeros(l) < zeros(r); });
    }

    ConeState cone(d + 1, m + 1);
    IntVector t_nonneg(d + 1);
    t_nonneg[d] = -1;
    cone.add(t_nonneg, 0, options.deadline);
    for (std::size_t i : order)
        cone.add(homogenize(h.row(i)), i + 1, options.deadline);
    return from_cone(std::move(cone), h);
}

DDPair add_inequality(DDPair dd, const Inequality& row, const Deadline& deadline)
{
    if (dd.status == DDStatus::Empty) {
        dd.h.add(row);
        return dd;
    }
    const auto added = dd.h.add(row);
    if (dd.h.trivially_infeasible())
        return empty_pair(std::move(dd.h));
    if (!added)
        return dd;
    const std::size_t index = *added;
    const Inequality r = dd.h.row(index);
    const std::size_t m = dd.h.size();
    for (auto& v : dd.vertices)
        v.incidence.resize(m);
    for (auto& ray : dd.rays)
        ray.incidence.resize(m);
    if (!dd.lines.empty())
        return add_via_cone(std::move(dd), r, index, deadline);

    // Affine step on vertices and rays. Generator g's combined incidence is its
    // row set plus a final bit marking rays (tight on t >= 0).
    const std::size_t d = dd.h.dim();
    const std::size_t nv = dd.vertices.size();
    const std::size_t ng = nv + dd.rays.size();
    std::vector<BigRational> slack(ng);
    std::vector<RowSet> inc(ng);
    std::vector<std::size_t> plus, minus;
    for (std::size_t g = 0; g < ng; ++g) {
        if (g < nv) {
            slack[g] = dot(r.a, std::span<const BigRational>(dd.vertices[g].coords)) - r.beta;
            inc[g] = dd.vertices[g].incidence;
        } else {
            slack[g] = dot(r.a, dd.rays[g - nv].direction);
            inc[g] = dd.rays[g - nv].incidence;
        }
        if (slack[g] > 0)
            plus.push_back(g);
        else if (slack[g] < 0)
            minus.push_back(g);
        else
            inc[g].set(index);
        inc[g].resize(m + 1);
        inc[g][m] = g >= nv;
    }
    if (plus.empty()) {
        for (std::size_t g = 0; g < ng; ++g)
            if (slack[g] == 0) {
                if (g < nv)
                    dd.vertices[g].incidence.set(index);
                else
                    dd.rays[g - nv].incidence.set(index);
            }
        return dd;
    }

    const std::size_t min_common = d >= 1 ? d - 1 : 0;
    std::vector<Vertex> new_vertices;
    std::vector<Ray> new_rays;
    RowSet common;
    for (std::size_t p : plus) {
        deadline.check();
        for (std::size_t q : minus) {
            if (!adjacent(inc, p, q, min_common, common))
                continue;
            RowSet rows = common;
            rows.resize(m);
            rows.set(index);
            const bool p_ray = p >= nv;
            const bool q_ray = q >= nv;
            if (p_ray && q_ray) {
                const auto& rp = dd.rays[p - nv].direction;
                const auto& rq = dd.rays[q - nv].direction;
                const BigInteger sp = slack[p].get_num();
                const BigInteger sq = slack[q].get_num();
                IntVector dir(d);
                for (std::size_t j = 0; j < d; ++j)
                    dir[j] = sp * rq[j] - sq * rp[j];
                make_primitive(dir);
                new_rays.push_back(Ray{std::move(dir), std::move(rows)});
                continue;
            }
            RatVector x(d);
            if (!p_ray && !q_ray) {
                const auto& vp = dd.vertices[p].coords;
                const auto& vq = dd.vertices[q].coords;
                const BigRational denom = slack[p] - slack[q];
                for (std::size_t j = 0; j < d; ++j)
                    x[j] = (slack[p] * vq[j] - slack[q] * vp[j]) / denom;
            } else if (!p_ray) {
                const auto& vp = dd.vertices[p].coords;
                const auto& rq = dd.rays[q - nv].direction;
                const BigRational step = -slack[p] / slack[q];
                for (std::size_t j = 0; j < d; ++j)
                    x[j] = vp[j] + step * rq[j];
            } else {
                const auto& rp = dd.rays[p - nv].direction;
                const auto& vq = dd.vertices[q].coords;
                const BigRational step = -slack[q] / slack[p];
                for (std::size_t j = 0; j < d; ++j)
                    x[j] = vq[j] + step * rp[j];
            }
            new_vertices.push_back(Vertex{std::move(x), std::move(rows), {}});
        }
    }

    std::vector<Vertex> vertices;
    std::vector<Ray> rays;
    for (std::size_t g = 0; g < ng; ++g) {
        if (slack[g] > 0)
            continue;
        if (g < nv) {
            vertices.push_back(std::move(dd.vertices[g]));
            if (slack[g] == 0)
                vertices.back().incidence.set(index);
        } else {
            rays.push_back(std::move(dd.rays[g - nv]));
            if (slack[g] == 0)
                rays.back().incidence.set(index);
        }
    }
    std::move(new_vertices.begin(), new_vertices.end(), std::back_inserter(vertices));
    std::move(new_rays.begin(), new_rays.end(), std::back_inserter(rays));
    dd.vertices = std::move(vertices);
    dd.rays = std::move(rays);
    if (dd.vertices.empty())
        return empty_pair(std::move(dd.h));
    return dd;
}

std::vector<std::size_t> irredundant_facets(const DDPair& dd)
{
    if (dd.status == DDStatus::Empty)
        throw UnsupportedStateError("facets of an empty polyhedron");
    if (!dd.bounded())
        throw UnsupportedStateError("facets of an unbounded polyhedron");
    std::vector<RatVector> all;
    all.reserve(dd.vertices.size());
    for (const auto& v : dd.vertices)
        all.push_back(v.coords);
    const long dim = affine_dimension(all);
    const bool full = dim == static_cast<long>(dd.h.dim());

    std::vector<std::size_t> facets;
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t i = 0; i < dd.h.size(); ++i) {
        std::vector<RatVector> tight;
        std::vector<std::size_t> ids;
        for (std::size_t k = 0; k < dd.vertices.size(); ++k)
            if (dd.vertices[k].incidence.test(i)) {
                tight.push_back(dd.vertices[k].coords);
                ids.push_back(k);
            }
        if (tight.empty() || (!full && tight.size() == all.size()))
            continue;
        if (affine_dimension(tight) != dim - 1)
            continue;
        if (!full && !seen.insert(ids).second)
            continue;
        facets.push_back(i);
    }
    return facets;
}

}  // namespace inthull
