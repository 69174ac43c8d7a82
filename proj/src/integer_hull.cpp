#include "inthull/integer_hull.hpp"

#include <algorithm>
#include <deque>

namespace inthull {

namespace {

using Clock = std::chrono::steady_clock;

bool lex_less(const RatVector& l, const RatVector& r)
{
    return std::lexicographical_compare(l.begin(), l.end(), r.begin(), r.end());
}

void add_equation_pairs(std::vector<Inequality>& facets, const std::vector<Inequality>& eqs)
{
    for (const auto& e : eqs) {
        facets.push_back(e);
        Inequality neg = e;
        for (auto& x : neg.a)
            x = -x;
        neg.beta = -neg.beta;
        facets.push_back(std::move(neg));
    }
}

HullResult empty_hull(RunStats stats, Clock::time_point start)
{
    HullResult r;
    r.status = HullStatus::EmptyHull;
    r.stats = std::move(stats);
    r.stats.wall_time = Clock::now() - start;
    return r;
}

HullResult finish(const DDPair& dd, RunStats stats, Clock::time_point start)
{
    HullResult r;
    std::vector<RatVector> pts;
    for (const auto& v : dd.vertices) {
        r.vertices.push_back(to_integer_point(v.coords));
        pts.push_back(v.coords);
    }
    std::sort(r.vertices.begin(), r.vertices.end());
    for (std::size_t i : irredundant_facets(dd))
        r.facets.push_back(dd.h.row(i));
    if (affine_dimension(pts) < static_cast<long>(dd.h.dim()))
        add_equation_pairs(r.facets, affine_hull_equations(pts));
    std::sort(r.facets.begin(), r.facets.end());
    r.stats = std::move(stats);
    r.stats.wall_time = Clock::now() - start;
    return r;
}

}  // namespace

void cache_basis_deltas(DDPair& dd)
{
    for (auto& v : dd.vertices)
        if (!v.basis_delta && !is_integer_point(v.coords))
            v.basis_delta = vertex_basis(v, dd.h).delta;
}

std::optional<VertexChoice> choose_vertex(const DDPair& dd)
{
    if (dd.status == DDStatus::Empty)
        return std::nullopt;
    if (!dd.bounded())
        throw UnboundedError("vertex selection on an unbounded polyhedron");
    const Vertex* best = nullptr;
    BigInteger best_delta;
    for (const auto& v : dd.vertices) {
        if (is_integer_point(v.coords))
            continue;
        const BigInteger delta = v.basis_delta ? *v.basis_delta : vertex_basis(v, dd.h).delta;
        if (!best || delta < best_delta || (delta == best_delta && lex_less(v.coords, best->coords))) {
            best = &v;
            best_delta = delta;
        }
    }
    if (!best)
        return std::nullopt;
    return VertexChoice{*best, vertex_basis(*best, dd.h)};
}

HullResult integer_hull(const HPolyhedron& h, const HullConfig& config)
{
    const auto start = Clock::now();
    if (h.dim() == 0)
        throw DimensionError("integer hull needs dimension >= 1");
    RunStats stats;
    DDPair dd = build(h, {.deadline = config.deadline});
    if (dd.status == DDStatus::Empty)
        return empty_hull(stats, start);
    if (!dd.bounded())
        throw UnboundedError("integer hull of an unbounded polyhedron");

    std::deque<Inequality> pending;
    for (;;) {
        config.deadline.check();
        cache_basis_deltas(dd);
        auto choice = choose_vertex(dd);
        if (!choice)
            break;
        if (stats.iterations >= config.max_iterations) {
            stats.wall_time = Clock::now() - start;
            throw IterationLimitError("iteration limit " + std::to_string(config.max_iterations) +
                                          " reached",
                                      stats);
        }
        ++stats.iterations;
        const BigInteger& delta = choice->basis.delta;
        stats.sum_delta += delta;
        if (delta > stats.max_delta)
            stats.max_delta = delta;

        const CutSet cuts = generate_cuts(choice->basis, choice->vertex.coords, config.cuts);
        if (config.on_iteration)
            config.on_iteration(IterationEvent{stats.iterations, dd, choice->vertex, choice->basis, cuts});

        // Cuts of the current vertex go first so it is always cut off.
        std::vector<Inequality> batch;
        const std::size_t budget = config.cuts_per_iteration.value_or(cuts.cuts.size() + pending.size());
        for (const auto& c : cuts.cuts) {
            if (batch.size() < std::max<std::size_t>(budget, 1))
                batch.push_back(c);
            else
                pending.push_back(c);
        }
        while (batch.size() < budget && !pending.empty()) {
            batch.push_back(std::move(pending.front()));
            pending.pop_front();
        }

        for (const auto& c : batch) {
            const std::size_t before = dd.h.size();
            dd = add_inequality(std::move(dd), c, config.deadline);
            if (dd.h.size() > before)
                ++stats.cuts_added;
            if (dd.status == DDStatus::Empty)
                return empty_hull(stats, start);
        }
    }
    return finish(dd, std::move(stats), start);
}

HullResult naive_hull(const HPolyhedron& h, const NaiveConfig& config)
{
    const auto start = Clock::now();
    const std::size_t d = h.dim();
    if (d == 0)
        throw DimensionError("naive hull needs dimension >= 1");
    const DDPair dd = build(h, {.deadline = config.deadline});
    if (dd.status == DDStatus::Empty)
        return empty_hull({}, start);
    if (!dd.bounded())
        throw UnboundedError("naive hull of an unbounded polyhedron");

    std::vector<RatVector> corners;
    for (const auto& v : dd.vertices)
        corners.push_back(v.coords);
    const LatticePointSet all =
        enumerate_lattice_points(h, bounding_box(corners), config.max_box_volume, config.deadline);
    if (all.points.empty())
        return empty_hull({}, start);

    // Only the two ends of each line parallel to the last axis can be extreme.
    std::vector<IntVector> candidates;
    const auto same_fiber = [d](const IntVector& a, const IntVector& b) {
        return std::equal(a.begin(), a.begin() + static_cast<long>(d - 1), b.begin());
    };
    for (std::size_t i = 0; i < all.points.size();) {
        std::size_t j = i;
        while (j + 1 < all.points.size() && same_fiber(all.points[i], all.points[j + 1]))
            ++j;
        candidates.push_back(all.points[i]);
        if (j != i)
            candidates.push_back(all.points[j]);
        i = j + 1;
    }

    // Valid inequalities (a, beta) of conv(candidates): a . p - beta <= 0 for all p.
    std::vector<IntVector> constraints;
    constraints.reserve(candidates.size());
    for (const auto& p : candidates) {
        IntVector c = p;
        c.push_back(-1);
        constraints.push_back(std::move(c));
    }
    std::vector<std::size_t> order(constraints.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    const ConeGenerators polar = cone_generators(constraints, d + 1, order, config.deadline);

    std::vector<RatVector> cand_q;
    for (const auto& p : candidates)
        cand_q.emplace_back(p.begin(), p.end());

    HullResult r;
    std::vector<std::vector<std::size_t>> tight_facets(candidates.size());
    for (std::size_t k = 0; k < polar.rays.size(); ++k) {
        const IntVector& y = polar.rays[k];
        IntVector a(y.begin(), y.begin() + static_cast<long>(d));
        if (polar.incidence[k].none() || gcd_of(a) == 0)
            continue;
        auto n = gcd_normalize_row(a, y[d]);
        for (auto i = polar.incidence[k].find_first(); i != RowSet::npos;
             i = polar.incidence[k].find_next(i))
            tight_facets[i].push_back(r.facets.size());
        r.facets.push_back(Inequality{std::move(n.a), std::move(n.beta)});
    }
    std::vector<Inequality> eqs;
    if (!polar.lines.empty())
        eqs = affine_hull_equations(cand_q);

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        RatMatrix normals(tight_facets[i].size() + eqs.size(), d);
        std::size_t row = 0;
        for (std::size_t f : tight_facets[i]) {
            for (std::size_t j = 0; j < d; ++j)
                normals(row, j) = r.facets[f].a[j];
            ++row;
        }
        for (const auto& e : eqs) {
            for (std::size_t j = 0; j < d; ++j)
                normals(row, j) = e.a[j];
            ++row;
        }
        if (rref(normals).rank == d)
            r.vertices.push_back(candidates[i]);
    }

    add_equation_pairs(r.facets, eqs);
    std::sort(r.vertices.begin(), r.vertices.end());
    std::sort(r.facets.begin(), r.facets.end());
    r.stats.wall_time = Clock::now() - start;
    return r;
}

}  // namespace inthull
