#include <algorithm>
#include <random>

#include <doctest.h>

#include "inthull/ddm.hpp"
#include "oracles.hpp"

using namespace inthull;

namespace {

HPolyhedron make(std::size_t d, std::vector<std::vector<long>> rows)
{
    HPolyhedron h(d);
    for (const auto& r : rows) {
        IntVector a(r.begin(), r.end() - 1);
        h.add(a, r.back());
    }
    return h;
}

Inequality ineq(std::vector<long> r)
{
    return Inequality{IntVector(r.begin(), r.end() - 1), r.back()};
}

std::set<RatVector> pts(std::vector<RatVector> v)
{
    return {v.begin(), v.end()};
}

HPolyhedron unit_square()
{
    return make(2, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 0}, {0, -1, 0}});
}

void check_incidence(const DDPair& dd)
{
    for (const auto& v : dd.vertices)
        CHECK(v.incidence == tight_rows(dd.h, v.coords));
}

}  // namespace

TEST_CASE("build examples")
{
    const auto simplex = build(make(2, {{1, 1, 1}, {-1, 0, 0}, {0, -1, 0}}));
    CHECK(simplex.status == DDStatus::Feasible);
    CHECK(oracle::vertex_set(simplex.vertices) == pts({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(simplex.bounded());
    check_incidence(simplex);

    const auto seg = build(make(1, {{1, 1}, {-1, 0}}));
    CHECK(oracle::vertex_set(seg.vertices) == pts({{0}, {1}}));

    const auto half = build(make(1, {{-1, 0}}));
    CHECK(oracle::vertex_set(half.vertices) == pts({{0}}));
    REQUIRE(half.rays.size() == 1);
    CHECK(half.rays[0].direction == IntVector{1});
    CHECK(half.lines.empty());
}

TEST_CASE("build reports empty systems")
{
    CHECK(build(make(1, {{2, 1}, {-2, -2}})).status == DDStatus::Empty);
    CHECK(build(make(2, {{1, 1, -1}, {-1, 0, 0}, {0, -1, 0}})).status == DDStatus::Empty);
    HPolyhedron bad(2);
    bad.add(IntVector{0, 0}, -1);
    CHECK(build(bad).status == DDStatus::Empty);
}

TEST_CASE("build finds lineality when there are no vertices")
{
    // With lines present the stored points generate P together with rays and lines.
    const auto strip = build(make(2, {{0, 1, 1}, {0, -1, 0}}));
    CHECK(oracle::vertex_set(strip.vertices) == pts({{0, 0}, {0, 1}}));
    REQUIRE(strip.lines.size() == 1);
    CHECK(strip.lines[0][1] == 0);
    CHECK_FALSE(strip.bounded());
    const auto all = build(HPolyhedron(2));
    CHECK(all.lines.size() == 2);
}

TEST_CASE("build matches brute-force vertex enumeration")
{
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const std::size_t extra = std::min<std::size_t>(8 - 2 * d, 1 + trial % 5);
        const HPolyhedron h = oracle::random_bounded(rng, d, extra, 6, 5);
        const DDPair dd = build(h);
        REQUIRE(dd.status == DDStatus::Feasible);
        CHECK(dd.bounded());
        CHECK(oracle::vertex_set(dd.vertices) == oracle::brute_force_vertices(h));
        CHECK(dd.vertices.size() == oracle::vertex_set(dd.vertices).size());
        check_incidence(dd);
        // Row order does not matter.
        CHECK(oracle::vertex_set(build(h, {.sort_rows = false}).vertices) == oracle::vertex_set(dd.vertices));
    }
}

TEST_CASE("add_inequality examples")
{
    const auto sq = build(unit_square());
    const auto cut = add_inequality(sq, ineq({1, 1, 1}));
    CHECK(oracle::vertex_set(cut.vertices) == pts({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(oracle::vertex_set(cut.vertices) == oracle::vertex_set(build(cut.h).vertices));

    const auto red = add_inequality(sq, ineq({1, 0, 5}));
    CHECK(oracle::vertex_set(red.vertices) == oracle::vertex_set(sq.vertices));
    CHECK(red.h.size() == 5);

    CHECK(add_inequality(sq, ineq({1, 0, -1})).status == DDStatus::Empty);

    // Re-adding an existing row is a no-op.
    const auto same = add_inequality(sq, ineq({2, 0, 2}));
    CHECK(same.h.size() == 4);
    CHECK(oracle::vertex_set(same.vertices) == oracle::vertex_set(sq.vertices));
}

TEST_CASE("add_inequality keeps cached basis data of surviving vertices")
{
    auto sq = build(unit_square());
    for (auto& v : sq.vertices)
        v.basis_delta = BigInteger(7);
    const auto cut = add_inequality(sq, ineq({1, 1, 1}));
    for (const auto& v : cut.vertices) {
        if (v.coords == RatVector{0, 0})
            CHECK(v.basis_delta == BigInteger(7));
    }
}

TEST_CASE("add_inequality through unbounded and line-containing states")
{
    auto dd = build(HPolyhedron(2));
    dd = add_inequality(dd, ineq({-1, 0, 0}));
    CHECK(oracle::vertex_set(dd.vertices) == pts({{0, 0}}));
    CHECK(dd.lines.size() == 1);
    dd = add_inequality(dd, ineq({0, -1, 0}));
    CHECK(oracle::vertex_set(dd.vertices) == pts({{0, 0}}));
    CHECK(dd.rays.size() == 2);
    dd = add_inequality(dd, ineq({1, 1, 3}));
    CHECK(dd.bounded());
    CHECK(oracle::vertex_set(dd.vertices) == pts({{0, 0}, {3, 0}, {0, 3}}));
}

TEST_CASE("incremental insertion equals a static rebuild")
{
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> coef(-7, 7), rhs(-3, 30);
    int nonempty = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t d = 2 + trial % 2;
        DDPair dd = build(oracle::random_bounded(rng, d, trial % 3, 5, 6));
        for (int step = 0; step < 4; ++step) {
            Inequality r{IntVector(d), rhs(rng)};
            for (auto& x : r.a)
                x = coef(rng);
            if (gcd_of(r.a) == 0)
                continue;
            dd = add_inequality(std::move(dd), r);
            const DDPair ref = build(dd.h);
            REQUIRE(dd.status == ref.status);
            if (dd.status == DDStatus::Empty)
                break;
            CHECK(oracle::vertex_set(dd.vertices) == oracle::vertex_set(ref.vertices));
            CHECK(dd.vertices.size() == ref.vertices.size());
            check_incidence(dd);
        }
        nonempty += dd.status == DDStatus::Feasible;
    }
    CHECK(nonempty > 100);
}

TEST_CASE("irredundant_facets examples")
{
    const auto simplex = build(make(2, {{1, 1, 1}, {-1, 0, 0}, {0, -1, 0}}));
    CHECK(irredundant_facets(simplex) == std::vector<std::size_t>{0, 1, 2});

    auto sq = unit_square();
    sq.add(IntVector{1, 1}, 5);
    CHECK(irredundant_facets(build(sq)) == std::vector<std::size_t>{0, 1, 2, 3});

    const auto tri = make(2, {{1, 1, 1}, {-1, 0, 0}, {0, -1, 0}, {1, 1, 2}});
    CHECK(irredundant_facets(build(tri)) == std::vector<std::size_t>{0, 1, 2});

    // A row through a single vertex is not a facet.
    const auto touch = make(2, {{1, 1, 1}, {-1, 0, 0}, {0, -1, 0}, {1, 2, 2}});
    CHECK(irredundant_facets(build(touch)) == std::vector<std::size_t>{0, 1, 2});

    CHECK_THROWS_AS(irredundant_facets(build(make(1, {{-1, 0}}))), UnsupportedStateError);
    CHECK_THROWS_AS(irredundant_facets(build(make(1, {{1, -1}, {-1, 0}}))), UnsupportedStateError);
}

TEST_CASE("irredundant_facets on a lower-dimensional polytope")
{
    // Segment from (0,0) to (1,1) as x - y <= 0, y - x <= 0, 0 <= x <= 1.
    const auto seg = make(2, {{1, -1, 0}, {-1, 1, 0}, {1, 0, 1}, {-1, 0, 0}});
    CHECK(irredundant_facets(build(seg)) == std::vector<std::size_t>{2, 3});
}

TEST_CASE("cone generators of the positive orthant")
{
    const std::vector<IntVector> c{{-1, 0}, {0, -1}};
    const auto g = cone_generators(c, 2, {0, 1});
    CHECK(g.lines.empty());
    std::set<IntVector> rays(g.rays.begin(), g.rays.end());
    CHECK(rays == std::set<IntVector>{{1, 0}, {0, 1}});
}
