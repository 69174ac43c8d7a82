#pragma once

#include <cstddef>
#include <vector>

#include "inthull/polytope.hpp"

/**
 * Double description method. The polyhedron {x : A x <= b} is handled as the
 * cone {(x, t) : A x - b t <= 0, t >= 0}; extreme rays with t > 0 are vertices,
 * those with t = 0 are recession rays. Adjacency of two generators is decided
 * combinatorially: they are adjacent iff no third generator is tight on every
 * row the two share.
 */
namespace inthull {

enum class DDStatus { Feasible, Empty };

struct Ray
{
    IntVector direction;  // primitive
    RowSet incidence;
};

/** Matching V- and H-representation of one polyhedron. */
struct DDPair
{
    HPolyhedron h;
    std::vector<Vertex> vertices;
    std::vector<Ray> rays;
    /**
     * Lineality space basis (primitive vectors). When non-empty, P has no vertices and
     * `vertices` holds points of P that generate it together with the rays and lines.
     */
    std::vector<IntVector> lines;
    DDStatus status = DDStatus::Feasible;

    bool bounded() const { return rays.empty() && lines.empty(); }
};

struct BuildOptions
{
    /** Insert rows with fewer zero coefficients first. Does not change the result. */
    bool sort_rows = true;
    Deadline deadline{};
};

DDPair build(const HPolyhedron& h, const BuildOptions& options = {});

/**
 * DD pair of H + {row}. Generators strictly violating the row are dropped and
 * each adjacent (violating, satisfying) pair contributes the generator on the
 * hyperplane between them. A row that normalizes to an existing one leaves the
 * pair untouched. Surviving vertices keep their cached basis data.
 */
DDPair add_inequality(DDPair dd, const Inequality& row, const Deadline& deadline = {});

/**
 * Rows of the final system that define facets: rows whose tight vertices span an
 * affine space of dimension one less than the polytope. For a polytope that is not
 * full-dimensional, one row per distinct facet is returned (first in H order) and
 * rows tight on the whole polytope are left out; callers add the affine hull
 * equations separately. Throws UnsupportedStateError on empty or unbounded input.
 */
std::vector<std::size_t> irredundant_facets(const DDPair& dd);

/** Extreme rays and lineality of a polyhedral cone {y : c_i . y <= 0}. */
struct ConeGenerators
{
    std::vector<IntVector> rays;
    std::vector<RowSet> incidence;  // over constraint indices
    std::vector<IntVector> lines;
};

/**
 * Static DD on a homogeneous system in dimension n, processing constraints in the
 * given order (every index exactly once).
 */
ConeGenerators cone_generators(const std::vector<IntVector>& constraints, std::size_t n,
                               const std::vector<std::size_t>& order, const Deadline& deadline = {});

}  // namespace inthull
